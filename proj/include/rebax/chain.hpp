#pragma once

#include "rebax/reflection.hpp"

namespace rebax {

// Right (conjugated) boundary: a local one-site N x N spectral family.
struct RightBoundary {
  std::string kind = "trivial";  // trivial | conjugated
  SpectralOp Kt;
  Matrix Ltilde;
  Scalar xi2;
};

// Open chain of `sites` sites: n = sites + 1 tensor copies of V are used
// before the quantum trace removes copy n, so transfer matrices and
// Hamiltonians act on sites 1..n-1 (plus the optional quantum factor W of
// an evaluation boundary, kept as the trailing factor).
struct ChainModel {
  Representation rep;
  std::size_t sites = 1;
  BoundarySolution left;
  RightBoundary right;

  std::size_t n() const { return sites + 1; }
  std::size_t w_dim() const { return left.w_dim; }
  std::vector<std::size_t> pre_trace_shape() const;
  std::vector<std::size_t> post_trace_shape() const;
};

RightBoundary make_trivial_right();
// Ktilde(x) = (Ltilde - xi2 sqrt(b)/x)(Ltilde - xi2 x/sqrt(b))^{-1}; Ltilde
// must solve the constant reflection equation.
RightBoundary make_conjugated_right(const Representation& rep, Matrix ltilde,
                                    const Scalar& xi2);

ChainModel make_chain(Representation rep, std::size_t sites,
                      BoundarySolution left, RightBoundary right);

// Dressed boundary ybar_n(x) = R_{n-1}(x)...R_1(x) K_1(x) R_1(x)...R_{n-1}(x)
// on the full pre-trace space.
Matrix dress(const ChainModel& chain, const Scalar& x);

// tau(x) = Tr_{D(n)}(ybar_n(x)); t(x) = Tr_{D(n)}(ybar_n(x) Ktilde_n(x)).
Matrix tau(const ChainModel& chain, const Scalar& x);
Matrix t_full(const ChainModel& chain, const Scalar& x);

enum class Ham { H0, H1, H2, H3, H4, H5, H6, H7 };
Ham ham_from_name(const std::string& name);
const char* ham_name(Ham h);

// The open-chain Hamiltonians, additive constants dropped:
//   H1 = sum_m Rhat_m                      (free boundaries, Hecke)
//   H2 = H1 + lambda xi (L - xi)^{-1}      (left boundary, Hecke)
//   H0 = H1 - (lambda/2) K'(1) + Tr_{D(n)}(Rhat_{n-1} Kt_n(1))/Tr_{D(n)}(Kt_n(1))
//   H3 = the same with the closed-form left term and 1/xi' normalization
//   H5 = sum_m (Rhat_m + lambda nu/(nu+a) Khat_m)   (BMW, free boundaries)
//   H4 = H5 + lambda xi (L - xi)^{-1}               (BMW, left boundary)
//   H6/H7 = BMW two-boundary analogues of H0/H3
Matrix hamiltonian(const ChainModel& chain, Ham kind);

// [H, t(z)] = 0 at every sample (tau when the right boundary is trivial).
CheckResult check_h_commutes(const ChainModel& chain, Ham kind,
                             const std::vector<Scalar>& zs);

struct Spectrum {
  std::vector<Scalar> char_poly;  // ascending, monic, exact
  std::vector<std::pair<Scalar, std::size_t>> exact_roots;
  // Roots of the non-rational remainder factor, floating point, approximate.
  std::vector<std::pair<double, double>> approx_roots;
};
Spectrum spectrum(const Matrix& h);

}  // namespace rebax

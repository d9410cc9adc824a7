#pragma once

#include <functional>
#include <optional>

#include "rebax/baxter.hpp"

namespace rebax {

// Spectral-parameter family x -> K(x) with its pole list. Evaluation at a
// listed exclusion throws PoleError before the builder runs.
struct SpectralOp {
  std::function<Matrix(const Scalar&)> build;
  std::vector<Scalar> exclusions;
  Matrix operator()(const Scalar& x) const;
};

// Boundary package: the constant solution L, the spectral builder, and the
// kind-specific constants.
struct BoundarySolution {
  std::string kind;  // trivial|rational|polynomial|small|bmw_deg2|bmw_deg4|evaluation
  Matrix L;          // acts on site 1, plus a trailing quantum factor if w_dim
  std::size_t w_dim = 0;
  Scalar xi;
  std::vector<Scalar> alpha;  // alpha_0..alpha_m, the monic alpha_{m+1} = 1 implied
  Scalar c;                   // BMW central constant
  std::vector<Scalar> Q;      // Q^(0), Q^(1), ...
  Scalar zeta;                // small solutions
  SpectralOp K;
};

// Constant reflection equation Rhat L1 Rhat L1 = L1 Rhat L1 Rhat on
// V (x) V (x optional quantum factor).
CheckResult check_constant_re(const Representation& rep, const Matrix& l);

// U_q(gl(2)) evaluation-representation boundary: triangular generator
// matrices L+- on V_aux (x) W with W two-dimensional, entries rational in q
// (half-integer powers absorbed by rescaling L-). All three exchange
// relations and the intertwining relation for L(x) = L+ - x L- are verified
// at construction; L = (L-)^{-1} L+ solves the constant reflection equation.
struct EvaluationBoundary {
  Matrix Lplus, Lminus, L;  // 4x4, factors {2, 2}
};
EvaluationBoundary evaluation_boundary(const Scalar& q);

// K(x) = (L - xi x)(L - xi/x)^{-1}; regular (K(1) = I) and unitary.
Matrix rational_boundary(const Matrix& l, const Scalar& xi, const Scalar& x);

// Rational x values at which (L - xi x) or (L - xi/x) degenerates.
std::vector<Scalar> rational_boundary_exclusions(const Matrix& l,
                                                 const Scalar& xi);

BoundarySolution make_trivial_boundary(const Representation& rep);
BoundarySolution make_rational_boundary(const Representation& rep, Matrix l,
                                        const Scalar& xi,
                                        std::size_t w_dim = 0,
                                        const std::string& kind = "rational");

// Coefficients b_0..b_m of 1/(L - xi/x) = sum_k b_k(x) L^k for a monic
// annihilating polynomial with ascending coefficients alpha_0..alpha_m (the
// leading 1 implied).
std::vector<Scalar> cyclotomic_inverse_coeffs(const std::vector<Scalar>& alpha,
                                              const Scalar& xi,
                                              const Scalar& x);

// Polynomial form (L - xi x) sum_k b_k(x) L^k of the rational solution;
// equal to rational_boundary whenever alpha annihilates L.
Matrix polynomial_boundary(const std::vector<Scalar>& alpha, const Scalar& xi,
                           const Matrix& l, const Scalar& x);
BoundarySolution make_polynomial_boundary(const Representation& rep, Matrix l,
                                          const Scalar& xi,
                                          std::size_t w_dim = 0);

// Small solution K(x) = 1 + (x - 1/x)/(alpha_1/x + zeta) ytilde with
// ytilde = L^m + sum_{k>=1} alpha_k L^{k-1}; requires alpha_0 = 0 and
// L ytilde = 0.
Matrix small_boundary(const std::vector<Scalar>& alpha, const Scalar& zeta,
                      const Matrix& l, const Scalar& x);
BoundarySolution make_small_boundary(const Representation& rep, Matrix l,
                                     const Scalar& zeta);

// Spectral reflection equation
// R(x/z) K(x) R(xz) K(z) = K(z) R(xz) K(x) R(x/z), with K acting on factors
// 1..level (plus the trailing quantum factor when w_dim > 0) and R at sites
// (level, level+1).
CheckResult check_re(const Representation& rep, const SpectralOp& k,
                     const Scalar& x, const Scalar& z, std::size_t level = 1,
                     std::size_t w_dim = 0);

// Conjugated reflection equation for a local one-site Ktilde:
// R(x/z) Kt(z) R(b/(xz)) Kt(x) = Kt(x) R(b/(xz)) Kt(z) R(x/z).
CheckResult check_conjugated_re(const Representation& rep,
                                const SpectralOp& ktilde, const Scalar& x,
                                const Scalar& z);

// Ktilde(x) = K(sqrt(b)/x) (reflect) or K(x/sqrt(b))^{-1} (invert).
SpectralOp conjugate_boundary(const SpectralOp& k, const Scalar& b_sqrt,
                              bool invert_variant = false);
// sqrt(b) branches: Hecke q^N, BMW a/nu.
Scalar conjugation_b_sqrt(const Representation& rep);

// Central constants of an affine BMW boundary L:
//   Khat (L1 Rhat L1 Rhat) = c Khat   (two-sided),
//   Khat L1^k Khat = Q^(k) Khat.
// c_reversed comes from the reversed word (Rhat L1 Rhat L1). Negative powers
// are extracted when L is invertible. Throws when a sandwich is not an exact
// multiple of Khat or when Q^(0) disagrees with (1/nu + lambda - nu)/lambda.
struct BmwBoundaryConstants {
  Scalar c, c_reversed;
  std::vector<Scalar> q_pos;  // Q^(0)..Q^(kmax)
  std::vector<Scalar> q_neg;  // Q^(-1)..Q^(-kmax), empty if L is singular
  const Scalar& q_of(long long k) const;
};
BmwBoundaryConstants bmw_constants(const Representation& rep, const Matrix& l,
                                   std::size_t kmax = 4);

// Q^(-n) = nu^2 c^{-n} Q^(n)
//          + lambda nu sum_{j=1}^{n-1} c^{-j} (Q^(2j-n) - Q^(j) Q^(j-n)).
CheckResult check_negative_power_relation(const Representation& rep,
                                           const BmwBoundaryConstants& bc,
                                           std::size_t n_max = 3);

// xi with xi^2 = -a c / nu; positive branch. Real extensions only.
Scalar bmw_xi(const Representation& rep, const Scalar& c,
              bool allow_extension = true);
BoundarySolution make_bmw_boundary(const Representation& rep, Matrix l,
                                   std::optional<Scalar> xi_override = {});

// Degree-2 cyclotomic BMW boundary, K(x) = L + (alpha_1 x + A)/(x - 1/x).
struct BmwDeg2 {
  Scalar alpha0, alpha1;
};
BmwDeg2 bmw_deg2_fixed_alphas(const Representation& rep, const Scalar& c,
                              const Scalar& q1);
CheckResult check_alpha1_relation(const Representation& rep, const Scalar& c,
                                  const Scalar& q1, const Scalar& alpha0,
                                  const Scalar& alpha1);
Scalar bmw_deg2_special_A(const Representation& rep, const Scalar& c,
                          const Scalar& xi);
Matrix bmw_deg2_boundary(const Matrix& l, const Scalar& alpha1,
                         const Scalar& a_const, const Scalar& x);

// Degree-4 cyclotomic BMW boundary data from Q^(1..3).
struct BmwDeg4 {
  std::vector<Scalar> alpha;  // alpha_0..alpha_3
  Scalar alpha0_sqrt;
};
BmwDeg4 bmw_deg4_alphas(const Representation& rep, const Scalar& c,
                        const Scalar& q1, const Scalar& q2, const Scalar& q3,
                        bool allow_extension = true);
Matrix bmw_deg4_boundary(const BmwDeg4& d4, const Matrix& l, const Scalar& x);

// Q^(m+1-r) + sum_k alpha_k Q^(k-r) = 0 for r = 0..m+1, with Q extended
// upward by the characteristic identity and downward by the Q^(-n) relation.
CheckResult check_q_compatibility(const Representation& rep,
                                  const std::vector<Scalar>& alpha,
                                  const Scalar& c,
                                  const std::vector<Scalar>& q_init);

}  // namespace rebax

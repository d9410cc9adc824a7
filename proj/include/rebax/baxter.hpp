#pragma once

#include <string>
#include <vector>

#include "rebax/rep.hpp"

namespace rebax {

// Outcome of an exact residual check. On failure, (row, col) locates the
// first differing entry and lhs/rhs hold both values.
struct CheckResult {
  bool ok = true;
  std::string note;
  std::size_t row = 0, col = 0;
  Scalar lhs, rhs;
  explicit operator bool() const { return ok; }
};

CheckResult compare_exact(const Matrix& lhs, const Matrix& rhs,
                          const std::string& what);

// Baxterized operator Rhat(x) on V (x) V, dispatched on the algebra kind:
//   Hecke: Rhat(x) = Rhat - x Rhat^{-1}
//   BMW:   Rhat(x) = (Rhat - x Rhat^{-1}) + lambda (nu+a)/(nu + a/x) Khat
Matrix baxt(const Representation& rep, const Scalar& x);
Matrix baxt_with_a(const Representation& rep, const Scalar& x,
                   const Scalar& a);

// Unitary normalization stilde(x; a) = Rhat(x)/(a x - 1/a);
// stilde(x) stilde(1/x) = I.
Matrix baxt_norm(const Representation& rep, const Scalar& x);
Matrix baxt_norm_with_a(const Representation& rep, const Scalar& x,
                        const Scalar& a);

// Alternative closed forms, used by the agreement checks:
// product form (a/x - 1/a)(Rhat + a x)(Rhat + a/x)^{-1}, and the BMW
// single-fraction form
// (a (1/x - 1) Rhat + nu (1 - x) Rhat^{-1} + lambda (a + nu)) / (nu + a/x).
Matrix baxt_product_form(const Representation& rep, const Scalar& x,
                         const Scalar& a);
Matrix baxt_bmw_linear_form(const Representation& rep, const Scalar& x);

// Spectral-parameter values to avoid when sampling (poles of the closed
// forms above plus 0 and +-1).
std::vector<Scalar> baxt_exclusions(const Representation& rep);

// Yang-Baxter residual on V^{(x)3}:
// R1(x) R2(xy) R1(y) - R2(y) R1(xy) R2(x).
CheckResult check_ybe(const Representation& rep, const Scalar& x,
                      const Scalar& y);

CheckResult check_unitarity(const Representation& rep, const Scalar& x);

// All closed forms agree at x (both a values for Hecke, the three BMW
// displays for BMW).
CheckResult check_baxt_forms(const Representation& rep, const Scalar& x);

// Cross-unitarity data: partner point and scalar eta.
//   Hecke: partner z = b/x, eta(x) = 1 - x, b = (1 - lambda Tr D)^{-1}
//   BMW:   partner z = a^2/(nu^2 x), eta(x) = (1-x)(a nu x + 1)/(nu x + a)
Scalar cross_partner(const Representation& rep, const Scalar& x);
Scalar cross_eta(const Representation& rep, const Scalar& x);

// Tr_{D(n+1)}(Rhat_n(x) Y Rhat_n(z)) = eta(x) eta(z) Tr_{D(n)}(Y) (x) I_n
// for Y acting on factors 1..n, z the partner of x.
CheckResult check_cross_unitarity(const Representation& rep, const Matrix& y,
                                  const Scalar& x);

}  // namespace rebax

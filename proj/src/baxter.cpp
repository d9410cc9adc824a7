#include "rebax/baxter.hpp"

namespace rebax {

CheckResult compare_exact(const Matrix& lhs, const Matrix& rhs,
                          const std::string& what) {
  CheckResult r;
  if (lhs.dim() != rhs.dim()) {
    r.ok = false;
    r.note = what + ": dimension mismatch";
    return r;
  }
  Matrix diff = lhs - rhs;
  if (auto pos = diff.first_nonzero()) {
    r.ok = false;
    r.row = pos->first;
    r.col = pos->second;
    r.lhs = lhs.at(r.row, r.col);
    r.rhs = rhs.at(r.row, r.col);
    r.note = what + ": first residual at (" + std::to_string(r.row) + "," +
             std::to_string(r.col) + "), " + r.lhs.str() + " vs " + r.rhs.str();
  }
  return r;
}

Matrix baxt_with_a(const Representation& rep, const Scalar& x,
                   const Scalar& a) {
  Matrix m = rep.R - rep.Rinv * x;
  if (rep.is_bmw()) {
    // lambda (nu + a)/(nu + a/x) = lambda (nu + a) x/(nu x + a), regular at 0
    Scalar denom = rep.nu * x + a;
    if (denom.is_zero())
      throw PoleError("BMW baxterized element pole at x = " + x.str());
    m += rep.Khat * (rep.lambda * (rep.nu + a) * x / denom);
  }
  return m;
}

Matrix baxt(const Representation& rep, const Scalar& x) {
  return baxt_with_a(rep, x, rep.a);
}

Matrix baxt_norm_with_a(const Representation& rep, const Scalar& x,
                        const Scalar& a) {
  Scalar denom = a * x - a.inverse();
  if (denom.is_zero())
    throw PoleError("normalized baxterized element pole at x = " + x.str() +
                    " (a x - 1/a = 0, degenerate q)");
  return baxt_with_a(rep, x, a) * denom.inverse();
}

Matrix baxt_norm(const Representation& rep, const Scalar& x) {
  return baxt_norm_with_a(rep, x, rep.a);
}

Matrix baxt_product_form(const Representation& rep, const Scalar& x,
                         const Scalar& a) {
  const std::size_t d = rep.R.dim();
  Matrix num = rep.R + Matrix::identity(d) * (a * x);
  Matrix den = rep.R + Matrix::identity(d) * (a * x.inverse());
  Matrix deninv;
  try {
    deninv = inverse(den);
  } catch (const SingularError&) {
    throw PoleError("product form pole: Rhat + a/x singular at x = " +
                    x.str());
  }
  Matrix m = num * deninv * (a * x.inverse() - a.inverse());
  m.set_factors(rep.R.factors());
  return m;
}

Matrix baxt_bmw_linear_form(const Representation& rep, const Scalar& x) {
  if (!rep.is_bmw()) throw Error("linear form is BMW-specific");
  Scalar denom = rep.nu + rep.a * x.inverse();
  if (denom.is_zero())
    throw PoleError("BMW linear form pole at x = " + x.str());
  Matrix m = rep.R * (rep.a * (x.inverse() - Scalar(1))) +
             rep.Rinv * (rep.nu * (Scalar(1) - x)) +
             Matrix::identity(rep.R.dim()) * (rep.lambda * (rep.a + rep.nu));
  m = m * denom.inverse();
  m.set_factors(rep.R.factors());
  return m;
}

std::vector<Scalar> baxt_exclusions(const Representation& rep) {
  std::vector<Scalar> ex{Scalar(0), Scalar(1), Scalar(-1)};
  for (const Scalar& a : {rep.q, -(rep.q.inverse())}) {
    ex.push_back(a * rep.q);                  // pole of Rhat + a/x
    ex.push_back(-(a * rep.q.inverse()));     // second Hecke eigenvalue
    ex.push_back(qpow(a, -2));                // pole of the unitary norm
    if (rep.is_bmw()) {
      ex.push_back(-(a / rep.nu));            // BMW kappa-term pole
      ex.push_back(-(a * rep.nu));            // eigenvalue nu in product form
    }
  }
  return ex;
}

CheckResult check_ybe(const Representation& rep, const Scalar& x,
                      const Scalar& y) {
  const std::vector<std::size_t> shape{rep.N, rep.N, rep.N};
  auto r1 = [&](const Scalar& u) { return embed(baxt(rep, u), 1, shape); };
  auto r2 = [&](const Scalar& u) { return embed(baxt(rep, u), 2, shape); };
  Matrix lhs = r1(x) * r2(x * y) * r1(y);
  Matrix rhs = r2(y) * r1(x * y) * r2(x);
  return compare_exact(lhs, rhs, "Yang-Baxter");
}

CheckResult check_unitarity(const Representation& rep, const Scalar& x) {
  Matrix prod = baxt_norm(rep, x) * baxt_norm(rep, x.inverse());
  return compare_exact(prod, Matrix::identity(prod.dim()), "unitarity");
}

CheckResult check_baxt_forms(const Representation& rep, const Scalar& x) {
  Matrix base = baxt(rep, x);
  if (rep.is_bmw()) {
    CheckResult r = compare_exact(base, baxt_bmw_linear_form(rep, x),
                                  "baxterized forms (linear vs kappa)");
    if (!r.ok) return r;
    return compare_exact(base, baxt_product_form(rep, x, rep.a),
                         "baxterized forms (kappa vs product)");
  }
  CheckResult r = compare_exact(base, baxt_product_form(rep, x, rep.q),
                                "baxterized forms (a = q)");
  if (!r.ok) return r;
  return compare_exact(base,
                       baxt_product_form(rep, x, -(rep.q.inverse())),
                       "baxterized forms (a = -1/q)");
}

Scalar cross_partner(const Representation& rep, const Scalar& x) {
  if (rep.is_bmw()) return rep.a * rep.a / (rep.nu * rep.nu * x);
  return rep.b / x;
}

Scalar cross_eta(const Representation& rep, const Scalar& x) {
  Scalar one(1);
  if (!rep.is_bmw()) return one - x;
  Scalar denom = rep.nu * x + rep.a;
  if (denom.is_zero())
    throw PoleError("cross-unitarity eta pole at x = " + x.str());
  return (one - x) * (rep.a * rep.nu * x + one) / denom;
}

CheckResult check_cross_unitarity(const Representation& rep, const Matrix& y,
                                  const Scalar& x) {
  const std::size_t n = y.factors().size();
  for (auto f : y.factors())
    if (f != rep.N) throw Error("cross-unitarity: Y must act on copies of V");
  const Scalar z = cross_partner(rep, x);
  std::vector<std::size_t> shape(n + 1, rep.N);
  Matrix rx = embed(baxt(rep, x), n, shape);
  Matrix rz = embed(baxt(rep, z), n, shape);
  Matrix ywide = embed(y, 1, shape);
  Matrix lhs = weighted_partial_trace(rx * ywide * rz, n + 1, rep.Dop);

  Matrix tr_y = weighted_partial_trace(y, n, rep.Dop);
  Matrix rhs = (n == 1) ? Matrix::identity(rep.N) * tr_y.at(0, 0)
                        : kron(tr_y, Matrix::identity(rep.N));
  rhs = rhs * (cross_eta(rep, x) * cross_eta(rep, z));
  return compare_exact(lhs, rhs, "cross-unitarity");
}

}  // namespace rebax

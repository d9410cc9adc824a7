#include "rebax/reflection.hpp"

#include <algorithm>

namespace rebax {

namespace {
void check(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}
}  // namespace

Matrix SpectralOp::operator()(const Scalar& x) const {
  for (const auto& e : exclusions)
    if (x == e) throw PoleError("spectral parameter x = " + x.str() +
                                " is a listed pole of this boundary");
  return build(x);
}

CheckResult check_constant_re(const Representation& rep, const Matrix& l) {
  const std::size_t nf = l.factors().size();
  check(nf >= 1 && l.factors()[0] == rep.N,
        "constant RE: L must act on V (site 1) first");
  std::vector<std::size_t> shape{rep.N, rep.N};
  std::vector<std::size_t> lsites{1};
  for (std::size_t k = 1; k < nf; ++k) {
    shape.push_back(l.factors()[k]);
    lsites.push_back(2 + k);
  }
  Matrix l1 = embed_at(l, lsites, shape);
  Matrix r = embed(rep.R, 1, shape);
  return compare_exact(r * l1 * r * l1, l1 * r * l1 * r,
                       "constant reflection equation");
}

EvaluationBoundary evaluation_boundary(const Scalar& q) {
  Representation rep = build_gl_hecke(2, q);
  const Scalar lam = rep.lambda;
  const Scalar qi = q.inverse();

  // Triangular generator matrices on V_aux (x) W, basis
  // (v1 w1, v1 w2, v2 w1, v2 w2). Diagonal blocks carry the Cartan weights,
  // the corners the raising/lowering generators; all q-powers are integral.
  //   L+ = [[diag(1,q), lambda e12], [0, diag(q,1)]]
  //   L- = [[diag(1,1/q), 0], [-lambda e21, diag(1/q,1)]]
  Matrix lp(4, {2, 2});
  lp.at(0, 0) = Scalar(1);
  lp.at(1, 1) = q;
  lp.at(0, 3) = lam;  // block (1,2) = lambda e_12 on W
  lp.at(2, 2) = q;
  lp.at(3, 3) = Scalar(1);

  Matrix lm(4, {2, 2});
  lm.at(0, 0) = Scalar(1);
  lm.at(1, 1) = qi;
  lm.at(3, 0) = -lam;  // block (2,1) = -lambda e_21 on W
  lm.at(2, 2) = qi;
  lm.at(3, 3) = Scalar(1);

  // Exchange relations on V_aux (x) V_aux (x) W.
  const std::vector<std::size_t> shape{2, 2, 2};
  Matrix r12 = embed(rep.R, 1, shape);
  Matrix l1p = embed_at(lp, {1, 3}, shape), l2p = embed_at(lp, {2, 3}, shape);
  Matrix l1m = embed_at(lm, {1, 3}, shape), l2m = embed_at(lm, {2, 3}, shape);
  check((r12 * l2p * l1p - l2p * l1p * r12).is_zero(),
        "evaluation boundary: L+ L+ exchange relation failed");
  check((r12 * l2m * l1m - l2m * l1m * r12).is_zero(),
        "evaluation boundary: L- L- exchange relation failed");
  check((r12 * l2p * l1m - l2m * l1p * r12).is_zero(),
        "evaluation boundary: L+ L- exchange relation failed");

  // Intertwining relation for L(x) = L+ - x L- at generic points.
  ScalarSampler sampler(7);
  const std::vector<Scalar> avoid{Scalar(0), Scalar(1), Scalar(-1)};
  for (int t = 0; t < 3; ++t) {
    const Scalar x = sampler.sample(6, avoid), y = sampler.sample(6, avoid);
    auto lx = [&](const Scalar& u) { return lp - lm * u; };
    Matrix l2xy = embed_at(lx(x * y), {2, 3}, shape);
    Matrix l1y = embed_at(lx(y), {1, 3}, shape);
    Matrix l2y = embed_at(lx(y), {2, 3}, shape);
    Matrix l1xy = embed_at(lx(x * y), {1, 3}, shape);
    Matrix rx = embed(baxt(rep, x), 1, shape);
    check((rx * l2xy * l1y - l2y * l1xy * rx).is_zero(),
          "evaluation boundary: intertwining relation failed");
  }

  EvaluationBoundary ev;
  ev.Lplus = lp;
  ev.Lminus = lm;
  ev.L = inverse(lm) * lp;
  ev.L.set_factors({2, 2});
  check(check_constant_re(rep, ev.L).ok,
        "evaluation boundary: L fails the constant reflection equation");
  return ev;
}

Matrix rational_boundary(const Matrix& l, const Scalar& xi, const Scalar& x) {
  if (x.is_zero()) throw PoleError("rational boundary at x = 0");
  const Matrix id = Matrix::identity(l.dim());
  Matrix den = l - id * (xi * x.inverse());
  Matrix deninv;
  try {
    deninv = inverse(den);
  } catch (const SingularError&) {
    throw PoleError("rational boundary pole: xi/x = " +
                    (xi * x.inverse()).str() +
                    " lies in the spectrum of L (x = " + x.str() + ")");
  }
  Matrix k = (l - id * (xi * x)) * deninv;
  k.set_factors(l.factors());
  return k;
}

std::vector<Scalar> rational_boundary_exclusions(const Matrix& l,
                                                 const Scalar& xi) {
  std::vector<Scalar> ex{Scalar(0)};
  if (!xi.is_rational() || xi.is_zero()) return ex;
  for (const auto& [root, mult] : rational_roots(minimal_polynomial(l))) {
    (void)mult;
    if (root.is_zero()) continue;
    ex.push_back(xi / root);  // denominator pole
    ex.push_back(root / xi);  // numerator degenerates; keeps K(1/x) regular too
  }
  return ex;
}

BoundarySolution make_trivial_boundary(const Representation& rep) {
  BoundarySolution b;
  b.kind = "trivial";
  b.L = Matrix::identity(std::vector<std::size_t>{rep.N});
  b.K.build = [n = rep.N](const Scalar&) {
    return Matrix::identity(std::vector<std::size_t>{n});
  };
  return b;
}

BoundarySolution make_rational_boundary(const Representation& rep, Matrix l,
                                        const Scalar& xi, std::size_t w_dim,
                                        const std::string& kind) {
  check(l.factors()[0] == rep.N, "boundary L must act on V first");
  check(w_dim == 0 || (l.factors().size() == 2 && l.factors()[1] == w_dim),
        "boundary L factor mismatch with the quantum factor");
  BoundarySolution b;
  b.kind = kind;
  b.L = std::move(l);
  b.w_dim = w_dim;
  b.xi = xi;
  b.alpha = minimal_polynomial(b.L);
  b.alpha.pop_back();  // store alpha_0..alpha_m, monic lead implied
  b.K.exclusions = rational_boundary_exclusions(b.L, xi);
  b.K.build = [L = b.L, xi](const Scalar& x) {
    return rational_boundary(L, xi, x);
  };
  return b;
}

std::vector<Scalar> cyclotomic_inverse_coeffs(const std::vector<Scalar>& alpha,
                                              const Scalar& xi,
                                              const Scalar& x) {
  const std::size_t m = alpha.size() - 1;
  std::vector<Scalar> full = alpha;
  full.push_back(Scalar(1));  // alpha_{m+1} = 1
  const Scalar w = xi / x;
  Scalar denom;
  for (std::size_t r = 0; r <= m + 1; ++r)
    denom += full[r] * qpow(w, static_cast<long long>(r));
  if (denom.is_zero())
    throw PoleError("polynomial boundary pole: sum_r alpha_r (xi/x)^r = 0 at x = " +
                    x.str());
  const Scalar bm = -(denom.inverse());
  std::vector<Scalar> b(m + 1);
  b[m] = bm;
  for (std::size_t k = 1; k <= m; ++k) {
    Scalar acc;
    for (std::size_t r = 0; r <= k; ++r)
      acc += full[m - r + 1] * qpow(w, static_cast<long long>(k - r));
    b[m - k] = bm * acc;
  }
  return b;
}

Matrix polynomial_boundary(const std::vector<Scalar>& alpha, const Scalar& xi,
                           const Matrix& l, const Scalar& x) {
  if (x.is_zero()) throw PoleError("polynomial boundary at x = 0");
  const std::vector<Scalar> b = cyclotomic_inverse_coeffs(alpha, xi, x);
  Matrix series = eval_poly(b, l);
  Matrix k = (l - Matrix::identity(l.dim()) * (xi * x)) * series;
  k.set_factors(l.factors());
  return k;
}

BoundarySolution make_polynomial_boundary(const Representation& rep, Matrix l,
                                          const Scalar& xi,
                                          std::size_t w_dim) {
  BoundarySolution b = make_rational_boundary(rep, std::move(l), xi, w_dim,
                                              "polynomial");
  b.K.build = [L = b.L, alpha = b.alpha, xi](const Scalar& x) {
    return polynomial_boundary(alpha, xi, L, x);
  };
  return b;
}

Matrix small_boundary(const std::vector<Scalar>& alpha, const Scalar& zeta,
                      const Matrix& l, const Scalar& x) {
  check(!alpha.empty() && alpha[0].is_zero(),
        "small boundary requires the alpha_0 = 0 regime");
  if (x.is_zero()) throw PoleError("small boundary at x = 0");
  const std::size_t m = alpha.size() - 1;
  std::vector<Scalar> tilde_coeffs(m + 1);
  tilde_coeffs[m] = Scalar(1);
  for (std::size_t k = 1; k <= m; ++k) tilde_coeffs[k - 1] += alpha[k];
  Matrix ytilde = eval_poly(tilde_coeffs, l);
  if (!(l * ytilde).is_zero())
    throw Error("small-solution precondition violated: L * ytilde != 0");
  Scalar denom = alpha[1] * x.inverse() + zeta;
  if (denom.is_zero())
    throw PoleError("small boundary pole at x = " + x.str());
  Matrix k = Matrix::identity(l.dim()) +
             ytilde * ((x - x.inverse()) / denom);
  k.set_factors(l.factors());
  return k;
}

BoundarySolution make_small_boundary(const Representation& rep, Matrix l,
                                     const Scalar& zeta) {
  check(l.factors()[0] == rep.N, "small boundary L must act on V first");
  BoundarySolution b;
  b.kind = "small";
  b.L = std::move(l);
  b.zeta = zeta;
  b.alpha = minimal_polynomial(b.L);
  b.alpha.pop_back();
  check(!b.alpha.empty() && b.alpha[0].is_zero(),
        "small boundary requires a singular L (alpha_0 = 0)");
  b.K.exclusions = {Scalar(0)};
  if (!zeta.is_zero() && zeta.is_rational() && b.alpha[1].is_rational() &&
      !b.alpha[1].is_zero())
    b.K.exclusions.push_back(-(b.alpha[1] / zeta));
  b.K.build = [L = b.L, alpha = b.alpha, zeta](const Scalar& x) {
    return small_boundary(alpha, zeta, L, x);
  };
  return b;
}

CheckResult check_re(const Representation& rep, const SpectralOp& k,
                     const Scalar& x, const Scalar& z, std::size_t level,
                     std::size_t w_dim) {
  std::vector<std::size_t> shape(level + 1, rep.N);
  std::vector<std::size_t> ksites(level);
  for (std::size_t s = 0; s < level; ++s) ksites[s] = s + 1;
  if (w_dim > 0) {
    shape.push_back(w_dim);
    ksites.push_back(level + 2);
  }
  auto kx = embed_at(k(x), ksites, shape);
  auto kz = embed_at(k(z), ksites, shape);
  auto rr = [&](const Scalar& u) { return embed(baxt(rep, u), level, shape); };
  Matrix lhs = rr(x / z) * kx * rr(x * z) * kz;
  Matrix rhs = kz * rr(x * z) * kx * rr(x / z);
  return compare_exact(lhs, rhs, "reflection equation");
}

CheckResult check_conjugated_re(const Representation& rep,
                                const SpectralOp& ktilde, const Scalar& x,
                                const Scalar& z) {
  const std::vector<std::size_t> shape{rep.N, rep.N};
  Matrix ktx = embed(ktilde(x), 1, shape);
  Matrix ktz = embed(ktilde(z), 1, shape);
  Matrix ra = baxt(rep, x / z);
  Matrix rb = baxt(rep, rep.b / (x * z));
  Matrix lhs = ra * ktz * rb * ktx;
  Matrix rhs = ktx * rb * ktz * ra;
  return compare_exact(lhs, rhs, "conjugated reflection equation");
}

SpectralOp conjugate_boundary(const SpectralOp& k, const Scalar& b_sqrt,
                              bool invert_variant) {
  SpectralOp out;
  out.exclusions = {Scalar(0)};
  for (const auto& e : k.exclusions) {
    if (e.is_zero()) continue;
    out.exclusions.push_back(invert_variant ? e * b_sqrt : b_sqrt / e);
  }
  if (invert_variant) {
    out.build = [k, b_sqrt](const Scalar& x) {
      try {
        return inverse(k.build(x / b_sqrt));
      } catch (const SingularError&) {
        throw PoleError("conjugated boundary: K(x/sqrt(b)) is singular at x = " +
                        x.str());
      }
    };
  } else {
    out.build = [k, b_sqrt](const Scalar& x) {
      if (x.is_zero()) throw PoleError("conjugated boundary at x = 0");
      return k.build(b_sqrt / x);
    };
  }
  return out;
}

Scalar conjugation_b_sqrt(const Representation& rep) {
  if (rep.is_bmw()) return rep.a / rep.nu;
  Scalar root = sqrt_extend(rep.b);
  check(root * root == rep.b, "b is not a perfect square");
  return root;
}

const Scalar& BmwBoundaryConstants::q_of(long long k) const {
  if (k >= 0) {
    check(static_cast<std::size_t>(k) < q_pos.size(), "Q^(k) out of range");
    return q_pos[static_cast<std::size_t>(k)];
  }
  check(static_cast<std::size_t>(-k) <= q_neg.size(),
        "Q^(k) out of range (negative powers unavailable)");
  return q_neg[static_cast<std::size_t>(-k) - 1];
}

namespace {
// sandwich = s * base for rank-one base; throws `what` otherwise.
Scalar proportionality(const Matrix& sandwich, const Matrix& base,
                       const std::string& what) {
  auto pos = base.first_nonzero();
  check(pos.has_value(), "proportionality against the zero matrix");
  Scalar s = sandwich.at(pos->first, pos->second) /
             base.at(pos->first, pos->second);
  if (!(sandwich - base * s).is_zero())
    throw Error(what + ": sandwich is not an exact multiple of Khat"
                       " (L is not an affine-BMW boundary for this representation)");
  return s;
}
}  // namespace

BmwBoundaryConstants bmw_constants(const Representation& rep, const Matrix& l,
                                   std::size_t kmax) {
  check(rep.is_bmw(), "bmw_constants needs a BMW representation");
  check(l.factors().size() == 1 && l.dim() == rep.N,
        "bmw_constants: L must be a one-site matrix");
  const std::vector<std::size_t> shape{rep.N, rep.N};
  const Matrix l1 = embed(l, 1, shape);
  const Matrix& kh = rep.Khat;

  BmwBoundaryConstants bc;
  const Matrix word = l1 * rep.R * l1 * rep.R;
  bc.c = proportionality(kh * word, kh, "c extraction");
  const Scalar c_right = proportionality(word * kh, kh, "c extraction (right)");
  check(bc.c == c_right, "c extraction: left and right sandwiches disagree");
  bc.c_reversed =
      proportionality(kh * (rep.R * l1 * rep.R * l1), kh, "reversed c");

  Matrix pw = Matrix::identity(l1.dim());
  for (std::size_t k = 0; k <= kmax; ++k) {
    bc.q_pos.push_back(proportionality(kh * pw * kh, kh, "Q^(k) extraction"));
    pw = pw * l1;
  }
  const Scalar q0_expected =
      (rep.nu.inverse() + rep.lambda - rep.nu) / rep.lambda;
  check(bc.q_pos[0] == q0_expected,
        "Q^(0) disagrees with (1/nu + lambda - nu)/lambda");
  try {
    const Matrix li = embed(inverse(l), 1, shape);
    Matrix pwn = li;
    for (std::size_t k = 1; k <= kmax; ++k) {
      bc.q_neg.push_back(
          proportionality(kh * pwn * kh, kh, "Q^(-k) extraction"));
      pwn = pwn * li;
    }
  } catch (const SingularError&) {
    // singular L has no negative powers; callers see an empty q_neg
  }
  return bc;
}

CheckResult check_negative_power_relation(const Representation& rep,
                                           const BmwBoundaryConstants& bc,
                                           std::size_t n_max) {
  CheckResult res;
  for (long long n = 1; n <= static_cast<long long>(n_max); ++n) {
    Scalar rhs = rep.nu * rep.nu * qpow(bc.c, -n) * bc.q_of(n);
    for (long long j = 1; j < n; ++j)
      rhs += rep.lambda * rep.nu * qpow(bc.c, -j) *
             (bc.q_of(2 * j - n) - bc.q_of(j) * bc.q_of(j - n));
    if (bc.q_of(-n) != rhs) {
      res.ok = false;
      res.lhs = bc.q_of(-n);
      res.rhs = rhs;
      res.note = "Q^(-n) relation fails at n = " + std::to_string(n);
      return res;
    }
  }
  return res;
}

Scalar bmw_xi(const Representation& rep, const Scalar& c,
              bool allow_extension) {
  check(rep.is_bmw(), "bmw_xi needs a BMW representation");
  const Scalar xi2 = -(rep.a * c / rep.nu);
  if (allow_extension) return sqrt_extend(xi2);
  if (auto r = sqrt_exact(xi2)) return *r;
  throw Error("xi^2 = " + xi2.str() +
              " is not a square in the ambient field (extension disallowed)");
}

BoundarySolution make_bmw_boundary(const Representation& rep, Matrix l,
                                   std::optional<Scalar> xi_override) {
  check(rep.is_bmw(), "BMW boundary needs a BMW representation");
  CheckResult cre = check_constant_re(rep, l);
  check(cre.ok, "BMW boundary: L fails the constant reflection equation");
  BmwBoundaryConstants bc = bmw_constants(rep, l);
  const Scalar xi = xi_override ? *xi_override : bmw_xi(rep, bc.c);
  BoundarySolution b = make_rational_boundary(rep, std::move(l), xi, 0,
                                              "rational");
  b.c = bc.c;
  b.Q = bc.q_pos;
  return b;
}

BmwDeg2 bmw_deg2_fixed_alphas(const Representation& rep, const Scalar& c,
                              const Scalar& q1) {
  const Scalar an1 = rep.a * rep.nu + Scalar(1);
  check(!an1.is_zero(), "degenerate parameters: a nu + 1 = 0");
  BmwDeg2 d;
  d.alpha0 = -(c / (rep.a * rep.nu));
  d.alpha1 = -(q1 * rep.nu * rep.lambda / an1);
  return d;
}

CheckResult check_alpha1_relation(const Representation& rep, const Scalar& c,
                                  const Scalar& q1, const Scalar& alpha0,
                                  const Scalar& alpha1) {
  const Scalar lhs = alpha1;
  const Scalar denom = c * (rep.nu.inverse() - rep.nu + rep.lambda);
  CheckResult res;
  if (denom.is_zero()) {
    res.ok = false;
    res.note = "alpha_1 consistency: degenerate denominator";
    return res;
  }
  const Scalar rhs =
      -(rep.lambda * (c + rep.nu * rep.nu * alpha0) / denom) * q1;
  if (lhs != rhs) {
    res.ok = false;
    res.lhs = lhs;
    res.rhs = rhs;
    res.note = "alpha_1 consistency relation failed";
  }
  return res;
}

Scalar bmw_deg2_special_A(const Representation& rep, const Scalar& c,
                          const Scalar& xi) {
  return -(c / (xi * rep.nu)) * (rep.a + rep.a.inverse());
}

Matrix bmw_deg2_boundary(const Matrix& l, const Scalar& alpha1,
                         const Scalar& a_const, const Scalar& x) {
  if (x.is_zero()) throw PoleError("degree-2 boundary at x = 0");
  const Scalar numer = alpha1 * x + a_const;
  const Scalar denom = x - x.inverse();
  if (denom.is_zero()) {
    if (!numer.is_zero())
      throw PoleError("degree-2 boundary pole at x = " + x.str());
    // removable: (alpha_1 x + A)/(x - 1/x) -> alpha_1/2 at x = +-1
    return l + Matrix::identity(l.dim()) * (alpha1 / Scalar(2));
  }
  Matrix k = l + Matrix::identity(l.dim()) * (numer / denom);
  k.set_factors(l.factors());
  return k;
}

BmwDeg4 bmw_deg4_alphas(const Representation& rep, const Scalar& c,
                        const Scalar& q1, const Scalar& q2, const Scalar& q3,
                        bool allow_extension) {
  const Scalar q0 = (rep.nu.inverse() + rep.lambda - rep.nu) / rep.lambda;
  const Scalar an1 = rep.a * rep.nu + Scalar(1);
  check(!an1.is_zero(), "degenerate parameters: a nu + 1 = 0");
  const Scalar nl = rep.nu * rep.lambda / an1;
  const Scalar ca = c / (rep.nu * rep.a);
  const Scalar denom = q2 - nl * q1 * q1 - ca * q0;
  check(!denom.is_zero(), "degree-4 boundary: alpha_3 denominator vanishes");
  BmwDeg4 d;
  d.alpha.resize(4);
  d.alpha[3] = -((q3 - nl * q1 * q2 - ca * q1) / denom);
  d.alpha[2] = -(nl * (q1 * d.alpha[3] + q2)) + rep.lambda * c / rep.a;
  d.alpha[1] = -(c / rep.a) * (d.alpha[3] / rep.nu + rep.lambda * q1);
  d.alpha[0] = -(c * c / (rep.a * rep.nu));
  if (allow_extension) {
    d.alpha0_sqrt = sqrt_extend(d.alpha[0]);
  } else {
    auto r = sqrt_exact(d.alpha[0]);
    check(r.has_value(),
          "degree-4 boundary: alpha_0 is not a square in the ambient field");
    d.alpha0_sqrt = *r;
  }
  return d;
}

Matrix bmw_deg4_boundary(const BmwDeg4& d4, const Matrix& l, const Scalar& x) {
  if (x.is_zero()) throw PoleError("degree-4 boundary at x = 0");
  const Scalar denom = x - x.inverse();
  if (denom.is_zero())
    throw PoleError("degree-4 boundary pole at x = " + x.str());
  Matrix linv;
  try {
    linv = inverse(l);
  } catch (const SingularError&) {
    throw Error("degree-4 boundary needs an invertible L");
  }
  Matrix k = l * d4.alpha0_sqrt +
             Matrix::identity(l.dim()) *
                 ((d4.alpha[3] * d4.alpha0_sqrt * x + d4.alpha[1]) / denom) -
             linv * (x * d4.alpha[0]);
  k.set_factors(l.factors());
  return k;
}

CheckResult check_q_compatibility(const Representation& rep,
                                  const std::vector<Scalar>& alpha,
                                  const Scalar& c,
                                  const std::vector<Scalar>& q_init) {
  const long long m = static_cast<long long>(alpha.size()) - 1;
  check(q_init.size() == alpha.size(),
        "check_q_compatibility expects Q^(0..m) seeds");
  // Q^(k) for k = -(m+1) .. 2(m+1): upward by the characteristic identity,
  // downward by the Q^(-n) relation.
  const long long lo = -(m + 1), hi = 2 * (m + 1);
  std::vector<Scalar> q(static_cast<std::size_t>(hi - lo + 1));
  auto at = [&](long long k) -> Scalar& {
    return q[static_cast<std::size_t>(k - lo)];
  };
  for (long long k = 0; k <= m; ++k) at(k) = q_init[static_cast<std::size_t>(k)];
  for (long long k = m + 1; k <= hi; ++k) {
    Scalar acc;
    for (long long j = 0; j <= m; ++j)
      acc += alpha[static_cast<std::size_t>(j)] * at(k - m - 1 + j);
    at(k) = -acc;
  }
  for (long long n = 1; n <= m + 1; ++n) {
    Scalar v = rep.nu * rep.nu * qpow(c, -n) * at(n);
    for (long long j = 1; j < n; ++j)
      v += rep.lambda * rep.nu * qpow(c, -j) *
           (at(2 * j - n) - at(j) * at(j - n));
    at(-n) = v;
  }
  CheckResult res;
  for (long long r = 0; r <= m + 1; ++r) {
    Scalar acc = at(m + 1 - r);
    for (long long k = 0; k <= m; ++k)
      acc += alpha[static_cast<std::size_t>(k)] * at(k - r);
    if (!acc.is_zero()) {
      res.ok = false;
      res.lhs = acc;
      res.note = "characteristic/Q compatibility fails at r = " +
                 std::to_string(r);
      return res;
    }
  }
  return res;
}

}  // namespace rebax

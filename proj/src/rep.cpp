#include "rebax/rep.hpp"

#include <regex>

#include "rebax/baxter.hpp"

namespace rebax {

namespace {

void check(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

void require_generic_q(const Scalar& q) {
  if (q.is_zero() || q == Scalar(1) || q == Scalar(-1))
    throw ConfigError("q must avoid {0, 1, -1}, got q = " + q.str());
}

std::size_t idx(std::size_t n, std::size_t i, std::size_t j) {
  return i * n + j;  // 0-based pair (i, j), first factor major
}

// Shared post-construction: inverse, skew inverse, trace constants.
void finish(Representation& rep) {
  rep.Rinv = inverse(rep.R);
  auto [f, d] = skew_inverse(rep.R);
  rep.F = std::move(f);
  rep.Dop = std::move(d);
  rep.trD = rep.Dop.trace();
  rep.D0 = rep.trD;  // Tr_D(1) = Tr(D)

  auto extract = [&](const Matrix& m, const char* what) {
    Matrix t = weighted_partial_trace(m, 2, rep.Dop);
    auto s = t.as_scalar_multiple_of_identity();
    check(s.has_value(), std::string("quantum trace of ") + what +
                             " is not a multiple of the identity");
    return *s;
  };
  rep.Dplus = extract(rep.R, "Rhat");
  rep.Dminus = extract(rep.Rinv, "Rhat^{-1}");
  check(rep.Dplus == Scalar(1), "quantum trace normalization: Tr_D(Rhat) != I");
}

}  // namespace

Scalar a_value(const Scalar& q, AChoice c) {
  return c == AChoice::PlusQ ? q : -(q.inverse());
}

Matrix kappa_of(const Matrix& r, const Scalar& lambda) {
  if (lambda.is_zero()) throw Error("kappa_of: lambda = 0");
  Matrix k = Matrix::identity(r.dim());
  k.set_factors(r.factors());
  k -= (r - inverse(r)) * lambda.inverse();
  return k;
}

std::pair<Matrix, Matrix> skew_inverse(const Matrix& r) {
  const auto& f = r.factors();
  check(f.size() == 2 && f[0] == f[1], "skew_inverse: expected factors {N,N}");
  const std::size_t n = f[0];
  const std::size_t n2 = n * n;

  // Tr_3(F_13 R_32) = P_12 reads, entrywise,
  //   sum_{b,d} F^{i1 b}_{j1 d} R^{d i2}_{b j2} = delta^{i1}_{j2} delta^{i2}_{j1}.
  // The coefficient matrix C[(i2,j2),(b,d)] = R^{d i2}_{b j2} is the same for
  // every (i1, j1) block, so one inversion solves all blocks.
  Matrix c(n2);
  for (std::size_t i2 = 0; i2 < n; ++i2)
    for (std::size_t j2 = 0; j2 < n; ++j2)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t d = 0; d < n; ++d)
          c.at(idx(n, i2, j2), idx(n, b, d)) =
              r.at(idx(n, d, i2), idx(n, b, j2));
  Matrix cinv;
  try {
    cinv = inverse(c);
  } catch (const SingularError&) {
    throw Error("R-matrix is not skew invertible");
  }

  Matrix fm(n2, {n, n});
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t j1 = 0; j1 < n; ++j1) {
      // rhs[(i2,j2)] = delta^{i1}_{j2} delta^{i2}_{j1}
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t d = 0; d < n; ++d)
          fm.at(idx(n, i1, b), idx(n, j1, d)) =
              cinv.at(idx(n, b, d), idx(n, j1, i1));
    }

  // Cross-check both defining relations on V (x) V (x) V. R_32 acts with its
  // first slot on factor 3, i.e. it is the slot-swapped R on sites (2,3).
  const std::vector<std::size_t> shape{n, n, n};
  const Matrix p = flip_permutation(n, n);
  Matrix r_swapped = p * r * p;
  r_swapped.set_factors({n, n});
  Matrix lhs1 = partial_trace(
      embed_at(fm, {1, 3}, shape) * embed_at(r_swapped, {2, 3}, shape), 3);
  check(lhs1 == p, "skew inverse: Tr_3(F_13 R_32) != P_12");
  Matrix lhs2 = partial_trace(embed(r, 1, shape) * embed(fm, 2, shape), 2);
  check(lhs2 == p, "skew inverse: Tr_2(R_12 F_23) != P_13");

  Matrix dop(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar acc;
      for (std::size_t t = 0; t < n; ++t) acc += fm.at(idx(n, i, t), idx(n, j, t));
      dop.at(i, j) = acc;
    }
  return {fm, dop};
}

Matrix gl_rhat_formula(std::size_t n, const Scalar& q) {
  // Rhat = sum_i q e_ii (x) e_ii + sum_{i != j} e_ij (x) e_ji
  //        + lambda sum_{j > i} e_ii (x) e_jj
  const Scalar lambda = q - q.inverse();
  Matrix r(n * n, {n, n});
  for (std::size_t i = 0; i < n; ++i) r.at(idx(n, i, i), idx(n, i, i)) = q;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      r.at(idx(n, i, j), idx(n, j, i)) = Scalar(1);
      if (j > i) r.at(idx(n, i, j), idx(n, i, j)) = lambda;
    }
  return r;
}

Representation build_gl_hecke(std::size_t n, const Scalar& q,
                              AChoice a_choice) {
  check(n >= 2, "gl(N) needs N >= 2");
  require_generic_q(q);
  Representation rep;
  rep.kind = AlgebraKind::Hecke;
  rep.name = "gl" + std::to_string(n);
  rep.N = n;
  rep.q = q;
  rep.lambda = q - q.inverse();
  rep.a = a_value(q, a_choice);
  rep.R = gl_rhat_formula(n, q);
  rep.Khat = Matrix(n * n, {n, n});

  // Hecke relation Rhat^2 = lambda Rhat + 1
  check((rep.R * rep.R - rep.R * rep.lambda - Matrix::identity(n * n))
            .is_zero(),
        "gl Hecke relation failed");
  finish(rep);
  check(rep.Dminus == Scalar(1) - rep.lambda * rep.trD,
        "Hecke trace constant: Tr_D(Rhat^{-1}) != 1 - lambda Tr(D)");
  rep.b = rep.Dplus / rep.Dminus;
  return rep;
}

Representation build_bmw(BmwFamily family, std::size_t n, const Scalar& q,
                         AChoice a_choice) {
  if (family == BmwFamily::Sp)
    check(n >= 2 && n % 2 == 0, "Sp needs an even dimension >= 2");
  else
    check(n >= 3, "SO needs dimension >= 3");
  require_generic_q(q);

  Representation rep;
  rep.kind = AlgebraKind::BMW;
  rep.name = (family == BmwFamily::Sp ? "sp" : "so") + std::to_string(n);
  rep.N = n;
  rep.q = q;
  rep.lambda = q - q.inverse();
  rep.a = a_value(q, a_choice);
  const long long m = static_cast<long long>(n) / 2;
  rep.nu = family == BmwFamily::Sp ? -qpow(q, -1 - static_cast<long long>(n))
                                   : qpow(q, 1 - static_cast<long long>(n));
  check(!rep.nu.is_zero() && rep.nu != q && rep.nu != -(q.inverse()),
        "BMW parameter nu degenerate");

  // Doubled weights 2*rho and the diagonal gauge that keeps entries
  // rational for odd SO (shifts the middle weight by 1/2).
  std::vector<long long> rho2(n), gauge2(n, 0);
  std::vector<int> eps(n, 1);
  const auto conj = [n](std::size_t i) { return n - 1 - i; };
  const long long nn = static_cast<long long>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long long ii = static_cast<long long>(i);
    if (family == BmwFamily::Sp) {
      rho2[i] = (ii < m) ? nn - 2 * ii : nn - 2 * ii - 2;
      eps[i] = (ii < m) ? 1 : -1;
    } else {
      if (2 * ii + 1 < nn)
        rho2[i] = nn - 2 - 2 * ii;
      else if (2 * ii + 1 == nn)
        rho2[i] = 0;  // middle index of odd SO
      else
        rho2[i] = nn - 2 * ii;
      if (2 * ii + 1 == nn) gauge2[i] = 1;
    }
  }
  auto tail_power = [&](std::size_t i, std::size_t j) {
    long long e2 = rho2[i] - rho2[j] + gauge2[i] - gauge2[j];
    check(e2 % 2 == 0, "internal: non-integral q-power in the metric tail");
    return qpow(q, e2 / 2);
  };

  // FRT-style R for the B/C/D series, then Rhat = P R.
  const Scalar lambda = rep.lambda;
  Matrix r0(n * n, {n, n});
  for (std::size_t i = 0; i < n; ++i) {
    if (i != conj(i))
      r0.at(idx(n, i, i), idx(n, i, i)) = q;
    else
      r0.at(idx(n, i, i), idx(n, i, i)) = Scalar(1);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (j == conj(i))
        r0.at(idx(n, i, j), idx(n, i, j)) += q.inverse();
      else
        r0.at(idx(n, i, j), idx(n, i, j)) += Scalar(1);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      r0.at(idx(n, i, j), idx(n, j, i)) += lambda;
      // metric tail e_{ij} (x) e_{i'j'}: row (i, i'), column (j, j')
      r0.at(idx(n, i, conj(i)), idx(n, j, conj(j))) -=
          lambda * Scalar(eps[i] * eps[j]) * tail_power(i, j);
    }
  rep.R = flip_permutation(n, n) * r0;
  rep.R.set_factors({n, n});

  // BMW invariants gate whichever formula variant is used.
  const Matrix id = Matrix::identity(n * n);
  rep.Rinv = inverse(rep.R);
  check(((rep.R - id * q) * (rep.R + id * q.inverse()) * (rep.R - id * rep.nu))
            .is_zero(),
        rep.name + ": BMW cubic failed");
  rep.Khat = kappa_of(rep.R, lambda);
  rep.Khat.set_factors({n, n});
  const Scalar q0 = (rep.nu.inverse() + lambda - rep.nu) / lambda;
  check((rep.Khat * rep.Khat - rep.Khat * q0).is_zero(),
        rep.name + ": Khat^2 != Q0 Khat");
  check(rank(rep.Khat) == 1, rep.name + ": Khat is not rank one");
  check((rep.Khat * rep.R - rep.Khat * rep.nu).is_zero() &&
            (rep.R * rep.Khat - rep.Khat * rep.nu).is_zero(),
        rep.name + ": Khat Rhat != nu Khat");

  const std::vector<std::size_t> shape{n, n, n};
  Matrix k1 = embed(rep.Khat, 1, shape), k2 = embed(rep.Khat, 2, shape);
  Matrix r1 = embed(rep.R, 1, shape), r2 = embed(rep.R, 2, shape);
  Matrix r1i = embed(rep.Rinv, 1, shape), r2i = embed(rep.Rinv, 2, shape);
  check((r1 * r2 * r1 - r2 * r1 * r2).is_zero(),
        rep.name + ": braid relation failed");
  check((k2 * r1 * k2 - k2 * rep.nu.inverse()).is_zero() &&
            (k2 * r1i * k2 - k2 * rep.nu).is_zero() &&
            (k1 * r2 * k1 - k1 * rep.nu.inverse()).is_zero() &&
            (k1 * r2i * k1 - k1 * rep.nu).is_zero(),
        rep.name + ": kappa sigma^{+-1} kappa relation failed");
  check((k1 * k2 * k1 - k1).is_zero() && (k2 * k1 * k2 - k2).is_zero(),
        rep.name + ": kappa kappa kappa relation failed");

  finish(rep);
  rep.b = (rep.a * rep.a) / (rep.nu * rep.nu);
  return rep;
}

Representation make_representation(const std::string& name, const Scalar& q,
                                   AChoice a_choice) {
  static const std::regex pat("^(gl|sp|so)([0-9]+)$");
  std::smatch m;
  if (!std::regex_match(name, m, pat))
    throw ConfigError("unknown representation '" + name +
                      "' (expected glN, spN or soN)");
  const std::size_t n = std::stoul(m[2].str());
  try {
    if (m[1] == "gl") return build_gl_hecke(n, q, a_choice);
    if (m[1] == "sp") return build_bmw(BmwFamily::Sp, n, q, a_choice);
    return build_bmw(BmwFamily::SO, n, q, a_choice);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(std::string("cannot build ") + name + ": " + e.what());
  }
}

Matrix antisymmetrizer(const Representation& rep, std::size_t k) {
  check(k >= 1, "antisymmetrizer level must be >= 1");
  Matrix a = Matrix::identity(std::vector<std::size_t>{rep.N});
  for (std::size_t lvl = 1; lvl < k; ++lvl) {
    std::vector<std::size_t> shape(lvl + 1, rep.N);
    Matrix wide = embed(a, 1, shape);
    Matrix s = embed(
        baxt_norm_with_a(rep, qpow(rep.q, 2 * static_cast<long long>(lvl)),
                         rep.q),
        lvl, shape);
    a = wide * s * wide;
  }
  return a;
}

std::optional<std::size_t> height(const Representation& rep,
                                  std::size_t k_max) {
  Matrix a = antisymmetrizer(rep, 1);
  for (std::size_t h = 1; h <= k_max; ++h) {
    std::vector<std::size_t> shape(h + 1, rep.N);
    Matrix wide = embed(a, 1, shape);
    Matrix next;
    try {
      next = wide *
             embed(baxt_norm_with_a(
                       rep, qpow(rep.q, 2 * static_cast<long long>(h)), rep.q),
                   h, shape) *
             wide;
    } catch (const PoleError&) {
      return std::nullopt;  // tower undefined past a degenerate level
    }
    if (next.is_zero() && rank(a) == 1) return h;
    a = std::move(next);
  }
  return std::nullopt;
}

}  // namespace rebax

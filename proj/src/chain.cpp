#include "rebax/chain.hpp"

#include <algorithm>
#include <complex>

namespace rebax {

namespace {
void check(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}
}  // namespace

std::vector<std::size_t> ChainModel::pre_trace_shape() const {
  std::vector<std::size_t> s(n(), rep.N);
  if (w_dim() > 0) s.push_back(w_dim());
  return s;
}

std::vector<std::size_t> ChainModel::post_trace_shape() const {
  std::vector<std::size_t> s(n() - 1, rep.N);
  if (w_dim() > 0) s.push_back(w_dim());
  return s;
}

RightBoundary make_trivial_right() { return {}; }

RightBoundary make_conjugated_right(const Representation& rep, Matrix ltilde,
                                    const Scalar& xi2) {
  check(ltilde.dim() == rep.N && ltilde.factors().size() == 1,
        "conjugated right boundary: Ltilde must be a one-site matrix");
  CheckResult cre = check_constant_re(rep, ltilde);
  check(cre.ok,
        "conjugated right boundary: Ltilde fails the constant reflection "
        "equation");
  RightBoundary rb;
  rb.kind = "conjugated";
  rb.Ltilde = ltilde;
  rb.xi2 = xi2;
  SpectralOp direct;
  direct.exclusions = rational_boundary_exclusions(ltilde, xi2);
  direct.build = [L = std::move(ltilde), xi2](const Scalar& x) {
    return rational_boundary(L, xi2, x);
  };
  rb.Kt = conjugate_boundary(direct, conjugation_b_sqrt(rep));
  return rb;
}

ChainModel make_chain(Representation rep, std::size_t sites,
                      BoundarySolution left, RightBoundary right) {
  if (sites < 1) throw ConfigError("chain needs at least one site");
  const std::size_t max_sites =
      rep.is_bmw() ? 3 : (rep.N == 2 ? 5 : (rep.N == 3 ? 3 : 2));
  if (sites > max_sites)
    throw ConfigError("chain length " + std::to_string(sites) +
                      " exceeds the exact-arithmetic budget for " + rep.name +
                      " (max " + std::to_string(max_sites) + ")");
  check(left.L.dim() == 0 || left.L.factors()[0] == rep.N,
        "left boundary does not act on V");
  ChainModel c{std::move(rep), sites, std::move(left), std::move(right)};
  return c;
}

Matrix dress(const ChainModel& chain, const Scalar& x) {
  const auto shape = chain.pre_trace_shape();
  std::vector<std::size_t> ksites{1};
  if (chain.w_dim() > 0) ksites.push_back(chain.n() + 1);
  Matrix m = embed_at(chain.left.K(x), ksites, shape);
  for (std::size_t site = 1; site < chain.n(); ++site) {
    Matrix r = embed(baxt(chain.rep, x), site, shape);
    m = r * m * r;
  }
  return m;
}

Matrix tau(const ChainModel& chain, const Scalar& x) {
  return weighted_partial_trace(dress(chain, x), chain.n(), chain.rep.Dop);
}

Matrix t_full(const ChainModel& chain, const Scalar& x) {
  if (chain.right.kind == "trivial") return tau(chain, x);
  const auto shape = chain.pre_trace_shape();
  Matrix kt = embed_at(chain.right.Kt(x), {chain.n()}, shape);
  return weighted_partial_trace(dress(chain, x) * kt, chain.n(),
                                chain.rep.Dop);
}

Ham ham_from_name(const std::string& name) {
  static const std::pair<const char*, Ham> table[] = {
      {"H0", Ham::H0}, {"H1", Ham::H1}, {"H2", Ham::H2}, {"H3", Ham::H3},
      {"H4", Ham::H4}, {"H5", Ham::H5}, {"H6", Ham::H6}, {"H7", Ham::H7}};
  for (const auto& [n, h] : table)
    if (name == n) return h;
  throw ConfigError("unknown Hamiltonian kind '" + name + "'");
}

const char* ham_name(Ham h) {
  static const char* names[] = {"H0", "H1", "H2", "H3", "H4", "H5", "H6", "H7"};
  return names[static_cast<int>(h)];
}

namespace {

Matrix bond_operator(const Representation& rep, bool bmw_kappa_term) {
  if (!bmw_kappa_term) return rep.R;
  return rep.R + rep.Khat * (rep.lambda * rep.nu / (rep.nu + rep.a));
}

bool left_has_rational_form(const BoundarySolution& left) {
  return left.kind == "rational" || left.kind == "polynomial" ||
         left.kind == "evaluation";
}

// lambda xi (L - xi)^{-1}, which equals -(lambda/2) K'(1) for the rational
// family K(x) = (L - xi x)(L - xi/x)^{-1}.
Matrix left_boundary_term(const BoundarySolution& left, const Scalar& lambda) {
  Matrix shifted = left.L - Matrix::identity(left.L.dim()) * left.xi;
  Matrix inv;
  try {
    inv = inverse(shifted);
  } catch (const SingularError&) {
    throw Error("left boundary term: L - xi is singular");
  }
  inv.set_factors(left.L.factors());
  return inv * (lambda * left.xi);
}

// Tr_{D(n)}(bond_{n-1} Kt_n(1)) / Tr_{D(n)}(Kt_n(1)) computed on the local
// pair of factors (n-1, n).
Matrix right_boundary_term(const ChainModel& chain, bool bmw_kappa_term) {
  const Representation& rep = chain.rep;
  Matrix kt1 = chain.right.kind == "trivial" ? Matrix::identity(rep.N)
                                             : chain.right.Kt(Scalar(1));
  const Scalar norm = (rep.Dop * kt1).trace();
  if (norm.is_zero())
    throw Error("degenerate right boundary: Tr_D(Ktilde(1)) = 0");
  const std::vector<std::size_t> pair{rep.N, rep.N};
  Matrix local = bond_operator(rep, bmw_kappa_term) * embed(kt1, 2, pair);
  Matrix traced = weighted_partial_trace(local, 2, rep.Dop);
  return traced * norm.inverse();
}

}  // namespace

Matrix hamiltonian(const ChainModel& chain, Ham kind) {
  const Representation& rep = chain.rep;
  const bool bmw = rep.is_bmw();
  const auto shape = chain.post_trace_shape();
  const std::size_t nsites = chain.sites;  // = n - 1 interacting sites

  const bool is_bmw_kind = kind == Ham::H4 || kind == Ham::H5 ||
                           kind == Ham::H6 || kind == Ham::H7;
  if (is_bmw_kind && !bmw)
    throw Error(std::string(ham_name(kind)) + " needs a BMW representation");
  if (!is_bmw_kind && kind != Ham::H1 && bmw)
    throw Error(std::string(ham_name(kind)) + " needs a Hecke representation");

  const bool wants_left = kind == Ham::H0 || kind == Ham::H2 ||
                          kind == Ham::H3 || kind == Ham::H4 ||
                          kind == Ham::H6 || kind == Ham::H7;
  const bool wants_right = kind == Ham::H0 || kind == Ham::H3 ||
                           kind == Ham::H6 || kind == Ham::H7;
  // A trivial left boundary has K'(1) = 0; its boundary term is absent.
  const bool left_term_present = chain.left.kind != "trivial";
  if (wants_left && left_term_present && !left_has_rational_form(chain.left))
    throw Error(std::string(ham_name(kind)) +
                " unavailable: no closed-form boundary derivative for left "
                "boundary kind '" +
                chain.left.kind + "'");
  if (!wants_left && left_term_present)
    throw Error(std::string(ham_name(kind)) + " assumes a trivial left boundary");
  if (!wants_right && chain.right.kind != "trivial")
    throw Error(std::string(ham_name(kind)) + " assumes a trivial right boundary");

  const bool kappa_term = bmw && is_bmw_kind;
  std::size_t dim = 1;
  for (auto f : shape) dim *= f;
  Matrix h(dim, shape);
  const Matrix bond = bond_operator(rep, kappa_term);
  for (std::size_t m = 1; m + 1 <= nsites; ++m) h += embed(bond, m, shape);

  if (wants_left && left_term_present) {
    std::vector<std::size_t> lsites{1};
    if (chain.w_dim() > 0) lsites.push_back(chain.n());
    h += embed_at(left_boundary_term(chain.left, rep.lambda), lsites, shape);
  }
  if (wants_right)
    h += embed(right_boundary_term(chain, kappa_term), nsites, shape);
  return h;
}

CheckResult check_h_commutes(const ChainModel& chain, Ham kind,
                             const std::vector<Scalar>& zs) {
  const Matrix h = hamiltonian(chain, kind);
  CheckResult res;
  for (const auto& z : zs) {
    const Matrix tz = t_full(chain, z);
    if (!commutator_is_zero(h, tz)) {
      res.ok = false;
      res.note = std::string("[") + ham_name(kind) + ", t(" + z.str() +
                 ")] != 0";
      return res;
    }
  }
  return res;
}

namespace {

std::vector<std::complex<double>> durand_kerner(
    const std::vector<double>& monic) {
  const std::size_t d = monic.size() - 1;
  std::vector<std::complex<double>> z(d), pw(d);
  const std::complex<double> seed(0.4, 0.9);
  std::complex<double> acc(1.0, 0.0);
  for (std::size_t k = 0; k < d; ++k) {
    acc *= seed;
    z[k] = acc;
  }
  auto eval = [&](std::complex<double> v) {
    std::complex<double> r(monic[d], 0.0);
    for (std::size_t k = d; k-- > 0;) r = r * v + monic[k];
    return r;
  };
  for (int it = 0; it < 500; ++it) {
    double moved = 0;
    for (std::size_t k = 0; k < d; ++k) {
      std::complex<double> denom(1.0, 0.0);
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) denom *= z[k] - z[j];
      std::complex<double> step = eval(z[k]) / denom;
      z[k] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-14) break;
  }
  return z;
}

}  // namespace

Spectrum spectrum(const Matrix& h) {
  Spectrum s;
  s.char_poly = char_polynomial(h);
  s.exact_roots = rational_roots(s.char_poly);

  std::vector<Scalar> rem = s.char_poly;
  for (const auto& [root, mult] : s.exact_roots) {
    const std::vector<Scalar> lin{-root, Scalar(1)};
    for (std::size_t k = 0; k < mult; ++k) rem = poly_divmod(rem, lin).first;
  }
  std::size_t deg = rem.size();
  while (deg > 0 && rem[deg - 1].is_zero()) --deg;
  if (deg >= 2) {
    std::vector<double> monic(deg);
    const Scalar lead = rem[deg - 1];
    for (std::size_t k = 0; k < deg; ++k)
      monic[k] = (rem[k] / lead).to_double();
    for (const auto& root : durand_kerner(monic))
      s.approx_roots.emplace_back(root.real(), root.imag());
    std::sort(s.approx_roots.begin(), s.approx_roots.end());
  }
  return s;
}

}  // namespace rebax

#include "rebax/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rebax {

namespace {

std::size_t product(const std::vector<std::size_t>& v) {
  std::size_t p = 1;
  for (auto x : v) p *= x;
  return p;
}

// Mixed-radix index helpers for tensor factor bookkeeping.
struct Shape {
  std::vector<std::size_t> dims;
  std::vector<std::size_t> strides;
  explicit Shape(const std::vector<std::size_t>& d) : dims(d) {
    strides.assign(d.size(), 1);
    for (std::size_t i = d.size(); i-- > 1;)
      strides[i - 1] = strides[i] * dims[i];
  }
  std::size_t total() const { return dims.empty() ? 1 : strides[0] * dims[0]; }
  void decode(std::size_t flat, std::vector<std::size_t>& out) const {
    out.resize(dims.size());
    for (std::size_t i = 0; i < dims.size(); ++i) {
      out[i] = flat / strides[i];
      flat %= strides[i];
    }
  }
  std::size_t encode(const std::vector<std::size_t>& idx) const {
    std::size_t flat = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) flat += idx[i] * strides[i];
    return flat;
  }
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

}  // namespace

Matrix::Matrix(std::size_t dim) : dim_(dim), factors_{dim}, e_(dim * dim) {}

Matrix::Matrix(std::size_t dim, std::vector<std::size_t> factors)
    : dim_(dim), factors_(std::move(factors)), e_(dim * dim) {
  require(product(factors_) == dim_, "factor product does not match dim");
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::identity(const std::vector<std::size_t>& factors) {
  Matrix m = identity(product(factors));
  m.set_factors(factors);
  return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows,
                         std::vector<std::size_t> factors) {
  Matrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == rows.size(), "from_rows: non-square data");
    for (std::size_t c = 0; c < rows.size(); ++c) m.at(r, c) = rows[r][c];
  }
  if (!factors.empty()) m.set_factors(std::move(factors));
  return m;
}

void Matrix::set_factors(std::vector<std::size_t> f) {
  require(product(f) == dim_, "factor product does not match dim");
  factors_ = std::move(f);
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require(dim_ == o.dim_, "dimension mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require(dim_ == o.dim_, "dimension mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require(dim_ == o.dim_, "dimension mismatch");
  Matrix r(dim_, factors_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        const Scalar& y = o.at(k, j);
        if (y.is_zero()) continue;
        r.at(i, j) += x * y;
      }
    }
  }
  return r;
}

Matrix Matrix::operator*(const Scalar& s) const {
  Matrix r = *this;
  for (auto& x : r.e_) x *= s;
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& x : r.e_) x = -x;
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return dim_ == o.dim_ && e_ == o.e_;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> Matrix::first_nonzero()
    const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (!at(i, j).is_zero()) return std::make_pair(i, j);
  return std::nullopt;
}

std::optional<Scalar> Matrix::as_scalar_multiple_of_identity() const {
  if (dim_ == 0) return std::nullopt;
  Scalar s = at(0, 0);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i == j ? at(i, j) != s : !at(i, j).is_zero()) return std::nullopt;
    }
  return s;
}

Scalar Matrix::trace() const {
  Scalar t;
  for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

Matrix Matrix::transpose() const {
  Matrix r(dim_, factors_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
Matrix operator*(const Scalar& s, const Matrix& m) { return m * s; }

Matrix kron(const Matrix& a, const Matrix& b) {
  std::vector<std::size_t> f = a.factors();
  f.insert(f.end(), b.factors().begin(), b.factors().end());
  Matrix r(a.dim() * b.dim(), f);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Scalar& x = a.at(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.dim(); ++k)
        for (std::size_t l = 0; l < b.dim(); ++l) {
          const Scalar& y = b.at(k, l);
          if (y.is_zero()) continue;
          r.at(i * b.dim() + k, j * b.dim() + l) = x * y;
        }
    }
  return r;
}

Matrix embed(const Matrix& op, std::size_t site,
             const std::vector<std::size_t>& shape) {
  std::vector<std::size_t> sites(op.factors().size());
  std::iota(sites.begin(), sites.end(), site);
  return embed_at(op, sites, shape);
}

Matrix embed_at(const Matrix& op, const std::vector<std::size_t>& sites,
                const std::vector<std::size_t>& shape) {
  require(!sites.empty() && sites.size() == op.factors().size(),
          "embed: sites must match the operator's factors");
  for (std::size_t k = 0; k < sites.size(); ++k) {
    require(sites[k] >= 1 && sites[k] <= shape.size(),
            "embed: site out of range");
    require(k == 0 || sites[k] > sites[k - 1],
            "embed: sites must be strictly increasing");
    require(shape[sites[k] - 1] == op.factors()[k],
            "embed: factor dimension mismatch at site " +
                std::to_string(sites[k]));
  }
  Shape full(shape);
  Shape opsh(op.factors());
  std::vector<std::size_t> rest;
  for (std::size_t s = 1; s <= shape.size(); ++s)
    if (std::find(sites.begin(), sites.end(), s) == sites.end())
      rest.push_back(s);
  std::vector<std::size_t> rest_dims;
  for (auto s : rest) rest_dims.push_back(shape[s - 1]);
  Shape restsh(rest_dims);

  Matrix r(full.total(), shape);
  std::vector<std::size_t> oi, oj, ri, row(shape.size()), col(shape.size());
  for (std::size_t a = 0; a < op.dim(); ++a) {
    opsh.decode(a, oi);
    for (std::size_t b = 0; b < op.dim(); ++b) {
      const Scalar& x = op.at(a, b);
      if (x.is_zero()) continue;
      opsh.decode(b, oj);
      for (std::size_t t = 0; t < restsh.total(); ++t) {
        restsh.decode(t, ri);
        for (std::size_t k = 0; k < sites.size(); ++k) {
          row[sites[k] - 1] = oi[k];
          col[sites[k] - 1] = oj[k];
        }
        for (std::size_t k = 0; k < rest.size(); ++k) {
          row[rest[k] - 1] = ri[k];
          col[rest[k] - 1] = ri[k];
        }
        r.at(full.encode(row), full.encode(col)) = x;
      }
    }
  }
  return r;
}

Matrix flip_permutation(std::size_t n, std::size_t m) {
  Matrix p(n * m, {m, n});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) p.at(j * n + i, i * m + j) = Scalar(1);
  return p;
}

Matrix inverse(const Matrix& a) {
  const std::size_t n = a.dim();
  Matrix m = a;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m.at(piv, col).is_zero()) ++piv;
    if (piv == n)
      throw SingularError("singular matrix: no pivot at elimination stage " +
                          std::to_string(col + 1) + " of " + std::to_string(n));
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m.at(piv, j), m.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    Scalar ip = m.at(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m.at(col, j) *= ip;
      inv.at(col, j) *= ip;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m.at(r, col).is_zero()) continue;
      Scalar f = m.at(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        m.at(r, j) -= f * m.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  inv.set_factors(a.factors());
  return inv;
}

namespace {

std::size_t rank_field(Matrix m) {
  const std::size_t n = m.dim();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < n; ++col) {
    std::size_t piv = r;
    while (piv < n && m.at(piv, col).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != r)
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(r, j));
    Scalar ip = m.at(r, col).inverse();
    for (std::size_t i = r + 1; i < n; ++i) {
      if (m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col) * ip;
      for (std::size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

// Bareiss fraction-free elimination over the integers; exact divisions only.
std::size_t rank_bareiss(const Matrix& a) {
  const std::size_t n = a.dim();
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < n; ++j)
      l = boost::multiprecision::lcm(
          l, boost::multiprecision::denominator(a.at(i, j).rat()));
    for (std::size_t j = 0; j < n; ++j) {
      const BigRat v = a.at(i, j).rat() * BigRat(l);
      m[i][j] = boost::multiprecision::numerator(v);
    }
  }
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < n; ++col) {
    std::size_t piv = r;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) continue;
    if (piv != r) std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        BigInt num = m[i][j] * m[r][col] - m[i][col] * m[r][j];
        BigInt quo, rem;
        boost::multiprecision::divide_qr(num, prev, quo, rem);
        if (rem != 0) throw Error("internal: inexact Bareiss division");
        m[i][j] = std::move(quo);
      }
      m[i][col] = 0;
    }
    prev = m[r][col];
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const Matrix& a) {
  bool rational = true;
  for (std::size_t i = 0; i < a.dim() && rational; ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!a.at(i, j).is_rational()) {
        rational = false;
        break;
      }
  return rational ? rank_bareiss(a) : rank_field(a);
}

Matrix weighted_partial_trace(const Matrix& e, std::size_t site,
                              const Matrix& w) {
  const auto& f = e.factors();
  require(site >= 1 && site <= f.size(), "partial trace: site out of range");
  require(w.dim() == f[site - 1],
          "partial trace: weight dimension does not match the traced factor");
  std::vector<std::size_t> out_f;
  for (std::size_t s = 0; s < f.size(); ++s)
    if (s != site - 1) out_f.push_back(f[s]);
  Shape full(f), outsh(out_f);
  Matrix r(outsh.total(), out_f.empty() ? std::vector<std::size_t>{1} : out_f);

  std::vector<std::size_t> oi, oj, row(f.size()), col(f.size());
  const std::size_t ds = f[site - 1];
  for (std::size_t a = 0; a < r.dim(); ++a) {
    outsh.decode(a, oi);
    for (std::size_t b = 0; b < r.dim(); ++b) {
      outsh.decode(b, oj);
      Scalar acc;
      // Tr_s(W_s E)[a,b] = sum_{t,u} W[t,u] E[(a,u),(b,t)]
      for (std::size_t t = 0; t < ds; ++t)
        for (std::size_t u = 0; u < ds; ++u) {
          const Scalar& wv = w.at(t, u);
          if (wv.is_zero()) continue;
          std::size_t k = 0;
          for (std::size_t s = 0; s < f.size(); ++s) {
            if (s == site - 1) {
              row[s] = u;
              col[s] = t;
            } else {
              row[s] = oi[k];
              col[s] = oj[k];
              ++k;
            }
          }
          const Scalar& ev = e.at(full.encode(row), full.encode(col));
          if (!ev.is_zero()) acc += wv * ev;
        }
      r.at(a, b) = acc;
    }
  }
  return r;
}

Matrix partial_trace(const Matrix& e, std::size_t site) {
  const auto& f = e.factors();
  require(site >= 1 && site <= f.size(), "partial trace: site out of range");
  return weighted_partial_trace(e, site, Matrix::identity(f[site - 1]));
}

std::vector<Scalar> char_polynomial(const Matrix& a) {
  const std::size_t n = a.dim();
  std::vector<Scalar> c(n + 1);
  c[n] = Scalar(1);
  Matrix m = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    Scalar ck = -(m.trace() / Scalar(static_cast<long long>(k)));
    c[n - k] = ck;
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) += ck;
  }
  return c;
}

std::vector<Scalar> minimal_polynomial(const Matrix& a) {
  const std::size_t n = a.dim();
  const std::size_t nn = n * n;
  // Echelonized vectorizations of A^0, A^1, ...; each row remembers its
  // expansion in powers of A.
  std::vector<std::vector<Scalar>> basis;
  std::vector<std::size_t> pivots;
  std::vector<std::vector<Scalar>> combos;
  Matrix p = Matrix::identity(n);
  for (std::size_t deg = 0; deg <= n; ++deg) {
    std::vector<Scalar> v(nn);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = p.at(i, j);
    std::vector<Scalar> combo(deg + 1);
    combo[deg] = Scalar(1);
    for (std::size_t r = 0; r < basis.size(); ++r) {
      const Scalar& lead = v[pivots[r]];
      if (lead.is_zero()) continue;
      Scalar f = lead;
      for (std::size_t k = 0; k < nn; ++k) v[k] -= f * basis[r][k];
      for (std::size_t k = 0; k < combos[r].size() && k < combo.size(); ++k)
        combo[k] -= f * combos[r][k];
    }
    std::size_t piv = nn;
    for (std::size_t k = 0; k < nn; ++k)
      if (!v[k].is_zero()) {
        piv = k;
        break;
      }
    if (piv == nn) return combo;  // monic dependence found
    Scalar ip = v[piv].inverse();
    for (auto& x : v) x *= ip;
    for (auto& x : combo) x *= ip;
    basis.push_back(std::move(v));
    pivots.push_back(piv);
    combos.push_back(std::move(combo));
    p = p * a;
  }
  throw Error("minimal polynomial search failed");  // unreachable
}

Matrix eval_poly(const std::vector<Scalar>& p, const Matrix& a) {
  Matrix r(a.dim(), a.factors());
  Matrix pw = Matrix::identity(a.dim());
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (!p[k].is_zero()) r += pw * p[k];
    if (k + 1 < p.size()) pw = pw * a;
  }
  return r;
}

std::pair<std::vector<Scalar>, std::vector<Scalar>> poly_divmod(
    const std::vector<Scalar>& num, const std::vector<Scalar>& den) {
  std::vector<Scalar> r = num;
  auto deg = [](const std::vector<Scalar>& p) {
    std::size_t d = p.size();
    while (d > 0 && p[d - 1].is_zero()) --d;
    return d;  // number of meaningful coefficients
  };
  const std::size_t dd = deg(den);
  if (dd == 0) throw Error("polynomial division by zero");
  std::size_t dn = deg(r);
  if (dn < dd) return {{Scalar(0)}, r};
  std::vector<Scalar> q(dn - dd + 1);
  const Scalar lead_inv = den[dd - 1].inverse();
  while ((dn = deg(r)) >= dd) {
    Scalar f = r[dn - 1] * lead_inv;
    q[dn - dd] = f;
    for (std::size_t k = 0; k < dd; ++k) r[dn - dd + k] -= f * den[k];
  }
  return {q, r};
}

bool commutator_is_zero(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw Error("commutator: dimension mismatch");
  return (a * b - b * a).is_zero();
}

namespace {

std::vector<BigInt> divisors_bounded(BigInt n) {
  n = boost::multiprecision::abs(n);
  std::vector<BigInt> divs{1};
  for (long long p = 2; p <= 1000000 && BigInt(p) * p <= n; ++p) {
    if (n % p != 0) continue;
    std::size_t count = divs.size();
    BigInt pk = 1;
    while (n % p == 0) {
      n /= p;
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
    }
  }
  if (n > 1) {
    std::size_t count = divs.size();
    for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * n);
  }
  std::sort(divs.begin(), divs.end());
  divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
  return divs;
}

Scalar eval_scalar_poly(const std::vector<Scalar>& p, const Scalar& x) {
  Scalar v;
  for (std::size_t k = p.size(); k-- > 0;) v = v * x + p[k];
  return v;
}

}  // namespace

std::vector<std::pair<Scalar, std::size_t>> rational_roots(
    const std::vector<Scalar>& p) {
  for (const auto& c : p)
    if (!c.is_rational()) return {};
  std::vector<Scalar> cur = p;
  auto deg = [](const std::vector<Scalar>& v) {
    std::size_t d = v.size();
    while (d > 0 && v[d - 1].is_zero()) --d;
    return d;
  };
  std::vector<std::pair<Scalar, std::size_t>> roots;
  std::size_t dcur = deg(cur);
  if (dcur == 0) return roots;
  std::size_t z = 0;
  while (z + 1 < dcur && cur[z].is_zero()) ++z;
  if (z > 0) {
    roots.emplace_back(Scalar(0), z);
    cur.erase(cur.begin(), cur.begin() + z);
  }

  auto find_one = [&]() -> std::optional<Scalar> {
    const std::size_t d = deg(cur);
    if (d <= 1) return std::nullopt;
    if (d == 2) return -(cur[0] / cur[1]);
    BigInt l = 1;
    for (std::size_t k = 0; k < d; ++k)
      l = boost::multiprecision::lcm(
          l, boost::multiprecision::denominator(cur[k].rat()));
    std::vector<BigInt> ic(d);
    for (std::size_t k = 0; k < d; ++k)
      ic[k] = boost::multiprecision::numerator(cur[k].rat() * BigRat(l));
    for (const BigInt& pn : divisors_bounded(ic[0]))
      for (const BigInt& qd : divisors_bounded(ic[d - 1]))
        for (int sign : {+1, -1}) {
          Scalar cand{BigRat(sign * pn, qd)};
          if (eval_scalar_poly(cur, cand).is_zero()) return cand;
        }
    return std::nullopt;
  };

  while (auto root = find_one()) {
    std::size_t mult = 0;
    const std::vector<Scalar> den{-(*root), Scalar(1)};
    while (true) {
      auto [quo, rem] = poly_divmod(cur, den);
      bool zero = true;
      for (const auto& r : rem) zero = zero && r.is_zero();
      if (!zero) break;
      cur = quo;
      ++mult;
    }
    if (mult == 0) break;  // not expected; guards against loops
    roots.emplace_back(*root, mult);
  }
  return roots;
}

}  // namespace rebax

#include "rebax/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rebax {

namespace {

BigInt num(const BigRat& r) { return boost::multiprecision::numerator(r); }
BigInt den(const BigRat& r) { return boost::multiprecision::denominator(r); }

bool is_square_free_small(long long d) {
  for (long long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

// Integer square root with exactness flag.
std::pair<BigInt, bool> isqrt_exact(const BigInt& n) {
  if (n < 0) return {BigInt(0), false};
  BigInt r = boost::multiprecision::sqrt(n);
  return {r, r * r == n};
}

std::optional<BigRat> rational_sqrt(const BigRat& r) {
  if (r < 0) return std::nullopt;
  auto [pn, okn] = isqrt_exact(num(r));
  if (!okn) return std::nullopt;
  auto [pd, okd] = isqrt_exact(den(r));
  if (!okd) return std::nullopt;
  return BigRat(pn, pd);
}

BigRat parse_rat(const std::string& s) {
  std::string t;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  }
  if (t.empty()) throw Error("empty rational literal");
  if (!t.empty() && t[0] == '+') t = t.substr(1);
  try {
    BigRat r(t);
    return r;
  } catch (const std::exception&) {
    throw Error("cannot parse rational literal '" + s + "'");
  }
}

std::string rat_str(const BigRat& r) {
  std::ostringstream os;
  os << num(r);
  if (den(r) != 1) os << "/" << den(r);
  return os.str();
}

}  // namespace

Scalar::Scalar(long long n, long long d) : d_(0) {
  if (d == 0) throw Error("zero denominator");
  a_ = BigRat(n, d);
}

Scalar::Scalar(BigRat a, BigRat b, long long d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ < 0) throw Error("negative radicand: real quadratic extensions only");
  if (d_ > 1 && !is_square_free_small(d_))
    throw Error("radicand " + std::to_string(d_) + " is not square-free");
  normalize();
}

void Scalar::normalize() {
  if (d_ == 0) {
    // sqrt(0) = 0, the radical coefficient is meaningless
    b_ = 0;
  } else if (d_ == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
  } else if (b_ == 0) {
    d_ = 0;
  }
}

Scalar Scalar::sqrt_of(long long d) {
  if (d < 0) throw Error("negative radicand: real quadratic extensions only");
  if (d == 0) return Scalar(0);
  if (d == 1) return Scalar(1);
  return Scalar(BigRat(0), BigRat(1), d);
}

long long Scalar::merge_radicand(const Scalar& x, const Scalar& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0) return x.d_;
  if (x.d_ != y.d_)
    throw Error("incompatible radicands sqrt(" + std::to_string(x.d_) +
                ") vs sqrt(" + std::to_string(y.d_) + ")");
  return x.d_;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (b_ == 0) {
    Scalar r;
    r.a_ = 1 / a_;
    return r;
  }
  // 1/(a+b*sqrt(d)) = (a-b*sqrt(d))/(a^2-d*b^2); the denominator cannot
  // vanish for square-free d > 1 and rational a, b.
  BigRat n = a_ * a_ - BigRat(d_) * b_ * b_;
  if (n == 0) throw Error("internal: zero norm in quadratic field");
  Scalar r;
  r.a_ = a_ / n;
  r.b_ = -b_ / n;
  r.d_ = d_;
  r.normalize();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  d_ = merge_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  d_ = merge_radicand(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  long long d = merge_radicand(*this, o);
  BigRat a = a_ * o.a_ + BigRat(d) * b_ * o.b_;
  BigRat b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

Scalar qpow(const Scalar& base, long long e) {
  if (e < 0) return qpow(base.inverse(), -e);
  Scalar r(1), p = base;
  while (e > 0) {
    if (e & 1) r *= p;
    p *= p;
    e >>= 1;
  }
  return r;
}

std::string Scalar::str() const {
  if (b_ == 0) return rat_str(a_);
  std::string s = rat_str(a_);
  s += (b_ > 0) ? "+" : "-";
  s += rat_str(boost::multiprecision::abs(b_));
  s += "*sqrt(" + std::to_string(d_) + ")";
  return s;
}

Scalar Scalar::parse(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  }
  auto sq = t.find("*sqrt(");
  if (sq == std::string::npos) return Scalar(parse_rat(t));
  if (t.back() != ')') throw Error("cannot parse scalar '" + text + "'");
  long long d = 0;
  try {
    d = std::stoll(t.substr(sq + 6, t.size() - sq - 7));
  } catch (const std::exception&) {
    throw Error("cannot parse radicand in '" + text + "'");
  }
  std::string head = t.substr(0, sq);
  // head is "<rat>" (pure radical term) or "<rat><sign><rat>"; term signs can
  // only occur at position 0 or at the split point.
  size_t split = std::string::npos;
  for (size_t i = 1; i < head.size(); ++i) {
    if (head[i] == '+' || head[i] == '-') {
      split = i;
      break;
    }
  }
  BigRat a = 0, b;
  if (split == std::string::npos) {
    b = parse_rat(head);
  } else {
    a = parse_rat(head.substr(0, split));
    std::string btext = head.substr(split);
    if (btext[0] == '+') btext = btext.substr(1);
    b = parse_rat(btext);
  }
  return Scalar(a, b, d);
}

double Scalar::to_double() const {
  double v = a_.convert_to<double>();
  if (b_ != 0) v += b_.convert_to<double>() * std::sqrt(static_cast<double>(d_));
  return v;
}

std::pair<long long, BigRat> square_free_kernel(const BigRat& r) {
  if (r < 0) throw Error("square-free kernel of a negative rational");
  if (r == 0) return {0, BigRat(0)};
  // r = num/den = (num*den) / den^2
  BigInt n = num(r) * den(r);
  BigInt s = 1, d = 1;
  for (long long p = 2; p <= 1000000 && BigInt(p) * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      for (int k = 0; k < e / 2; ++k) s *= p;
      if (e & 1) d *= p;
    }
  }
  if (n > 1) {
    auto [root, exact] = isqrt_exact(n);
    if (exact)
      s *= root;
    else
      d *= n;  // residual factor treated as square-free, fine at desk scale
  }
  if (d > BigInt(std::numeric_limits<long long>::max()))
    throw Error("radicand out of range");
  return {d.convert_to<long long>(), BigRat(s, den(r))};
}

std::optional<Scalar> sqrt_exact(const Scalar& s, long long ambient_d) {
  if (s.is_zero()) return Scalar(0);
  const long long d = s.radicand() != 0 ? s.radicand() : ambient_d;
  if (s.is_rational()) {
    if (auto r = rational_sqrt(s.rat())) return Scalar(*r);
    // s = (y*sqrt(d))^2 with y^2 = s/d
    if (d > 1) {
      if (auto y = rational_sqrt(s.rat() / BigRat(d)))
        return Scalar(BigRat(0), *y, d);
    }
    return std::nullopt;
  }
  // (x + y*sqrt(d))^2 = x^2 + d*y^2 + 2*x*y*sqrt(d); eliminating y gives
  // x^2 = (A +- sqrt(A^2 - d*B^2))/2.
  const BigRat &A = s.rat(), &B = s.rad();
  auto disc = rational_sqrt(A * A - BigRat(d) * B * B);
  if (!disc) return std::nullopt;
  for (int sign : {+1, -1}) {
    BigRat t = (A + (sign > 0 ? *disc : -*disc)) / 2;
    if (auto x = rational_sqrt(t)) {
      if (*x == 0) continue;
      BigRat y = B / (2 * *x);
      Scalar cand(*x, y, d);
      if (cand * cand == s) {
        if (cand.rat() < 0 || (cand.rat() == 0 && cand.rad() < 0))
          cand = -cand;
        return cand;
      }
    }
  }
  return std::nullopt;
}

Scalar sqrt_extend(const Scalar& s, long long ambient_d) {
  if (auto r = sqrt_exact(s, ambient_d)) return *r;
  if (!s.is_rational())
    throw Error("no exact square root of " + s.str() + " in its field");
  if (s.rat() < 0)
    throw Error("square root of negative rational " + s.str() +
                ": real quadratic extensions only");
  auto [d, cof] = square_free_kernel(s.rat());
  return Scalar(BigRat(0), cof, d);
}

Scalar ScalarSampler::sample(int bit_bound, const std::vector<Scalar>& exclude) {
  if (bit_bound < 2 || bit_bound > 62)
    throw Error("bit_bound must be in [2, 62]");
  const std::uint64_t bound = (1ULL << bit_bound) - 1;
  for (int attempt = 0; attempt < 20000; ++attempt) {
    long long n = static_cast<long long>(1 + gen_() % bound);
    long long d = static_cast<long long>(1 + gen_() % bound);
    if (gen_() & 1) n = -n;
    Scalar v(n, d);
    bool bad = false;
    for (const auto& e : exclude) {
      if (v == e) {
        bad = true;
        break;
      }
    }
    if (!bad) return v;
  }
  throw Error("exclusion list exhausts the sample space");
}

}  // namespace rebax

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rebax {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Bad user-supplied configuration (CLI maps this to exit code 2).
struct ConfigError : Error {
  using Error::Error;
};
struct SingularError : Error {
  using Error::Error;
};
struct PoleError : Error {
  using Error::Error;
};

// Exact element a + b*sqrt(d) of Q or of a real quadratic field Q(sqrt(d)).
// d is a square-free integer >= 0, fixed per computation context; pure
// rationals carry b = 0, d = 0. cpp_rational keeps fractions reduced with
// positive denominators, so equal values are bitwise equal after
// normalization and operator== is exact.
class Scalar {
 public:
  Scalar() : d_(0) {}
  Scalar(long long n) : a_(n), d_(0) {}  // NOLINT: implicit by design
  Scalar(long long num, long long den);
  explicit Scalar(BigRat r) : a_(std::move(r)), d_(0) {}
  Scalar(BigRat a, BigRat b, long long d);

  // sqrt(d) as an element of Q(sqrt(d)); d must be square-free and >= 0.
  static Scalar sqrt_of(long long d);

  const BigRat& rat() const { return a_; }
  const BigRat& rad() const { return b_; }
  long long radicand() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return b_ == 0 && a_ == 1; }
  bool is_rational() const { return b_ == 0; }
  bool is_negative_rational() const { return b_ == 0 && a_ < 0; }

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  bool operator==(const Scalar& o) const {
    return d_ == o.d_ && a_ == o.a_ && b_ == o.b_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // "p/q" or "p/q+r/s*sqrt(d)" (sign of the radical coefficient folded in).
  std::string str() const;
  static Scalar parse(const std::string& text);

  double to_double() const;

 private:
  BigRat a_, b_;
  long long d_;
  void normalize();
  // Common radicand of two operands; pure rationals are compatible with
  // any field, mixing two distinct extensions is an error.
  static long long merge_radicand(const Scalar& x, const Scalar& y);
};

Scalar operator+(Scalar lhs, const Scalar& rhs);
Scalar operator-(Scalar lhs, const Scalar& rhs);
Scalar operator*(Scalar lhs, const Scalar& rhs);
Scalar operator/(Scalar lhs, const Scalar& rhs);

// Integer power, negative exponents via exact inverse.
Scalar qpow(const Scalar& base, long long e);

// Decompose a nonnegative rational as r = d * s^2 with d a square-free
// integer. Factors out primes up to 10^6 and perfect-square remainders;
// desk-scale inputs stay exact.
std::pair<long long, BigRat> square_free_kernel(const BigRat& r);

// Exact square root of s within the ambient field Q(sqrt(ambient_d)), if one
// exists. Pure rationals normalize to radicand 0, so the ambient field is
// passed explicitly; a nonzero radicand of s overrides it. Canonical branch:
// positive rational part, or positive radical part when the rational part
// vanishes.
std::optional<Scalar> sqrt_exact(const Scalar& s, long long ambient_d = 0);

// Square root of a rational s >= 0, extending to Q(sqrt(d)) with d the
// square-free kernel of s when s is not a square in the ambient field.
// Throws on negative s (real quadratic extensions only) and on irrational s
// that is not a square in its own field.
Scalar sqrt_extend(const Scalar& s, long long ambient_d = 0);

// Deterministic nonzero rational samples for generic-point identity checks.
// Same seed, same sequence.
class ScalarSampler {
 public:
  explicit ScalarSampler(std::uint64_t seed) : gen_(seed) {}
  // Numerator and denominator bounded by 2^bit_bound, value not in
  // `exclude`. Throws when the exclusions exhaust the sample space.
  Scalar sample(int bit_bound, const std::vector<Scalar>& exclude = {});

 private:
  std::mt19937_64 gen_;
};

}  // namespace rebax

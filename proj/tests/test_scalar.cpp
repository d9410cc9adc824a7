#include <doctest.h>

#include "rebax/scalar.hpp"

using namespace rebax;

TEST_CASE("rational field operations") {
  CHECK(Scalar(1, 2) + Scalar(1, 3) == Scalar(5, 6));
  CHECK(Scalar(3, 4).inverse() == Scalar(4, 3));
  CHECK(Scalar(2, 3) * Scalar(9, 4) == Scalar(3, 2));
  CHECK(Scalar(1) / Scalar(-2, 5) == Scalar(-5, 2));
  CHECK_THROWS_AS(Scalar(0).inverse(), Error);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), Error);
}

TEST_CASE("quadratic extension arithmetic") {
  Scalar r2 = Scalar::sqrt_of(2);
  Scalar a = Scalar(2) + r2;
  Scalar b = Scalar(2) - r2;
  CHECK(a * b == Scalar(2));  // (2 + sqrt2)(2 - sqrt2) = 2
  CHECK(r2 * r2 == Scalar(2));
  CHECK((a * a.inverse()).is_one());
  // mixing distinct radicands is rejected
  CHECK_THROWS_AS(r2 + Scalar::sqrt_of(3), Error);
  // rationals embed into any extension
  CHECK((r2 + Scalar(1, 2)) - r2 == Scalar(1, 2));
}

TEST_CASE("canonical form is unique") {
  // d = 1 folds into the rational part, b = 0 drops the radicand
  Scalar x(BigRat(1, 2), BigRat(3, 4), 1);
  CHECK(x == Scalar(5, 4));
  CHECK(x.radicand() == 0);
  Scalar y(BigRat(7), BigRat(0), 5);
  CHECK(y.radicand() == 0);
  CHECK_THROWS_AS(Scalar(BigRat(1), BigRat(1), 12), Error);  // 12 = 4*3
  CHECK_THROWS_AS(Scalar(BigRat(1), BigRat(1), -2), Error);
}

TEST_CASE("field axioms at random points") {
  ScalarSampler smp(42);
  for (int ext = 0; ext < 2; ++ext) {
    for (int i = 0; i < 20; ++i) {
      Scalar a = smp.sample(10), b = smp.sample(10), c = smp.sample(10);
      if (ext) {
        Scalar r5 = Scalar::sqrt_of(5);
        a = a + r5 * smp.sample(6);
        b = b - r5 * smp.sample(6);
        c = c + r5;
      }
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      CHECK(a - a == Scalar(0));
    }
  }
}

TEST_CASE("sqrt_exact") {
  CHECK(*sqrt_exact(Scalar(1, 4)) == Scalar(1, 2));
  CHECK(*sqrt_exact(Scalar(2), 2) == Scalar::sqrt_of(2));
  CHECK_FALSE(sqrt_exact(Scalar(3), 2).has_value());
  CHECK_FALSE(sqrt_exact(Scalar(2)).has_value());  // no ambient extension
  CHECK_FALSE(sqrt_exact(Scalar(-1, 4)).has_value());
  CHECK(sqrt_exact(Scalar(0))->is_zero());
  // square of a generic element of Q(sqrt 2) has an exact root
  Scalar v = Scalar(3, 7) + Scalar::sqrt_of(2) * Scalar(5, 2);
  auto r = sqrt_exact(v * v, 2);
  REQUIRE(r.has_value());
  CHECK(*r * *r == v * v);
  // canonical branch has a positive rational part
  CHECK(!(r->rat() < 0));
}

TEST_CASE("sqrt_extend builds the minimal extension") {
  Scalar x = sqrt_extend(Scalar(1, 8));
  CHECK(x.radicand() == 2);
  CHECK(x == Scalar(BigRat(0), BigRat(1, 4), 2));  // (1/4) sqrt 2
  CHECK(x * x == Scalar(1, 8));
  CHECK_THROWS_AS(sqrt_extend(Scalar(-2)), Error);
  CHECK(sqrt_extend(Scalar(16, 9)) == Scalar(4, 3));
}

TEST_CASE("square-free kernel") {
  auto [d, s] = square_free_kernel(BigRat(1, 8));
  CHECK(d == 2);
  CHECK(Scalar(BigRat(d)) * Scalar(s) * Scalar(s) == Scalar(1, 8));
  auto [d2, s2] = square_free_kernel(BigRat(360));  // 360 = 2^3 3^2 5
  CHECK(d2 == 10);
  CHECK(s2 == BigRat(6));
}

TEST_CASE("string grammar round trip") {
  CHECK(Scalar(5, 6).str() == "5/6");
  CHECK(Scalar(-7).str() == "-7");
  Scalar v = Scalar(1, 2) - Scalar::sqrt_of(3) * Scalar(3, 4);
  CHECK(v.str() == "1/2-3/4*sqrt(3)");
  CHECK(Scalar::parse(v.str()) == v);
  CHECK(Scalar::parse("5/6") == Scalar(5, 6));
  CHECK(Scalar::parse("-2/3+1/5*sqrt(7)") ==
        Scalar(BigRat(-2, 3), BigRat(1, 5), 7));
  CHECK(Scalar::parse("3/4*sqrt(2)") == Scalar(BigRat(0), BigRat(3, 4), 2));
  CHECK(Scalar::parse(" 7 / 3 ") == Scalar(7, 3));
  CHECK_THROWS_AS(Scalar::parse("wat"), Error);
  // equal values print identically after normalization
  CHECK((Scalar(2, 4)).str() == (Scalar(1, 2)).str());
}

TEST_CASE("sampler determinism and exclusions") {
  ScalarSampler a(1), b(1);
  Scalar x = a.sample(8), y = b.sample(8);
  CHECK(x == y);
  CHECK(!x.is_zero());
  CHECK(boost::multiprecision::abs(boost::multiprecision::numerator(x.rat())) <
        256);
  CHECK(boost::multiprecision::denominator(x.rat()) < 256);
  ScalarSampler c(3);
  std::vector<Scalar> excl{Scalar(1), Scalar(-1)};
  for (int i = 0; i < 50; ++i) {
    Scalar v = c.sample(2, excl);
    CHECK(v != Scalar(1));
    CHECK(v != Scalar(-1));
  }
  // exclusion list covering the whole space is an error: bit bound 2 allows
  // numerators and denominators up to 3
  std::vector<Scalar> all;
  for (int n = -3; n <= 3; ++n)
    for (int d = 1; d <= 3; ++d)
      if (n != 0) all.push_back(Scalar(n, d));
  ScalarSampler dsmp(5);
  CHECK_THROWS_AS(dsmp.sample(2, all), Error);
}

TEST_CASE("integer powers") {
  CHECK(qpow(Scalar(2), 4) == Scalar(16));
  CHECK(qpow(Scalar(2), -3) == Scalar(1, 8));
  CHECK(qpow(Scalar(7, 3), 0).is_one());
}

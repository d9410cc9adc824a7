#include <doctest.h>

#include "rebax/baxter.hpp"

using namespace rebax;

namespace {
const Scalar q2(2);

bool contains(const std::vector<Scalar>& v, const Scalar& s) {
  for (const auto& e : v)
    if (e == s) return true;
  return false;
}

Scalar sample_off(ScalarSampler& smp, const std::vector<Scalar>& excl,
                  bool need_inverse = false) {
  while (true) {
    Scalar x = smp.sample(8, excl);
    if (need_inverse && contains(excl, x.inverse())) continue;
    return x;
  }
}

}  // namespace

TEST_CASE("baxterized element special points") {
  for (auto name : {"gl2", "sp2"}) {
    auto rep = make_representation(name, q2);
    // x = 1: the Hecke relation (or lambda(1-K) + lambda K) gives lambda I
    CHECK(baxt(rep, Scalar(1)) ==
          Matrix::identity(rep.N * rep.N) * rep.lambda);
    CHECK(baxt(rep, Scalar(0)) == rep.R);
  }
}

TEST_CASE("Hecke closed forms agree and are a-independent") {
  auto rep = build_gl_hecke(2, q2);
  const Scalar x(5, 7);
  Matrix base = baxt(rep, x);
  CHECK(base == baxt_product_form(rep, x, q2));
  CHECK(base == baxt_product_form(rep, x, -(q2.inverse())));
  CHECK(check_baxt_forms(rep, x).ok);
}

TEST_CASE("BMW closed forms agree but depend on a") {
  const Scalar x(2, 9);
  auto spq = build_bmw(BmwFamily::Sp, 2, q2, AChoice::PlusQ);
  Matrix f2 = baxt(spq, x);
  CHECK(f2 == baxt_bmw_linear_form(spq, x));
  CHECK(f2 == baxt_product_form(spq, x, spq.a));
  auto spi = build_bmw(BmwFamily::Sp, 2, q2, AChoice::MinusInvQ);
  CHECK(baxt(spi, x) != f2);  // two different baxterized solutions
}

TEST_CASE("unitarity of the normalized element") {
  for (auto name : {"gl2", "gl3", "sp2", "so3"}) {
    auto rep = make_representation(name, q2);
    const auto excl = baxt_exclusions(rep);
    CHECK(check_unitarity(rep, Scalar(3, 5)).ok);
    ScalarSampler smp(31);
    for (int i = 0; i < 5; ++i) {
      Scalar x = sample_off(smp, excl, true);
      Matrix prod = baxt_norm(rep, x) * baxt_norm(rep, x.inverse());
      CHECK(prod == Matrix::identity(rep.N * rep.N));
    }
  }
  auto gl2 = build_gl_hecke(2, q2);
  // pole of the normalization at x = a^{-2}
  CHECK_THROWS_AS(baxt_norm(gl2, qpow(gl2.a, -2)), PoleError);
}

TEST_CASE("normalized element at x = a^2 is the level-two antisymmetrizer") {
  auto gl2 = build_gl_hecke(2, q2);
  Matrix s = baxt_norm_with_a(gl2, q2 * q2, q2);
  CHECK(s == antisymmetrizer(gl2, 2));
  CHECK(rank(s) == 1);
}

TEST_CASE("Yang-Baxter at fixed points") {
  auto gl2 = build_gl_hecke(2, q2);
  CHECK(check_ybe(gl2, Scalar(2, 3), Scalar(5, 7)).ok);
  CHECK(check_ybe(gl2, Scalar(1), Scalar(1)).ok);
  auto spi = build_bmw(BmwFamily::Sp, 2, q2, AChoice::MinusInvQ);
  CHECK(check_ybe(spi, Scalar(3, 4), Scalar(5, 9)).ok);
}

TEST_CASE("Yang-Baxter at random points, all representations") {
  for (auto name : {"gl2", "gl3", "sp2", "so3"}) {
    for (AChoice ac : {AChoice::PlusQ, AChoice::MinusInvQ}) {
      auto rep = make_representation(name, q2, ac);
      if (!rep.is_bmw() && ac == AChoice::MinusInvQ)
        continue;  // Hecke baxterization does not depend on a
      const auto excl = baxt_exclusions(rep);
      ScalarSampler smp(37);
      for (int i = 0; i < 5; ++i) {
        Scalar x = sample_off(smp, excl);
        Scalar y = sample_off(smp, excl);
        if (contains(excl, x * y)) continue;
        CHECK(check_ybe(rep, x, y).ok);
      }
    }
  }
}

TEST_CASE("one-pair baxterized operators commute") {
  auto gl2 = build_gl_hecke(2, q2);
  ScalarSampler smp(41);
  for (int i = 0; i < 5; ++i) {
    Scalar x = smp.sample(8), y = smp.sample(8);
    CHECK(commutator_is_zero(baxt(gl2, x), baxt(gl2, y)));
  }
}

TEST_CASE("cross-unitarity, Hecke") {
  auto gl2 = build_gl_hecke(2, q2);
  // Y = I on one site: both sides are (1-x)(1-b/x) Tr(D) I
  const Scalar x(3, 7);
  Matrix y1 = Matrix::identity(std::vector<std::size_t>{2});
  CHECK(check_cross_unitarity(gl2, y1, x).ok);
  const Scalar z = cross_partner(gl2, x);
  CHECK(z == gl2.b / x);
  CHECK(cross_eta(gl2, x) == Scalar(1) - x);

  // direct evaluation cross-check of the Y = I case
  const std::vector<std::size_t> shape{2, 2};
  Matrix lhs = weighted_partial_trace(baxt(gl2, x) * baxt(gl2, z), 2, gl2.Dop);
  Matrix rhs = Matrix::identity(2) *
               ((Scalar(1) - x) * (Scalar(1) - z) * gl2.trD);
  CHECK(lhs == rhs);

  // random 2-site Y
  ScalarSampler smp(43);
  Matrix y2(4, {2, 2});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) y2.at(i, j) = smp.sample(5);
  CHECK(check_cross_unitarity(gl2, y2, Scalar(4, 9)).ok);
}

TEST_CASE("cross-unitarity, BMW") {
  auto sp2 = build_bmw(BmwFamily::Sp, 2, q2, AChoice::PlusQ);
  const Scalar x(5, 8);
  CHECK(cross_partner(sp2, x) ==
        sp2.a * sp2.a / (sp2.nu * sp2.nu * x));
  CHECK(check_cross_unitarity(sp2, sp2.Khat, x).ok);
  Matrix y1 = Matrix::identity(std::vector<std::size_t>{2});
  CHECK(check_cross_unitarity(sp2, y1, Scalar(2, 3)).ok);
  auto so3 = build_bmw(BmwFamily::SO, 3, q2, AChoice::MinusInvQ);
  Matrix y3 = Matrix::identity(std::vector<std::size_t>{3});
  CHECK(check_cross_unitarity(so3, y3, Scalar(3, 4)).ok);
}

TEST_CASE("residual witness is reported") {
  auto gl2 = build_gl_hecke(2, q2);
  Matrix wrong = gl2.R;
  wrong.at(0, 0) += Scalar(1);
  CheckResult r = compare_exact(gl2.R, wrong, "witness");
  CHECK_FALSE(r.ok);
  CHECK(r.row == 0);
  CHECK(r.col == 0);
  CHECK(r.lhs == Scalar(2));
  CHECK(r.rhs == Scalar(3));
}

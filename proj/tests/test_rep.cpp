#include <doctest.h>

#include "rebax/baxter.hpp"

using namespace rebax;

namespace {
const Scalar q2(2);
}

TEST_CASE("gl(2) R-matrix entries at q = 2") {
  auto rep = build_gl_hecke(2, q2);
  Matrix expected = Matrix::from_rows(
      {{Scalar(2), Scalar(0), Scalar(0), Scalar(0)},
       {Scalar(0), Scalar(3, 2), Scalar(1), Scalar(0)},
       {Scalar(0), Scalar(1), Scalar(0), Scalar(0)},
       {Scalar(0), Scalar(0), Scalar(0), Scalar(2)}},
      {2, 2});
  CHECK(rep.R == expected);
  CHECK(rep.lambda == Scalar(3, 2));
}

TEST_CASE("gl R-matrix formula degenerates to the permutation at q = 1") {
  CHECK(gl_rhat_formula(2, Scalar(1)) == flip_permutation(2, 2));
  CHECK(gl_rhat_formula(3, Scalar(1)) == flip_permutation(3, 3));
  // the constructor itself refuses degenerate q
  CHECK_THROWS_AS(build_gl_hecke(2, Scalar(1)), ConfigError);
  CHECK_THROWS_AS(build_gl_hecke(2, Scalar(0)), ConfigError);
  CHECK_THROWS_AS(build_gl_hecke(2, Scalar(-1)), ConfigError);
}

TEST_CASE("Hecke relation holds exactly") {
  for (const Scalar& q : {Scalar(2), Scalar(7, 3), Scalar(4)}) {
    for (std::size_t n : {2u, 3u}) {
      auto rep = build_gl_hecke(n, q);
      Matrix lhs = rep.R * rep.R - rep.R * rep.lambda;
      CHECK(lhs == Matrix::identity(n * n));
      CHECK(rep.Rinv == rep.R - Matrix::identity(n * n) * rep.lambda);
    }
  }
}

TEST_CASE("gl(2) R-matrix characteristic polynomial") {
  // (t - q)^3 (t + 1/q); the multiplicities mirror the antisymmetrizer ranks
  auto rep = build_gl_hecke(2, q2);
  CHECK(char_polynomial(rep.R) ==
        std::vector<Scalar>{Scalar(-4), Scalar(-2), Scalar(9), Scalar(-11, 2),
                            Scalar(1)});
}

TEST_CASE("gl trace constants") {
  auto gl2 = build_gl_hecke(2, q2);
  CHECK(gl2.trD == Scalar(5, 8));  // 1/q + 1/q^3
  CHECK(gl2.Dop == Matrix::diagonal({Scalar(1, 8), Scalar(1, 2)}));
  CHECK(gl2.Dplus == Scalar(1));
  CHECK(gl2.b == Scalar(16));  // q^{2N}
  CHECK(gl2.b == (Scalar(1) - gl2.lambda * gl2.trD).inverse());
  auto gl3 = build_gl_hecke(3, q2);
  CHECK(gl3.b == Scalar(64));
  // quantum trace normalization: Tr_{D,2}(Rhat) = I
  CHECK(weighted_partial_trace(gl3.R, 2, gl3.Dop) == Matrix::identity(3));
}

TEST_CASE("skew inverse defining relations") {
  auto rep = build_gl_hecke(2, q2);
  const std::vector<std::size_t> shape{2, 2, 2};
  Matrix p = flip_permutation(2, 2);
  Matrix rsw = p * rep.R * p;
  rsw.set_factors({2, 2});
  Matrix lhs = partial_trace(
      embed_at(rep.F, {1, 3}, shape) * embed_at(rsw, {2, 3}, shape), 3);
  CHECK(lhs == p);
  Matrix lhs2 =
      partial_trace(embed(rep.R, 1, shape) * embed(rep.F, 2, shape), 2);
  CHECK(lhs2 == p);
  // D_1 = Tr_2(F_12)
  CHECK(partial_trace(rep.F, 2) == rep.Dop);
}

TEST_CASE("BMW construction and parameters") {
  auto sp2 = build_bmw(BmwFamily::Sp, 2, q2, AChoice::PlusQ);
  CHECK(sp2.nu == Scalar(-1, 8));  // -q^{-3}
  auto so3 = build_bmw(BmwFamily::SO, 3, q2, AChoice::PlusQ);
  CHECK(so3.nu == Scalar(1, 4));  // q^{-2}
  CHECK_THROWS_AS(build_bmw(BmwFamily::Sp, 3, q2, AChoice::PlusQ), Error);
  CHECK_THROWS_AS(build_bmw(BmwFamily::SO, 2, q2, AChoice::PlusQ), Error);

  // cubic and kappa relations, re-asserted on the public data
  const Matrix id = Matrix::identity(4);
  CHECK(((sp2.R - id * sp2.q) * (sp2.R + id * sp2.q.inverse()) *
         (sp2.R - id * sp2.nu))
            .is_zero());
  CHECK((sp2.Khat * sp2.R) == sp2.Khat * sp2.nu);
  CHECK((sp2.R * sp2.Khat) == sp2.Khat * sp2.nu);
  const Scalar q0 = (sp2.nu.inverse() + sp2.lambda - sp2.nu) / sp2.lambda;
  CHECK(q0 == Scalar(-17, 4));
  CHECK((sp2.Khat * sp2.Khat) == sp2.Khat * q0);
  CHECK(rank(sp2.Khat) == 1);

  // kappa_n kappa_{n+-1} kappa_n = kappa_n on three factors
  const std::vector<std::size_t> shape{2, 2, 2};
  Matrix k1 = embed(sp2.Khat, 1, shape), k2 = embed(sp2.Khat, 2, shape);
  CHECK((k1 * k2 * k1) == k1);
  CHECK((k2 * k1 * k2) == k2);
}

TEST_CASE("kappa_of") {
  auto gl2 = build_gl_hecke(2, q2);
  CHECK(kappa_of(gl2.R, gl2.lambda).is_zero());  // Hecke: R - R^{-1} = lambda
  auto sp2 = build_bmw(BmwFamily::Sp, 2, q2, AChoice::PlusQ);
  CHECK(kappa_of(sp2.R, sp2.lambda) == sp2.Khat);
  CHECK_THROWS_AS(kappa_of(gl2.R, Scalar(0)), Error);
}

TEST_CASE("BMW trace constants") {
  for (auto name : {"sp2", "so3"}) {
    auto rep = make_representation(name, q2);
    CHECK(rep.Dplus == Scalar(1));
    // Tr_D(Rhat^{-1}) = nu^2 for BMW representations
    CHECK(rep.Dminus == rep.nu * rep.nu);
    CHECK(rep.b == (rep.a * rep.a) / (rep.nu * rep.nu));
    // Tr_D(Khat) = nu I
    Matrix tk = weighted_partial_trace(rep.Khat, 2, rep.Dop);
    CHECK(tk == Matrix::identity(rep.N) * rep.nu);
  }
}

TEST_CASE("kappa sandwich realizes the quantum trace") {
  // Khat_1 (X (x) I) Khat_1 = (1/nu) Tr_D(X) Khat_1, the BMW trace map
  for (auto name : {"sp2", "so3"}) {
    auto rep = make_representation(name, q2);
    ScalarSampler smp(23);
    Matrix x(rep.N);
    for (std::size_t i = 0; i < rep.N; ++i)
      for (std::size_t j = 0; j < rep.N; ++j) x.at(i, j) = smp.sample(5);
    Matrix sandwich =
        rep.Khat * kron(x, Matrix::identity(rep.N)) * rep.Khat;
    Scalar trd = (rep.Dop * x).trace();
    CHECK(sandwich == rep.Khat * (trd / rep.nu));
  }
}

TEST_CASE("antisymmetrizer tower for gl") {
  auto gl2 = build_gl_hecke(2, q2);
  CHECK(antisymmetrizer(gl2, 1) == Matrix::identity(2));
  Matrix a2 = antisymmetrizer(gl2, 2);
  CHECK(rank(a2) == 1);
  CHECK((a2 * a2) == a2);
  CHECK(antisymmetrizer(gl2, 3).is_zero());
  CHECK(height(gl2, 4) == 2);

  auto gl3 = build_gl_hecke(3, q2);
  Matrix b2 = antisymmetrizer(gl3, 2), b3 = antisymmetrizer(gl3, 3);
  CHECK((b2 * b2) == b2);
  CHECK((b3 * b3) == b3);
  CHECK(rank(b3) == 1);
  CHECK(antisymmetrizer(gl3, 4).is_zero());
  CHECK(height(gl3, 4) == 3);
  CHECK_FALSE(height(gl2, 1).has_value());  // bound too small
}

TEST_CASE("sp2 BMW antisymmetrizers vanish at level two") {
  // the traceless antisymmetric square of the 2-dim symplectic space is
  // empty, so the tower dies immediately
  auto sp2 = build_bmw(BmwFamily::Sp, 2, q2, AChoice::PlusQ);
  CHECK(antisymmetrizer(sp2, 2).is_zero());
  // the level-2 recursion point coincides with the kappa pole
  CHECK_THROWS_AS(antisymmetrizer(sp2, 3), PoleError);
  CHECK_FALSE(height(sp2, 3).has_value());
}

TEST_CASE("registry") {
  CHECK(make_representation("gl2", q2).name == "gl2");
  CHECK(make_representation("sp2", q2).is_bmw());
  CHECK(make_representation("so3", q2).N == 3);
  CHECK_THROWS_AS(make_representation("xx7", q2), ConfigError);
  CHECK_THROWS_AS(make_representation("sp3", q2), ConfigError);
  // a-choice is stored
  CHECK(make_representation("sp2", q2, AChoice::MinusInvQ).a == Scalar(-1, 2));
}

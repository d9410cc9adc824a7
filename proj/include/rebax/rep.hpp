#pragma once

#include <optional>
#include <string>
#include <utility>

#include "rebax/matrix.hpp"

namespace rebax {

enum class AlgebraKind { Hecke, BMW };
enum class AChoice { PlusQ, MinusInvQ };
enum class BmwFamily { SO, Sp };

// A concrete R-matrix package: the braided R-matrix Rhat on V (x) V together
// with its inverse, skew inverse F, quantum-trace weight D, BMW projector
// Khat, and the trace constants. Immutable after construction; every
// structural identity is verified exactly by the constructor functions.
struct Representation {
  AlgebraKind kind = AlgebraKind::Hecke;
  std::string name;
  std::size_t N = 0;
  Scalar q, lambda, a;  // lambda = q - 1/q, a in {q, -1/q}
  Scalar nu;            // BMW only
  Matrix R, Rinv;       // N^2 x N^2, factors {N, N}
  Matrix F;             // skew inverse: Tr_3(F_13 R_32) = P_12
  Matrix Dop;           // N x N weight, D_1 = Tr_2(F_12)
  Matrix Khat;          // BMW projector, zero matrix for Hecke
  Scalar trD;           // Tr(D)
  Scalar D0, Dplus, Dminus;  // Tr_D(1), Tr_D(Rhat), Tr_D(Rhat^{-1})
  // Conjugation constant for the second boundary: Hecke (1-lambda*TrD)^{-1},
  // BMW a^2/nu^2.
  Scalar b;

  bool is_bmw() const { return kind == AlgebraKind::BMW; }
};

Scalar a_value(const Scalar& q, AChoice c);

// The raw Drinfeld-Jimbo gl(N) R-matrix formula, valid at any q; at q = 1 it
// degenerates to the flip permutation.
Matrix gl_rhat_formula(std::size_t N, const Scalar& q);

// Standard Drinfeld-Jimbo R-matrix for U_q(gl(N)) in the vector
// representation, basis (i,j) row-major. Requires q not in {0, 1, -1}.
Representation build_gl_hecke(std::size_t N, const Scalar& q,
                              AChoice a_choice = AChoice::PlusQ);

// Orthogonal/symplectic quantum-group R-matrix (BMW type). size is the
// vector-space dimension N: SO needs N >= 3, Sp needs even N >= 2. Odd SO
// absorbs the half-integer q-powers of the metric tail into a diagonal
// gauge so all entries stay rational in q. Every BMW invariant is checked
// at construction.
Representation build_bmw(BmwFamily family, std::size_t size, const Scalar& q,
                         AChoice a_choice = AChoice::PlusQ);

// Registry used by the CLI: "gl2", "gl3", ..., "sp2", "sp4", ..., "so3", ...
Representation make_representation(const std::string& name, const Scalar& q,
                                   AChoice a_choice = AChoice::PlusQ);

// Khat = I - (R - R^{-1})/lambda.
Matrix kappa_of(const Matrix& r, const Scalar& lambda);

// Solves Tr_3(F_13 R_32) = P_12 for F and returns (F, D) with
// D_1 = Tr_2(F_12). Verifies the companion identity Tr_2(R_12 F_23) = P_13.
std::pair<Matrix, Matrix> skew_inverse(const Matrix& r);

// Antisymmetrizer tower A_{1->k} on V^{(x)k}:
// A_{1->1} = I, A_{1->k+1} = A_{1->k} stilde_k(a^{2k}; a) A_{1->k}, a = q.
Matrix antisymmetrizer(const Representation& rep, std::size_t k);

// Least h <= k_max with A_{1->h+1} = 0 and rank(A_{1->h}) = 1.
std::optional<std::size_t> height(const Representation& rep,
                                  std::size_t k_max);

}  // namespace rebax

#pragma once

#include <optional>
#include <vector>

#include "rebax/scalar.hpp"

namespace rebax {

// Dense square matrix over Scalar with tensor-factor metadata. `factors` is
// the ordered list of factor dimensions whose product is `dim`; every
// site-indexed operation validates against it. Row-major storage, basis
// index (i1,...,ik) encoded lexicographically with the first factor major.
class Matrix {
 public:
  Matrix() : dim_(0) {}
  explicit Matrix(std::size_t dim);
  Matrix(std::size_t dim, std::vector<std::size_t> factors);

  static Matrix identity(std::size_t dim);
  static Matrix identity(const std::vector<std::size_t>& factors);
  static Matrix diagonal(const std::vector<Scalar>& d);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows,
                          std::vector<std::size_t> factors = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::size_t>& factors() const { return factors_; }
  void set_factors(std::vector<std::size_t> f);

  Scalar& at(std::size_t r, std::size_t c) { return e_[r * dim_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const {
    return e_[r * dim_ + c];
  }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Scalar& s) const;
  Matrix operator-() const;

  // Entrywise comparison (factor metadata is not part of the value).
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_identity() const;
  // First nonzero entry in row-major order, as a residual witness.
  std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;
  // The scalar s with *this == s*I, if any.
  std::optional<Scalar> as_scalar_multiple_of_identity() const;

  Scalar trace() const;
  Matrix transpose() const;

 private:
  std::size_t dim_;
  std::vector<std::size_t> factors_;
  std::vector<Scalar> e_;
};

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator*(const Scalar& s, const Matrix& m);

// Kronecker product; factors concatenate, A-major index ordering.
Matrix kron(const Matrix& a, const Matrix& b);

// Identity on all factors of `shape` except op acting on the (1-based)
// consecutive factors starting at `site`.
Matrix embed(const Matrix& op, std::size_t site,
             const std::vector<std::size_t>& shape);

// General embedding of op onto the listed (1-based, strictly increasing)
// factors of `shape`; op's k-th factor acts on shape[sites[k]-1].
Matrix embed_at(const Matrix& op, const std::vector<std::size_t>& sites,
                const std::vector<std::size_t>& shape);

// P(v (x) w) = w (x) v on factors [n, m].
Matrix flip_permutation(std::size_t n, std::size_t m);

// Exact inverse by Gauss-Jordan elimination with pivoting. Throws
// SingularError naming the failing pivot stage.
Matrix inverse(const Matrix& a);

// Exact rank. Rational matrices go through fraction-free Bareiss elimination
// on a denominator-cleared integer copy; quadratic-field entries fall back
// to exact field elimination.
std::size_t rank(const Matrix& a);

// Partial trace over `site` of embed(W, site)*E; W acts on that factor
// alone. The output drops the traced factor from the shape.
Matrix weighted_partial_trace(const Matrix& e, std::size_t site,
                              const Matrix& w);
Matrix partial_trace(const Matrix& e, std::size_t site);

// Monic characteristic polynomial, ascending coefficients c[0..n], via the
// Faddeev-LeVerrier recursion (exact divisions by 1..n).
std::vector<Scalar> char_polynomial(const Matrix& a);

// Monic minimal polynomial, ascending coefficients, by exact linear
// dependence search on I, A, A^2, ...
std::vector<Scalar> minimal_polynomial(const Matrix& a);

// p(A) for ascending coefficients p.
Matrix eval_poly(const std::vector<Scalar>& p, const Matrix& a);

// Exact polynomial division; returns (quotient, remainder).
std::pair<std::vector<Scalar>, std::vector<Scalar>> poly_divmod(
    const std::vector<Scalar>& num, const std::vector<Scalar>& den);

// Rational roots of a polynomial with rational coefficients, with
// multiplicities, found by bounded divisor search on the cleared-denominator
// form (complete for desk-scale coefficients).
std::vector<std::pair<Scalar, std::size_t>> rational_roots(
    const std::vector<Scalar>& p);

bool commutator_is_zero(const Matrix& a, const Matrix& b);

}  // namespace rebax

#pragma once

// Exact rational vectors, Gram forms and integral lattices.
//
// A lattice is stored relative to a basis of r vectors in a d-dimensional
// ambient space carrying a positive definite Gram form; r may be smaller than
// d (the E7 and E6 weight lattices live inside R^8).

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rootgeom/error.hpp"
#include "rootgeom/rational.hpp"

namespace rootgeom {

using IntVec = std::vector<Integer>;

class QVec {
 public:
  QVec() = default;
  explicit QVec(std::size_t dim) : coords_(dim) {}
  explicit QVec(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  QVec(std::initializer_list<Rational> coords) : coords_(coords) {}

  static QVec unit(std::size_t dim, std::size_t i);
  static QVec from_integers(const IntVec& c);

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;

  QVec& operator+=(const QVec& other);
  QVec& operator-=(const QVec& other);
  QVec& operator*=(const Rational& s);

  friend QVec operator+(QVec a, const QVec& b) { return a += b; }
  friend QVec operator-(QVec a, const QVec& b) { return a -= b; }
  friend QVec operator*(const Rational& s, QVec v) { return v *= s; }
  friend QVec operator-(QVec v) { return v *= Rational(-1); }

  friend bool operator==(const QVec& a, const QVec& b) {
    return a.coords_ == b.coords_;
  }
  // Lexicographic on coordinates; shorter vectors first.
  friend bool operator<(const QVec& a, const QVec& b);

 private:
  std::vector<Rational> coords_;
};

// "(1/2,-1/2,0)"
std::string to_string(const QVec& v);

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  // Rows of the matrix are the given vectors.
  static RationalMatrix from_rows(std::span<const QVec> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  Rational& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  QVec row(std::size_t i) const;

  RationalMatrix transposed() const;
  friend RationalMatrix operator*(const RationalMatrix& a,
                                  const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational determinant(RationalMatrix m);
// Throws Error when singular.
RationalMatrix inverse(const RationalMatrix& m);
std::size_t rank(std::span<const QVec> vectors);

// Q(x) = sum_i diagonal[i] * (x_i + sum_{j>i} mu(i,j) x_j)^2.
struct LdlDecomposition {
  std::vector<Rational> diagonal;
  RationalMatrix mu;
};

// Throws Error unless m is symmetric positive definite.
LdlDecomposition ldl(const RationalMatrix& m);

class GramForm {
 public:
  // Throws Error unless the matrix is square, symmetric, positive definite.
  explicit GramForm(RationalMatrix matrix);
  static GramForm identity(std::size_t dim);

  std::size_t dim() const { return matrix_.rows(); }
  const RationalMatrix& matrix() const { return matrix_; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return matrix_(i, j);
  }

  friend bool operator==(const GramForm& a, const GramForm& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  RationalMatrix matrix_;
};

Rational inner(const QVec& v, const QVec& w, const GramForm& g);
inline Rational norm(const QVec& v, const GramForm& g) { return inner(v, v, g); }

// Gram matrix of a list of vectors under g.
RationalMatrix gram_of(std::span<const QVec> vectors, const GramForm& g);

// Positive scalar c with a = c*b, if one exists.
std::optional<Rational> proportionality(const RationalMatrix& a,
                                        const RationalMatrix& b);

class IntegralLattice {
 public:
  // Throws Error on dependent basis vectors or a dimension mismatch.
  IntegralLattice(std::vector<QVec> basis, GramForm gram);

  std::size_t rank() const { return basis_.size(); }
  std::size_t ambient_dim() const { return gram_.dim(); }
  const std::vector<QVec>& basis() const { return basis_; }
  const GramForm& gram() const { return gram_; }
  const RationalMatrix& basis_gram() const { return basis_gram_; }
  const RationalMatrix& basis_gram_inverse() const { return basis_gram_inv_; }
  const LdlDecomposition& basis_ldl() const { return ldl_; }

  // Determinant of the basis Gram matrix (squared covolume).
  Rational covolume() const { return determinant(basis_gram_); }

  // Rational coefficients of v in the basis, if v lies in its span.
  std::optional<std::vector<Rational>> span_coordinates(const QVec& v) const;
  // Integer coefficients of v, if v is a lattice vector.
  std::optional<IntVec> coordinates(const QVec& v) const;
  QVec combine(const IntVec& coefficients) const;

 private:
  std::vector<QVec> basis_;
  GramForm gram_;
  RationalMatrix basis_gram_;
  RationalMatrix basis_gram_inv_;
  LdlDecomposition ldl_;
};

// Basis for the Z-span of the generators: clear denominators, reduce to
// Hermite normal form, rescale. Throws Error on an empty or all-zero set.
IntegralLattice hnf_basis(std::span<const QVec> generators,
                          const GramForm& gram);

// Row-style Hermite normal form of an integer matrix; zero rows dropped.
std::vector<IntVec> hermite_normal_form(std::vector<IntVec> rows);

bool contains(const IntegralLattice& lattice, const QVec& v);

// Per-coefficient bound floor(sqrt(target * (G^-1)_ii)) on the basis Gram G.
IntVec coefficient_bounds(const IntegralLattice& lattice,
                          const Rational& target);

// All integer coefficient vectors c with c^T G c == target, sorted
// lexicographically. Throws Error for target <= 0.
std::vector<IntVec> shell_coefficients(const IntegralLattice& lattice,
                                       const Rational& target);

// Lattice vectors of norm `target`, ordered by their coefficient vectors.
std::vector<QVec> vectors_of_norm(const IntegralLattice& lattice,
                                  const Rational& target);

}  // namespace rootgeom

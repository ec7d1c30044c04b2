#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qvoa/scalar.hpp"

namespace qvoa {

using ScalarVector = std::vector<Scalar>;

// Dense row-major matrix over Q[r].
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  ScalarMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static ScalarMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Scalar>& entries() const { return entries_; }

  Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  ScalarVector row(std::size_t i) const;
  ScalarMatrix specialize(const Rational& r_value) const;
  ScalarVector operator*(const ScalarVector& v) const;
  bool is_symmetric() const;

  friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

// Divides v by the gcd of its entries and makes the first nonzero entry monic.
// Leaves the Q(r)-line spanned by v unchanged.
void make_primitive(ScalarVector& v);

// Incrementally maintained row-echelon basis over the fraction field Q(r).
// Elimination is fraction-free; every stored row is primitive.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t cols) : cols_(cols) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  // Reduces v against the stored rows; the result is zero iff v is in the span.
  ScalarVector reduce(ScalarVector v) const;

  // Inserts v if it is independent of the stored rows. Returns whether the rank grew.
  bool insert(ScalarVector v);

  // Rows in echelon form, sorted by pivot column.
  const std::vector<ScalarVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t cols_;
  std::vector<ScalarVector> rows_;
  std::vector<std::size_t> pivots_;
};

struct Nullspace {
  std::size_t rank = 0;
  std::vector<ScalarVector> basis;
};

// Rank and kernel basis of M. Without r_value the computation runs over Q(r) (generic r);
// with r_value the entries are specialized first and the result is over Q. Kernel vectors
// have polynomial entries and satisfy M * v = 0 exactly.
Nullspace nullspace(const ScalarMatrix& m, std::optional<Rational> r_value = std::nullopt);

std::size_t rank(const ScalarMatrix& m, std::optional<Rational> r_value = std::nullopt);

// Bareiss fraction-free determinant in Q[r]. Throws std::invalid_argument for non-square input.
Scalar determinant(const ScalarMatrix& m);

}  // namespace qvoa

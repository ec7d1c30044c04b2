#pragma once

#include <vector>

#include "qvoa/check.hpp"
#include "qvoa/voa.hpp"

namespace qvoa {

// Exact symmetric d x d matrix, stored as its upper triangle.
class SymMatrix {
 public:
  explicit SymMatrix(int d);

  // E^{ij}: ones at (i,j) and (j,i); for i == j the diagonal entry is 2. 1-based indices.
  static SymMatrix unit(int d, int i, int j);
  // Inverse of coordinates(): sum_k coords[k] E^{index_pairs(d)[k]}.
  static SymMatrix from_coordinates(int d, const std::vector<Scalar>& coords);

  int dimension() const { return d_; }
  const Scalar& at(int i, int j) const;
  void set(int i, int j, Scalar value);

  // Coordinates in the basis {E^{ij} | i <= j}, ordered like index_pairs(d).
  std::vector<Scalar> coordinates() const;

  SymMatrix& operator+=(const SymMatrix& other);
  friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
  friend SymMatrix operator*(const Scalar& c, SymMatrix a);
  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t slot(int i, int j) const;

  int d_;
  std::vector<Scalar> upper_;
};

// A * B = (AB + BA) / 2. Throws std::invalid_argument on a dimension mismatch.
SymMatrix jordan_product(const SymMatrix& a, const SymMatrix& b);

// Rational matrix with Q^T Q = I, checked on construction.
class OrthogonalMatrix {
 public:
  // Row-major entries; throws std::invalid_argument if the shape is wrong or Q^T Q != I.
  OrthogonalMatrix(int d, std::vector<Rational> entries);

  static OrthogonalMatrix identity(int d);
  static OrthogonalMatrix negative_identity(int d);
  // Sends v^i to v^{perm[i-1]}; perm is a permutation of 1..d.
  static OrthogonalMatrix permutation(const std::vector<int>& perm);
  // [[3/5, 4/5], [-4/5, 3/5]] acting on the first two directions, identity elsewhere.
  static OrthogonalMatrix rotation_345(int d);

  int dimension() const { return d_; }
  // 1-based entry Q_{ki}.
  const Rational& at(int k, int i) const { return entries_[static_cast<std::size_t>((k - 1) * d_ + (i - 1))]; }
  bool is_negative_identity() const;

  std::string to_string() const;

 private:
  int d_;
  std::vector<Rational> entries_;
};

// All permutations (d <= 3), -I, and the 3-4-5 rotation for d >= 2.
std::vector<OrthogonalMatrix> builtin_orthogonal_matrices(int d);

// Q S Q^T: the action induced by v^i -> sum_k Q_{ki} v^k on quadratic forms.
SymMatrix orthogonal_action(const OrthogonalMatrix& q, const SymMatrix& s);
// Weight-preserving action on M_r induced by the same substitution on every factor.
FockVector orthogonal_action(const OrthogonalMatrix& q, const FockSpace& space, const FockVector& v);
// Transformed mode: g L^{ij}(n) g^-1 = sum_{k<=l} c_{kl} L^{kl}(n).
std::vector<std::pair<ModeSymbol, Scalar>> orthogonal_action(const OrthogonalMatrix& q, const ModeSymbol& s);

// g(E^{ij} * E^{st}) = (omega^{ij})_1 omega^{st} for all unordered pairs, and g is a bijection.
VerificationReport check_isomorphism(const FockSpace& space, const GriessTable& table);

// Conjugation compatibility with every mode on weights <= W, invariance of the Griess table
// and of every Gram matrix up to W; for -I also that every basis vector is fixed.
VerificationReport verify_automorphism(const OrthogonalMatrix& q, const FockSpace& space, int max_weight,
                                       int jobs = 1);

}  // namespace qvoa

#pragma once

#include <compare>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qvoa/lie.hpp"

namespace qvoa {

// Product of creation quadratics applied to the vacuum. Factors are kept sorted; the
// empty product is the vacuum 1.
class FockMonomial {
 public:
  FockMonomial() = default;
  // Throws std::invalid_argument if a factor is not a canonical creation quadratic.
  explicit FockMonomial(std::vector<NormalQuadratic> factors);

  static FockMonomial vacuum() { return {}; }

  const std::vector<NormalQuadratic>& factors() const { return factors_; }
  bool is_vacuum() const { return factors_.empty(); }
  int degree() const { return degree_; }

  FockMonomial times(const NormalQuadratic& q) const;
  // The monomial with the first factor removed (the leftmost factor in the product).
  FockMonomial without_first() const;

  friend auto operator<=>(const FockMonomial& a, const FockMonomial& b) { return a.factors_ <=> b.factors_; }
  friend bool operator==(const FockMonomial& a, const FockMonomial& b) { return a.factors_ == b.factors_; }

  std::string to_string() const;

 private:
  std::vector<NormalQuadratic> factors_;
  int degree_ = 0;
};

class FockVector {
 public:
  using TermMap = std::map<FockMonomial, Scalar>;

  FockVector() = default;
  static FockVector vacuum() { return monomial(FockMonomial::vacuum()); }
  static FockVector monomial(const FockMonomial& m, Scalar coeff = Scalar(1));

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const FockMonomial& m) const;
  // Common degree of all terms; nullopt if the vector is zero or mixes weights.
  std::optional<int> weight() const;

  void add(const FockMonomial& m, const Scalar& coeff);

  FockVector& operator+=(const FockVector& other);
  FockVector& operator-=(const FockVector& other);
  FockVector& operator*=(const Scalar& c);
  // Adds c * other.
  void add_scaled(const FockVector& other, const Scalar& c);

  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const Scalar& c, FockVector a) { return a *= c; }
  friend bool operator==(const FockVector&, const FockVector&) = default;

  std::string to_string() const;

 private:
  TermMap terms_;
};

std::map<int, FockVector> weight_decompose(const FockVector& v);

// The module M_r = U(L_r^-) 1 for a fixed algebra.
class FockSpace {
 public:
  explicit FockSpace(DeformedLieAlgebra algebra) : algebra_(algebra) {}
  FockSpace(const FockSpace& other) : algebra_(other.algebra_) {}

  const DeformedLieAlgebra& algebra() const { return algebra_; }
  int dimension() const { return algebra_.dimension(); }

  // All creation quadratics of the given degree, in key order.
  std::vector<NormalQuadratic> creation_quadratics(int degree) const;

  // Monomial basis of (M_r)_N in sorted order. Memoized; safe to call concurrently.
  const std::vector<FockMonomial>& basis_of_weight(int weight) const;

  FockVector act(const LieElement& x, const FockVector& v) const;
  FockVector act(const NormalQuadratic& q, const FockMonomial& m) const;

 private:
  DeformedLieAlgebra algebra_;
  mutable std::mutex basis_mutex_;
  mutable std::map<int, std::vector<FockMonomial>> basis_cache_;
};

}  // namespace qvoa

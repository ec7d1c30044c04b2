#pragma once

#include <compare>
#include <map>
#include <string>
#include <tuple>

#include "qvoa/scalar.hpp"

namespace qvoa {

// Basis symbol :v^i(m) v^j(n):_r of the quadratic part. Indices are 1-based.
// Canonical form: i < j (any modes), or i == j with m <= n.
struct NormalQuadratic {
  int i = 1;
  int m = 0;
  int j = 1;
  int n = 0;

  int degree() const { return -m - n; }
  bool is_creation() const { return m < 0 && n < 0; }
  bool is_canonical() const { return i < j || (i == j && m <= n); }

  // Keys sort by (i, j, m, n).
  friend auto operator<=>(const NormalQuadratic& a, const NormalQuadratic& b) {
    return std::tie(a.i, a.j, a.m, a.n) <=> std::tie(b.i, b.j, b.m, b.n);
  }
  friend bool operator==(const NormalQuadratic&, const NormalQuadratic&) = default;
};

std::string to_string(const NormalQuadratic& q);

// Element of L_r = S^2(H[t, t^-1]) + C: a finite combination of normal quadratics plus
// a central scalar. Zero coefficients are never stored.
class LieElement {
 public:
  using QuadraticMap = std::map<NormalQuadratic, Scalar>;

  LieElement() = default;
  static LieElement quadratic(const NormalQuadratic& q, Scalar coeff = Scalar(1));
  static LieElement constant(Scalar value);

  const QuadraticMap& quadratic_part() const { return quadratic_; }
  const Scalar& central() const { return central_; }
  bool is_zero() const { return quadratic_.empty() && central_.is_zero(); }
  Scalar coefficient(const NormalQuadratic& q) const;

  // Adds coeff * q; q must already be canonical.
  void add(const NormalQuadratic& q, const Scalar& coeff);
  void add_central(const Scalar& value) { central_ += value; }

  LieElement& operator+=(const LieElement& other);
  LieElement& operator-=(const LieElement& other);
  LieElement& operator*=(const Scalar& c);

  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Scalar& c, LieElement a) { return a *= c; }
  friend bool operator==(const LieElement&, const LieElement&) = default;

  std::string to_string() const;

 private:
  QuadraticMap quadratic_;
  Scalar central_;
};

// Test-harness hook: lets the verification suites prove they catch a broken bracket.
enum class BracketFault { kNone, kDoubledCentralTerm };

// L_r over an orthonormal basis v^1..v^d of H. The bracket is the undeformed commutator
// in U(H^)/(c - 1) with its central component multiplied by r.
class DeformedLieAlgebra {
 public:
  explicit DeformedLieAlgebra(int d, BracketFault fault = BracketFault::kNone);

  int dimension() const { return d_; }
  BracketFault fault() const { return fault_; }

  // Basis expansion of the ordered product v^i(m) v^j(n). Throws std::out_of_range for
  // indices outside 1..d.
  LieElement normalize_quadratic(int i, int m, int j, int n) const;

  LieElement bracket(const NormalQuadratic& a, const NormalQuadratic& b) const;
  LieElement bracket(const LieElement& a, const LieElement& b) const;

  void check_index(int i) const;
  void check(const NormalQuadratic& q) const;

 private:
  int d_;
  BracketFault fault_;
};

struct SignSplit {
  LieElement creation;
  LieElement annihilation_or_mixed;
};

// Splits x along L_r = L_r^- + L_r^+; the central part belongs to L_r^+.
SignSplit split_sign(const LieElement& x);

}  // namespace qvoa

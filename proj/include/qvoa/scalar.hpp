#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace qvoa {

// Arbitrary-precision rational, always kept canonical (reduced, positive denominator).
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Parses "p", "-p" or "p/q" exactly. Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

// Element of Q[r]: a polynomial in the formal deformation parameter r with rational
// coefficients. coeffs()[k] is the coefficient of r^k; there are never trailing zeros,
// so the zero polynomial has an empty coefficient list.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Rational& c);  // NOLINT: Q embeds in Q[r]
  Scalar(long c);             // NOLINT
  Scalar(int c) : Scalar(static_cast<long>(c)) {}  // NOLINT

  static Scalar r();
  static Scalar monomial(const Rational& c, int power);
  static Scalar from_coeffs(std::vector<Rational> coeffs);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Rational coeff(int k) const;
  const Rational& leading() const { return coeffs_.back(); }

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator*=(const Rational& c);

  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.coeffs_ == b.coeffs_; }

  // Evaluates the polynomial at r = x (a ring homomorphism Q[r] -> Q).
  Rational specialize(const Rational& x) const;

  // Exact rendering, highest power first: "0", "-22/5", "1/2*r^2 + 3", "2*r".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

struct PolyDivision {
  Scalar quotient;
  Scalar remainder;
};

// Euclidean division in Q[r]. Throws std::domain_error when b is zero.
PolyDivision divide(const Scalar& a, const Scalar& b);

// a / b, asserting that the division is exact. Throws std::domain_error otherwise.
Scalar exact_quotient(const Scalar& a, const Scalar& b);

// Monic greatest common divisor; gcd(0, 0) = 0.
Scalar gcd(const Scalar& a, const Scalar& b);

}  // namespace qvoa

#include "qvoa/scalar.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qvoa {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  auto is_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  auto strip_plus = [](std::string_view s) { return std::string(s.front() == '+' ? s.substr(1) : s); };
  mpz_class n(strip_plus(num), 10);
  mpz_class d(strip_plus(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Scalar::Scalar(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

Scalar::Scalar(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

Scalar Scalar::r() { return monomial(Rational(1), 1); }

Scalar Scalar::monomial(const Rational& c, int power) {
  Scalar s;
  if (c == 0) return s;
  s.coeffs_.assign(static_cast<std::size_t>(power) + 1, Rational(0));
  s.coeffs_.back() = c;
  return s;
}

Scalar Scalar::from_coeffs(std::vector<Rational> coeffs) {
  Scalar s;
  s.coeffs_ = std::move(coeffs);
  s.trim();
  return s;
}

Rational Scalar::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

void Scalar::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Scalar& Scalar::operator+=(const Scalar& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) { return *this = *this * other; }

Scalar& Scalar::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  for (auto& x : s.coeffs_) x = -x;
  return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  if (a.is_zero() || b.is_zero()) return out;
  if (b.coeffs_.size() == 1) {
    out = a;
    return out *= b.coeffs_[0];
  }
  if (a.coeffs_.size() == 1) {
    out = b;
    return out *= a.coeffs_[0];
  }
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  out.trim();
  return out;
}

Rational Scalar::specialize(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += qvoa::to_string(mag);
      continue;
    }
    if (mag != 1) out += qvoa::to_string(mag) + "*";
    out += "r";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

PolyDivision divide(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {Scalar(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(da - db) + 1, Rational(0));
  const Rational& lead = b.leading();
  for (int k = da; k >= db; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] / lead;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - db)] = c;
    for (int t = 0; t <= db; ++t) rem[static_cast<std::size_t>(k - db + t)] -= c * b.coeffs()[static_cast<std::size_t>(t)];
  }
  return {Scalar::from_coeffs(std::move(quot)), Scalar::from_coeffs(std::move(rem))};
}

Scalar exact_quotient(const Scalar& a, const Scalar& b) {
  if (b.is_constant() && !b.is_zero()) {
    Scalar q = a;
    q *= Rational(1) / b.leading();
    return q;
  }
  auto [q, rem] = divide(a, b);
  if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

Scalar gcd(const Scalar& a, const Scalar& b) {
  Scalar x = a;
  Scalar y = b;
  while (!y.is_zero()) {
    if (y.is_constant()) return Scalar(1);
    Scalar rem = divide(x, y).remainder;
    x = std::move(y);
    y = std::move(rem);
  }
  if (x.is_zero()) return x;
  x *= Rational(1) / x.leading();
  return x;
}

}  // namespace qvoa

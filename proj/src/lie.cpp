#include "qvoa/lie.hpp"

#include <stdexcept>

namespace qvoa {

std::string to_string(const NormalQuadratic& q) {
  return ":v" + std::to_string(q.i) + "(" + std::to_string(q.m) + ")v" + std::to_string(q.j) + "(" +
         std::to_string(q.n) + "):";
}

LieElement LieElement::quadratic(const NormalQuadratic& q, Scalar coeff) {
  LieElement x;
  x.add(q, coeff);
  return x;
}

LieElement LieElement::constant(Scalar value) {
  LieElement x;
  x.central_ = std::move(value);
  return x;
}

Scalar LieElement::coefficient(const NormalQuadratic& q) const {
  auto it = quadratic_.find(q);
  return it == quadratic_.end() ? Scalar() : it->second;
}

void LieElement::add(const NormalQuadratic& q, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = quadratic_.try_emplace(q, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) quadratic_.erase(it);
}

LieElement& LieElement::operator+=(const LieElement& other) {
  for (const auto& [q, c] : other.quadratic_) add(q, c);
  central_ += other.central_;
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& other) {
  for (const auto& [q, c] : other.quadratic_) add(q, -c);
  central_ -= other.central_;
  return *this;
}

LieElement& LieElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    quadratic_.clear();
    central_ = Scalar();
    return *this;
  }
  for (auto& [q, x] : quadratic_) x = x * c;
  central_ = central_ * c;
  return *this;
}

std::string LieElement::to_string() const {
  std::string out;
  for (const auto& [q, c] : quadratic_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")" + qvoa::to_string(q);
  }
  if (!central_.is_zero() || out.empty()) {
    if (!out.empty()) out += " + ";
    out += "(" + central_.to_string() + ")";
  }
  return out;
}

DeformedLieAlgebra::DeformedLieAlgebra(int d, BracketFault fault) : d_(d), fault_(fault) {
  if (d < 1) throw std::invalid_argument("dimension d must be at least 1");
}

void DeformedLieAlgebra::check_index(int i) const {
  if (i < 1 || i > d_) {
    throw std::out_of_range("index " + std::to_string(i) + " outside 1.." + std::to_string(d_));
  }
}

void DeformedLieAlgebra::check(const NormalQuadratic& q) const {
  check_index(q.i);
  check_index(q.j);
}

LieElement DeformedLieAlgebra::normalize_quadratic(int i, int m, int j, int n) const {
  check_index(i);
  check_index(j);
  LieElement out;
  if (i != j) {
    // Distinct orthonormal directions commute.
    out.add(i < j ? NormalQuadratic{i, m, j, n} : NormalQuadratic{j, n, i, m}, Scalar(1));
    return out;
  }
  if (m <= n) {
    out.add({i, m, i, n}, Scalar(1));
    return out;
  }
  // v(m) v(n) = v(n) v(m) + [v(m), v(n)], with [v(m), v(n)] = m delta_{m+n,0} c and c -> r.
  out.add({i, n, i, m}, Scalar(1));
  if (m + n == 0) out.add_central(Scalar::monomial(Rational(m), 1));
  return out;
}

namespace {

// [v^a(p), v^b(q)] at c = 1.
long contraction(int a, int p, int b, int q) { return (a == b && p + q == 0) ? p : 0; }

}  // namespace

LieElement DeformedLieAlgebra::bracket(const NormalQuadratic& x, const NormalQuadratic& y) const {
  check(x);
  check(y);
  // [AB, CD] = [B,C] AD + [B,D] AC + [A,C] DB + [A,D] CB, each product re-normalized.
  const int ai = x.i, am = x.m, bi = x.j, bm = x.n;
  const int ci = y.i, cm = y.m, di = y.j, dm = y.n;
  LieElement out;
  auto accumulate = [&](long coeff, int i, int m, int j, int n) {
    if (coeff == 0) return;
    LieElement term = normalize_quadratic(i, m, j, n);
    term *= Scalar(coeff);
    out += term;
  };
  accumulate(contraction(bi, bm, ci, cm), ai, am, di, dm);
  accumulate(contraction(bi, bm, di, dm), ai, am, ci, cm);
  accumulate(contraction(ai, am, ci, cm), di, dm, bi, bm);
  accumulate(contraction(ai, am, di, dm), ci, cm, bi, bm);
  if (fault_ == BracketFault::kDoubledCentralTerm && !out.central().is_zero()) out.add_central(out.central());
  return out;
}

LieElement DeformedLieAlgebra::bracket(const LieElement& a, const LieElement& b) const {
  LieElement out;
  for (const auto& [qa, ca] : a.quadratic_part()) {
    for (const auto& [qb, cb] : b.quadratic_part()) {
      LieElement term = bracket(qa, qb);
      if (term.is_zero()) continue;
      term *= ca * cb;
      out += term;
    }
  }
  return out;
}

SignSplit split_sign(const LieElement& x) {
  SignSplit out;
  for (const auto& [q, c] : x.quadratic_part()) {
    (q.is_creation() ? out.creation : out.annihilation_or_mixed).add(q, c);
  }
  out.annihilation_or_mixed.add_central(x.central());
  return out;
}

}  // namespace qvoa

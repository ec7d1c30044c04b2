#include "qvoa/fock.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qvoa {

FockMonomial::FockMonomial(std::vector<NormalQuadratic> factors) : factors_(std::move(factors)) {
  for (const auto& q : factors_) {
    if (!q.is_creation() || !q.is_canonical()) {
      throw std::invalid_argument("Fock monomial factor is not a creation quadratic: " + qvoa::to_string(q));
    }
    degree_ += q.degree();
  }
  std::sort(factors_.begin(), factors_.end());
}

FockMonomial FockMonomial::times(const NormalQuadratic& q) const {
  FockMonomial out = *this;
  out.factors_.insert(std::upper_bound(out.factors_.begin(), out.factors_.end(), q), q);
  out.degree_ += q.degree();
  return out;
}

FockMonomial FockMonomial::without_first() const {
  FockMonomial out;
  out.factors_.assign(factors_.begin() + 1, factors_.end());
  out.degree_ = degree_ - factors_.front().degree();
  return out;
}

std::string FockMonomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& q : factors_) out += qvoa::to_string(q);
  return out + "1";
}

FockVector FockVector::monomial(const FockMonomial& m, Scalar coeff) {
  FockVector v;
  v.add(m, coeff);
  return v;
}

Scalar FockVector::coefficient(const FockMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

std::optional<int> FockVector::weight() const {
  if (terms_.empty()) return std::nullopt;
  const int w = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != w) return std::nullopt;
  }
  return w;
}

void FockVector::add(const FockMonomial& m, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

FockVector& FockVector::operator+=(const FockVector& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

FockVector& FockVector::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x = x * c;
  return *this;
}

void FockVector::add_scaled(const FockVector& other, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [m, x] : other.terms_) add(m, x * c);
}

std::string FockVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")" + m.to_string();
  }
  return out;
}

std::map<int, FockVector> weight_decompose(const FockVector& v) {
  std::map<int, FockVector> out;
  for (const auto& [m, c] : v.terms()) out[m.degree()].add(m, c);
  return out;
}

std::vector<NormalQuadratic> FockSpace::creation_quadratics(int degree) const {
  std::vector<NormalQuadratic> out;
  const int d = dimension();
  for (int i = 1; i <= d; ++i) {
    for (int j = i; j <= d; ++j) {
      for (int m = -(degree - 1); m <= -1; ++m) {
        const int n = -degree - m;
        if (n >= 0) continue;
        if (i == j && m > n) continue;
        out.push_back({i, m, j, n});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<FockMonomial>& FockSpace::basis_of_weight(int weight) const {
  std::lock_guard lock(basis_mutex_);
  if (auto it = basis_cache_.find(weight); it != basis_cache_.end()) return it->second;

  std::vector<NormalQuadratic> pool;
  for (int k = 2; k <= weight; ++k) {
    auto qs = creation_quadratics(k);
    pool.insert(pool.end(), qs.begin(), qs.end());
  }
  std::sort(pool.begin(), pool.end());

  std::vector<FockMonomial> out;
  if (weight >= 0) {
    std::vector<NormalQuadratic> chosen;
    // Multisets of pool elements with nondecreasing pool index.
    auto recurse = [&](auto&& self, std::size_t start, int remaining) -> void {
      if (remaining == 0) {
        out.emplace_back(chosen);
        return;
      }
      for (std::size_t k = start; k < pool.size(); ++k) {
        if (pool[k].degree() > remaining) continue;
        chosen.push_back(pool[k]);
        self(self, k, remaining - pool[k].degree());
        chosen.pop_back();
      }
    };
    recurse(recurse, 0, weight);
    std::sort(out.begin(), out.end());
  }
  return basis_cache_.emplace(weight, std::move(out)).first->second;
}

FockVector FockSpace::act(const NormalQuadratic& q, const FockMonomial& m) const {
  if (q.is_creation()) return FockVector::monomial(m.times(q));
  if (m.is_vacuum()) return {};
  // g (u w) = u (g w) + [g, u] w, with u the first factor.
  const NormalQuadratic& u = m.factors().front();
  const FockMonomial rest = m.without_first();
  FockVector out;
  const FockVector inner = act(q, rest);
  for (const auto& [mono, c] : inner.terms()) out.add(mono.times(u), c);
  const LieElement commutator = algebra_.bracket(q, u);
  if (!commutator.is_zero()) out += act(commutator, FockVector::monomial(rest));
  return out;
}

FockVector FockSpace::act(const LieElement& x, const FockVector& v) const {
  FockVector out;
  for (const auto& [q, cq] : x.quadratic_part()) {
    for (const auto& [m, cm] : v.terms()) out.add_scaled(act(q, m), cq * cm);
  }
  if (!x.central().is_zero()) out.add_scaled(v, x.central());
  return out;
}

}  // namespace qvoa

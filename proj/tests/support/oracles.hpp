#pragma once

// Independent reference computations used only by the tests. None of them go through
// the library's bracket, Fock action or saturation code paths.

#include <algorithm>
#include <map>
#include <ostream>
#include <random>
#include <utility>
#include <vector>

#include "qvoa/fock.hpp"
#include "qvoa/scalar.hpp"
#include "qvoa/sugawara.hpp"

namespace qvoa {

// Readable failure messages in gtest assertions.
inline void PrintTo(const Scalar& s, std::ostream* os) { *os << s.to_string(); }
inline void PrintTo(const FockVector& v, std::ostream* os) { *os << v.to_string(); }
inline void PrintTo(const LieElement& x, std::ostream* os) { *os << x.to_string(); }

}  // namespace qvoa

namespace qvoa::oracle {

// ---------------------------------------------------------------------------------------
// Free bosons at level 1: states are polynomials in the creation modes v^i(m), m < 0,
// with v^i(m), m > 0, acting as m * d/d v^i(-m).
class HeisenbergFock {
 public:
  using Mode = std::pair<int, int>;  // (index, mode)
  using State = std::map<std::vector<Mode>, Rational>;

  static State vacuum() { return {{{}, Rational(1)}}; }

  static State apply(int index, int mode, const State& s) {
    State out;
    for (const auto& [word, c] : s) {
      if (mode < 0) {
        auto next = word;
        next.insert(std::upper_bound(next.begin(), next.end(), Mode{index, mode}), Mode{index, mode});
        add(out, next, c);
      } else if (mode > 0) {
        const long count = std::count(word.begin(), word.end(), Mode{index, -mode});
        if (count == 0) continue;
        auto next = word;
        next.erase(std::find(next.begin(), next.end(), Mode{index, -mode}));
        add(out, next, c * mode * count);
      }
    }
    return out;
  }

  // The basis quadratic as the literal product v^i(m) v^j(n) (canonical keys are already
  // normal ordered, so the right factor acts first).
  static State apply(const NormalQuadratic& q, const State& s) { return apply(q.i, q.m, apply(q.j, q.n, s)); }

  // Acts with a Lie element whose coefficients are specialized at r = 1.
  static State apply(const LieElement& x, const State& s) {
    State out;
    for (const auto& [q, c] : x.quadratic_part()) {
      for (const auto& [w, v] : apply(q, s)) add(out, w, v * c.specialize(Rational(1)));
    }
    const Rational central = x.central().specialize(Rational(1));
    if (central != 0) {
      for (const auto& [w, v] : s) add(out, w, v * central);
    }
    return out;
  }

  // Image of a Fock vector of M_1 under the evaluation map M_1 -> free boson space.
  static State embed(const FockVector& v) {
    State out;
    for (const auto& [m, c] : v.terms()) {
      State s = vacuum();
      for (const auto& q : m.factors()) s = apply(q, s);
      for (const auto& [w, x] : s) add(out, w, x * c.specialize(Rational(1)));
    }
    return out;
  }

  // L^{ij}(n) from its defining (unnormalized) sums over a wide window, on free bosons.
  static State apply_mode(const ModeSymbol& s, const State& state, int window) {
    State out;
    for (int h = -window; h <= window; ++h) {
      const int p = s.n - h;
      if (s.i == s.j) {
        // (1/2) sum_{p <= h} v(p) v(h) + (1/2) sum_{h < p} v(h) v(p)
        const State term = p <= h ? apply(s.i, p, apply(s.i, h, state)) : apply(s.i, h, apply(s.i, p, state));
        for (const auto& [w, c] : term) add(out, w, c / 2);
      } else {
        for (const auto& [w, c] : apply(s.i, p, apply(s.j, h, state))) add(out, w, c / 2);
      }
    }
    return out;
  }

 private:
  static void add(State& s, const std::vector<Mode>& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = s.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) s.erase(it);
  }
};

// ---------------------------------------------------------------------------------------
// Vacuum Virasoro module with symbolic central charge c (carried as the variable r).
// Basis: L(-a1) ... L(-ak) 1 with a1 >= ... >= ak >= 2.
class VirasoroVacuum {
 public:
  using Word = std::vector<int>;  // the a's
  using State = std::map<Word, Scalar>;

  static State vacuum() { return {{{}, Scalar(1)}}; }

  static State apply(int mode, const State& s) {
    State out;
    for (const auto& [w, c] : s) {
      for (const auto& [w2, c2] : apply_word(mode, w)) add(out, w2, c * c2);
    }
    return out;
  }

  static State apply_word(int mode, const Word& w) {
    State out;
    if (w.empty()) {
      if (mode <= -2) add(out, Word{-mode}, Scalar(1));
      return out;
    }
    if (mode <= -2 && -mode >= w.front()) {
      Word next = w;
      next.insert(next.begin(), -mode);
      add(out, next, Scalar(1));
      return out;
    }
    // L(m) L(-a) rest = L(-a) L(m) rest + [L(m), L(-a)] rest
    const int a = w.front();
    const Word rest(w.begin() + 1, w.end());
    const State inner = apply_word(mode, rest);
    for (const auto& [w2, c2] : apply(-a, inner)) add(out, w2, c2);
    for (const auto& [w2, c2] : apply_word(mode - a, rest)) add(out, w2, c2 * Scalar(mode + a));
    if (mode == a) {
      const Scalar central = Scalar::monomial(make_rational(static_cast<long>(mode) * mode * mode - mode, 12), 1);
      add(out, rest, central);
    }
    return out;
  }

  // <L(-a...)1, L(-b...)1> with L(n)^dagger = L(-n).
  static Scalar pairing(const Word& a, const Word& b) {
    State s;
    s[b] = Scalar(1);
    for (int x : a) s = apply(x, s);
    auto it = s.find(Word{});
    return it == s.end() ? Scalar() : it->second;
  }

 private:
  static void add(State& s, const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = s.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) s.erase(it);
  }
};

// ---------------------------------------------------------------------------------------
// Counting oracles.

// Number of partitions of n into parts >= 2 (vacuum Virasoro character).
inline std::size_t partitions_parts_at_least_two(int n) {
  std::vector<std::size_t> ways(static_cast<std::size_t>(std::max(n, 0)) + 1, 0);
  ways[0] = 1;
  for (int part = 2; part <= n; ++part) {
    for (int t = part; t <= n; ++t) ways[static_cast<std::size_t>(t)] += ways[static_cast<std::size_t>(t - part)];
  }
  return n < 0 ? 0 : ways[static_cast<std::size_t>(n)];
}

// dim (M_r)_N from prod_k (1 - x^k)^(-c_k), c_k = number of creation quadratics of degree k.
inline std::size_t fock_dimension(int d, int n) {
  std::vector<std::size_t> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int k = 2; k <= n; ++k) {
    const int count = d * (d - 1) / 2 * (k - 1) + d * (k / 2);
    for (int copy = 0; copy < count; ++copy) {
      for (int t = k; t <= n; ++t) ways[static_cast<std::size_t>(t)] += ways[static_cast<std::size_t>(t - k)];
    }
  }
  return ways[static_cast<std::size_t>(n)];
}

// ---------------------------------------------------------------------------------------
// Random generators (fixed seeds in every test).

inline NormalQuadratic random_quadratic(std::mt19937& rng, int d, int max_mode) {
  std::uniform_int_distribution<int> index(1, d);
  std::uniform_int_distribution<int> mode(-max_mode, max_mode);
  int i = index(rng), j = index(rng), m = mode(rng), n = mode(rng);
  if (i > j || (i == j && m > n)) {
    std::swap(i, j);
    std::swap(m, n);
  }
  return {i, m, j, n};
}

inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  long x = num(rng);
  if (x == 0) x = 1;
  return make_rational(x, den(rng));
}

inline Scalar random_scalar(std::mt19937& rng, int max_degree = 2) {
  std::uniform_int_distribution<int> degree(0, max_degree);
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 5);
  std::vector<Rational> coeffs;
  for (int k = 0, top = degree(rng); k <= top; ++k) coeffs.push_back(make_rational(num(rng), den(rng)));
  return Scalar::from_coeffs(std::move(coeffs));
}

inline LieElement random_lie_element(std::mt19937& rng, int d, int max_mode, int terms) {
  LieElement x;
  for (int t = 0; t < terms; ++t) x.add(random_quadratic(rng, d, max_mode), Scalar(random_rational(rng)));
  return x;
}

inline FockVector random_fock_vector(std::mt19937& rng, const FockSpace& space, int max_weight, int terms) {
  std::uniform_int_distribution<int> weight(0, max_weight);
  FockVector v;
  for (int t = 0; t < terms; ++t) {
    const auto& basis = space.basis_of_weight(weight(rng));
    if (basis.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    v.add(basis[pick(rng)], Scalar(random_rational(rng)));
  }
  return v;
}

// Random non-null word of exactly the given weight (>= 2), length 1..3.
inline ModeWord random_word(std::mt19937& rng, int d, int weight) {
  std::uniform_int_distribution<int> length(1, 3);
  std::uniform_int_distribution<int> mode(-4, 2);
  const auto pairs = index_pairs(d);
  std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
  for (;;) {
    const int k = length(rng);
    std::vector<ModeSymbol> modes;
    int sum = 0;
    for (int t = 0; t + 1 < k; ++t) {
      const auto [i, j] = pairs[pick(rng)];
      modes.push_back({i, j, mode(rng)});
      sum += modes.back().n;
    }
    const int last = -weight - sum;
    if (last > -2) continue;
    const auto [i, j] = pairs[pick(rng)];
    modes.push_back({i, j, last});
    return ModeWord(std::move(modes));
  }
}

}  // namespace qvoa::oracle

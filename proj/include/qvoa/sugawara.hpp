#pragma once

#include <compare>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qvoa/check.hpp"
#include "qvoa/fock.hpp"

namespace qvoa {

// The mode L^{ij}(n), i <= j. Equivalently the (n+1)-product mode of omega^{ij}.
struct ModeSymbol {
  int i = 1;
  int j = 1;
  int n = 0;

  bool is_diagonal() const { return i == j; }

  // Words compare mode by mode on (n, i, j).
  friend auto operator<=>(const ModeSymbol& a, const ModeSymbol& b) {
    return std::tie(a.n, a.i, a.j) <=> std::tie(b.n, b.i, b.j);
  }
  friend bool operator==(const ModeSymbol&, const ModeSymbol&) = default;
};

std::string to_string(const ModeSymbol& s);

// L^{i1 j1}(m1) ... L^{ik jk}(mk) 1; the rightmost mode acts first.
class ModeWord {
 public:
  ModeWord() = default;
  explicit ModeWord(std::vector<ModeSymbol> modes) : modes_(std::move(modes)) {}

  const std::vector<ModeSymbol>& modes() const { return modes_; }
  bool empty() const { return modes_.empty(); }
  std::size_t length() const { return modes_.size(); }
  int weight() const;
  // A rightmost mode with n >= -1 kills the vacuum, so the word is the zero vector.
  bool is_null() const { return !modes_.empty() && modes_.back().n >= -1; }

  ModeWord prepend(const ModeSymbol& s) const;

  // Shorter words first, then lexicographic on modes.
  friend auto operator<=>(const ModeWord& a, const ModeWord& b) {
    if (a.modes_.size() != b.modes_.size()) return a.modes_.size() <=> b.modes_.size();
    return a.modes_ <=> b.modes_;
  }
  friend bool operator==(const ModeWord&, const ModeWord&) = default;

  std::string to_string() const;

 private:
  std::vector<ModeSymbol> modes_;
};

// All index pairs (i, j), i <= j, in lexicographic order.
std::vector<std::pair<int, int>> index_pairs(int d);

// L^{ij}(n) restricted to the summands that can act nontrivially on weight <= max_weight:
// for i == j, :v(p)v(q): with p <= q, p + q = n, coefficient 1 (p < q) or 1/2 (p == q);
// for i < j, (1/2) :v^i(n-h) v^j(h):. The window is h in [n - max_weight, max_weight].
LieElement mode_element(const DeformedLieAlgebra& algebra, const ModeSymbol& s, int max_weight);

// Same sums with an explicit window h in [lo, hi] (used to check truncation soundness).
LieElement mode_element_window(const DeformedLieAlgebra& algebra, const ModeSymbol& s, int lo, int hi);

// Stateless mode application.
FockVector mode_apply(const FockSpace& space, const ModeSymbol& s, const FockVector& v);
FockVector word_to_fock(const FockSpace& space, const ModeWord& w);

// Mode application with a per-monomial memo. Not thread-safe; use one per thread.
class ModeEvaluator {
 public:
  explicit ModeEvaluator(const FockSpace& space) : space_(&space) {}

  const FockSpace& space() const { return *space_; }
  const FockVector& apply(const ModeSymbol& s, const FockMonomial& m);
  FockVector apply(const ModeSymbol& s, const FockVector& v);
  FockVector apply(const LieElement& x, const FockVector& v) const { return space_->act(x, v); }
  FockVector word(const ModeWord& w);

 private:
  const FockSpace* space_;
  std::map<std::pair<ModeSymbol, FockMonomial>, FockVector> memo_;
};

// Proposition formulas as exact operator identities on every basis vector of weight <= W,
// for all |m|, |n| <= W and every index configuration.
VerificationReport verify_commutators(const FockSpace& space, int max_weight, int jobs = 1);

// sum_k (-1)^k C(4,k) [L^{ij}(m+4-k), L^{st}(n+k)] = 0 on weights <= W, |m|, |n| <= W.
VerificationReport verify_locality(const FockSpace& space, int max_weight, int jobs = 1);

// L(0) acts by the degree, L(-1) 1 = 0, and [L(-1), L^{st}(m)] = (-1-m) L^{st}(m-1).
VerificationReport verify_grading_and_translation(const FockSpace& space, int max_weight, int jobs = 1);

}  // namespace qvoa

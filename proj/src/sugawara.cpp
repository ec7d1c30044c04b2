#include "qvoa/sugawara.hpp"

#include <functional>

namespace qvoa {

std::string to_string(const ModeSymbol& s) {
  return "L^{" + std::to_string(s.i) + std::to_string(s.j) + "}(" + std::to_string(s.n) + ")";
}

int ModeWord::weight() const {
  int w = 0;
  for (const auto& s : modes_) w -= s.n;
  return w;
}

ModeWord ModeWord::prepend(const ModeSymbol& s) const {
  std::vector<ModeSymbol> modes;
  modes.reserve(modes_.size() + 1);
  modes.push_back(s);
  modes.insert(modes.end(), modes_.begin(), modes_.end());
  return ModeWord(std::move(modes));
}

std::string ModeWord::to_string() const {
  std::string out;
  for (const auto& s : modes_) out += qvoa::to_string(s);
  return out + "1";
}

std::vector<std::pair<int, int>> index_pairs(int d) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= d; ++i) {
    for (int j = i; j <= d; ++j) out.emplace_back(i, j);
  }
  return out;
}

LieElement mode_element_window(const DeformedLieAlgebra& algebra, const ModeSymbol& s, int lo, int hi) {
  algebra.check_index(s.i);
  algebra.check_index(s.j);
  LieElement out;
  const Scalar half(make_rational(1, 2));
  for (int h = lo; h <= hi; ++h) {
    const int p = s.n - h;
    if (s.i == s.j) {
      if (p > h) continue;
      out.add({s.i, p, s.i, h}, p == h ? half : Scalar(1));
    } else {
      out.add({s.i, p, s.j, h}, half);
    }
  }
  return out;
}

LieElement mode_element(const DeformedLieAlgebra& algebra, const ModeSymbol& s, int max_weight) {
  return mode_element_window(algebra, s, s.n - max_weight, max_weight);
}

FockVector mode_apply(const FockSpace& space, const ModeSymbol& s, const FockVector& v) {
  FockVector out;
  for (const auto& [weight, part] : weight_decompose(v)) {
    if (weight - s.n < 0) continue;
    out += space.act(mode_element(space.algebra(), s, weight), part);
  }
  return out;
}

FockVector word_to_fock(const FockSpace& space, const ModeWord& w) {
  if (w.is_null()) return {};
  FockVector v = FockVector::vacuum();
  for (auto it = w.modes().rbegin(); it != w.modes().rend() && !v.is_zero(); ++it) v = mode_apply(space, *it, v);
  return v;
}

const FockVector& ModeEvaluator::apply(const ModeSymbol& s, const FockMonomial& m) {
  auto key = std::make_pair(s, m);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  FockVector value;
  if (m.degree() - s.n >= 0) {
    value = space_->act(mode_element(space_->algebra(), s, m.degree()), FockVector::monomial(m));
  }
  return memo_.emplace(std::move(key), std::move(value)).first->second;
}

FockVector ModeEvaluator::apply(const ModeSymbol& s, const FockVector& v) {
  FockVector out;
  for (const auto& [m, c] : v.terms()) out.add_scaled(apply(s, m), c);
  return out;
}

FockVector ModeEvaluator::word(const ModeWord& w) {
  if (w.is_null()) return {};
  FockVector v = FockVector::vacuum();
  for (auto it = w.modes().rbegin(); it != w.modes().rend() && !v.is_zero(); ++it) v = apply(*it, v);
  return v;
}

namespace {

Rational virasoro_central(int m, long denominator) {
  return make_rational(static_cast<long>(m) * m * m - m, denominator);
}

FockVector commutator_on(ModeEvaluator& eval, const ModeSymbol& a, const ModeSymbol& b, const FockMonomial& e) {
  FockVector basis = FockVector::monomial(e);
  FockVector out = eval.apply(a, eval.apply(b, basis));
  out -= eval.apply(b, eval.apply(a, basis));
  return out;
}

// Right-hand side of one commutator identity, evaluated on a basis monomial.
using RhsFn = std::function<FockVector(ModeEvaluator&, const FockMonomial&)>;

struct CommutatorTask {
  int formula;  // index into kFormulaNames
  ModeSymbol a;
  ModeSymbol b;
  RhsFn rhs;
};

constexpr const char* kFormulaNames[] = {
    "virasoro_diagonal",          // [L^ii(m), L^ii(n)]
    "disjoint_indices_commute",   // {i,j} and {s,t} disjoint
    "diagonal_offdiagonal",       // [L^ii(m), L^ij(n)] and its reverse
    "offdiagonal_self",           // [L^ij(m), L^ij(n)]
    "offdiagonal_shared_index",   // [L^ij(m), L^jk(n)]
    "translation_commutator",     // [L(-1), L^st(m)]
};
constexpr int kFormulaCount = 6;

// sum over the window of coeff(k) :v^a(k) v^b(total - k):, with the window chosen for weight N.
LieElement contraction_sum(const DeformedLieAlgebra& algebra, int a, int b, int total, int weight,
                           const std::function<Rational(int)>& coeff) {
  LieElement out;
  for (int k = total - weight; k <= weight; ++k) {
    const Rational c = coeff(k);
    if (c == 0) continue;
    LieElement term = algebra.normalize_quadratic(a, k, b, total - k);
    term *= Scalar(c);
    out += term;
  }
  return out;
}

FockVector apply_sum(ModeEvaluator& eval, const std::vector<ModeSymbol>& modes, const FockMonomial& e) {
  FockVector out;
  for (const auto& s : modes) out += eval.apply(s, FockVector::monomial(e));
  return out;
}

std::vector<CommutatorTask> commutator_tasks(const DeformedLieAlgebra& algebra, int max_weight) {
  const int d = algebra.dimension();
  const auto pairs = index_pairs(d);
  std::vector<CommutatorTask> tasks;
  auto shares = [](std::pair<int, int> p, int x) { return p.first == x || p.second == x; };
  auto other = [](std::pair<int, int> p, int x) { return p.first == x ? p.second : p.first; };

  for (const auto& p : pairs) {
    for (const auto& q : pairs) {
      for (int m = -max_weight; m <= max_weight; ++m) {
        for (int n = -max_weight; n <= max_weight; ++n) {
          const ModeSymbol a{p.first, p.second, m};
          const ModeSymbol b{q.first, q.second, n};
          const int total = m + n;
          const bool disjoint = !shares(q, p.first) && !shares(q, p.second);
          if (disjoint) {
            tasks.push_back({1, a, b, [](ModeEvaluator&, const FockMonomial&) { return FockVector(); }});
          } else if (p == q && p.first == p.second) {
            const int i = p.first;
            tasks.push_back({0, a, b, [=](ModeEvaluator& eval, const FockMonomial& e) {
                               FockVector out = eval.apply(ModeSymbol{i, i, total}, FockVector::monomial(e));
                               out *= Scalar(m - n);
                               if (total == 0) out.add(e, Scalar::monomial(virasoro_central(m, 12), 1));
                               return out;
                             }});
          } else if (p.first == p.second || q.first == q.second) {
            // One diagonal L^{ss}, one off-diagonal L^{st}; s is the shared index.
            const bool diagonal_first = p.first == p.second;
            const int s = diagonal_first ? p.first : q.first;
            const int t = diagonal_first ? other(q, s) : other(p, s);
            const int diag_mode = diagonal_first ? m : n;
            const Rational sign = diagonal_first ? Rational(1) : Rational(-1);
            tasks.push_back({2, a, b, [=, &algebra](ModeEvaluator& eval, const FockMonomial& e) {
                               const LieElement rhs = contraction_sum(
                                   algebra, s, t, total, e.degree(),
                                   [&](int k) -> Rational { return sign * make_rational(diag_mode - k, 2); });
                               return eval.apply(rhs, FockVector::monomial(e));
                             }});
          } else if (p == q) {
            const int i = p.first, j = p.second;
            tasks.push_back({3, a, b, [=](ModeEvaluator& eval, const FockMonomial& e) {
                               FockVector out = apply_sum(eval, {{i, i, total}, {j, j, total}}, e);
                               out *= Scalar(make_rational(m - n, 4));
                               if (total == 0) out.add(e, Scalar::monomial(virasoro_central(m, 24), 1));
                               return out;
                             }});
          } else {
            // Off-diagonal pairs {i, j} and {j, k} sharing exactly j.
            const int j = shares(q, p.first) ? p.first : p.second;
            const int i = other(p, j);
            const int k = other(q, j);
            tasks.push_back({4, a, b, [=, &algebra](ModeEvaluator& eval, const FockMonomial& e) {
                               // (1/4) sum_l l :v^i(m-l) v^k(n+l):, indexed by the v^i mode.
                               const LieElement rhs = contraction_sum(
                                   algebra, i, k, total, e.degree(),
                                   [&](int mode_i) -> Rational { return make_rational(m - mode_i, 4); });
                               return eval.apply(rhs, FockVector::monomial(e));
                             }});
          }
        }
      }
    }
  }
  for (const auto& q : pairs) {
    for (int m = -max_weight; m <= max_weight; ++m) {
      const ModeSymbol b{q.first, q.second, m};
      // The left operator is a sum; ModeSymbol a only labels the witness.
      tasks.push_back({5, ModeSymbol{0, 0, -1}, b, [=](ModeEvaluator& eval, const FockMonomial& e) {
                         FockVector out = eval.apply(ModeSymbol{q.first, q.second, m - 1}, FockVector::monomial(e));
                         out *= Scalar(-1 - m);
                         return out;
                       }});
    }
  }
  return tasks;
}

FockVector translation_commutator(ModeEvaluator& eval, const ModeSymbol& b, const FockMonomial& e) {
  FockVector out;
  for (int i = 1; i <= eval.space().dimension(); ++i) out += commutator_on(eval, ModeSymbol{i, i, -1}, b, e);
  return out;
}

std::vector<FockMonomial> basis_up_to(const FockSpace& space, int max_weight) {
  std::vector<FockMonomial> out;
  for (int w = 0; w <= max_weight; ++w) {
    const auto& b = space.basis_of_weight(w);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

std::string mismatch(const std::string& what, const FockMonomial& e, const FockVector& lhs, const FockVector& rhs) {
  return what + " on " + e.to_string() + ": lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string();
}

}  // namespace

VerificationReport verify_commutators(const FockSpace& space, int max_weight, int jobs) {
  const auto tasks = commutator_tasks(space.algebra(), max_weight);
  const auto basis = basis_up_to(space, max_weight);
  std::vector<FirstFailure> failures(kFormulaCount);
  std::vector<std::atomic<std::size_t>> cases(kFormulaCount);

  parallel_for(
      tasks.size(), jobs, [&] { return ModeEvaluator(space); },
      [&](ModeEvaluator& eval, std::size_t index) {
        const auto& task = tasks[index];
        for (const auto& e : basis) {
          const FockVector lhs =
              task.formula == 5 ? translation_commutator(eval, task.b, e) : commutator_on(eval, task.a, task.b, e);
          const FockVector rhs = task.rhs(eval, e);
          if (lhs != rhs) {
            const std::string label = task.formula == 5
                                          ? "[L(-1), " + to_string(task.b) + "]"
                                          : "[" + to_string(task.a) + ", " + to_string(task.b) + "]";
            failures[static_cast<std::size_t>(task.formula)].record(index, mismatch(label, e, lhs, rhs));
            break;
          }
        }
        cases[static_cast<std::size_t>(task.formula)] += basis.size();
      });

  VerificationReport report;
  for (int f = 0; f < kFormulaCount; ++f) {
    report.checks.push_back({std::string("commutator.") + kFormulaNames[f], cases[static_cast<std::size_t>(f)].load(),
                             failures[static_cast<std::size_t>(f)].message()});
  }
  return report;
}

VerificationReport verify_locality(const FockSpace& space, int max_weight, int jobs) {
  const auto pairs = index_pairs(space.dimension());
  struct Task {
    std::pair<int, int> p, q;
    int m, n;
  };
  std::vector<Task> tasks;
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a; b < pairs.size(); ++b) {
      for (int m = -max_weight; m <= max_weight; ++m) {
        for (int n = -max_weight; n <= max_weight; ++n) tasks.push_back({pairs[a], pairs[b], m, n});
      }
    }
  }
  const auto basis = basis_up_to(space, max_weight);
  FirstFailure failure;
  static constexpr long kBinomial[] = {1, 4, 6, 4, 1};

  parallel_for(
      tasks.size(), jobs, [&] { return ModeEvaluator(space); },
      [&](ModeEvaluator& eval, std::size_t index) {
        const auto& t = tasks[index];
        for (const auto& e : basis) {
          FockVector sum;
          for (int k = 0; k <= 4; ++k) {
            const ModeSymbol a{t.p.first, t.p.second, t.m + 4 - k};
            const ModeSymbol b{t.q.first, t.q.second, t.n + k};
            sum.add_scaled(commutator_on(eval, a, b, e), Scalar((k % 2 == 0 ? 1 : -1) * kBinomial[k]));
          }
          if (!sum.is_zero()) {
            failure.record(index, "order-4 locality for " + to_string(ModeSymbol{t.p.first, t.p.second, t.m}) +
                                      ", " + to_string(ModeSymbol{t.q.first, t.q.second, t.n}) + " on " +
                                      e.to_string() + ": " + sum.to_string());
            return;
          }
        }
      });

  VerificationReport report;
  report.checks.push_back({"locality.order4", tasks.size() * basis.size(), failure.message()});
  return report;
}

VerificationReport verify_grading_and_translation(const FockSpace& space, int max_weight, int jobs) {
  VerificationReport report;
  const auto basis = basis_up_to(space, max_weight);
  const int d = space.dimension();
  ModeEvaluator eval(space);

  CheckResult grading{"grading.l0_eigenvalue", 0, std::nullopt};
  for (const auto& e : basis) {
    FockVector l0;
    for (int i = 1; i <= d; ++i) l0 += eval.apply(ModeSymbol{i, i, 0}, FockVector::monomial(e));
    const FockVector expected = FockVector::monomial(e, Scalar(e.degree()));
    ++grading.cases;
    if (l0 != expected) {
      grading.witness = mismatch("L(0)", e, l0, expected);
      break;
    }
  }
  report.checks.push_back(grading);

  CheckResult vacuum{"translation.vacuum", 1, std::nullopt};
  FockVector l_minus_one;
  for (int i = 1; i <= d; ++i) l_minus_one += eval.apply(ModeSymbol{i, i, -1}, FockVector::vacuum());
  if (!l_minus_one.is_zero()) vacuum.witness = "L(-1)1 = " + l_minus_one.to_string();
  report.checks.push_back(vacuum);

  const auto pairs = index_pairs(d);
  std::vector<ModeSymbol> targets;
  for (const auto& q : pairs) {
    for (int m = -max_weight; m <= max_weight; ++m) targets.push_back({q.first, q.second, m});
  }
  FirstFailure failure;
  parallel_for(
      targets.size(), jobs, [&] { return ModeEvaluator(space); },
      [&](ModeEvaluator& local, std::size_t index) {
        const ModeSymbol& b = targets[index];
        for (const auto& e : basis) {
          const FockVector lhs = translation_commutator(local, b, e);
          FockVector rhs = local.apply(ModeSymbol{b.i, b.j, b.n - 1}, FockVector::monomial(e));
          rhs *= Scalar(-1 - b.n);
          if (lhs != rhs) {
            failure.record(index, mismatch("[L(-1), " + to_string(b) + "]", e, lhs, rhs));
            return;
          }
        }
      });
  report.checks.push_back({"translation.commutator", targets.size() * basis.size(), failure.message()});
  return report;
}

}  // namespace qvoa

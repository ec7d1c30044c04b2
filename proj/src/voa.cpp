#include "qvoa/voa.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qvoa {

std::vector<std::size_t> GradedSubspace::dims() const {
  std::vector<std::size_t> out;
  for (const auto& layer : by_weight) out.push_back(layer.size());
  return out;
}

std::vector<ModeWord> GradedSubspace::words(int weight) const {
  std::vector<ModeWord> out;
  if (weight < 0 || weight > max_weight) return out;
  for (const auto& b : by_weight[static_cast<std::size_t>(weight)]) out.push_back(b.word);
  return out;
}

namespace {

class Coordinates {
 public:
  Coordinates(const FockSpace& space, int max_weight) {
    for (int w = 0; w <= max_weight; ++w) {
      std::map<FockMonomial, std::size_t> index;
      const auto& basis = space.basis_of_weight(w);
      for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);
      index_.push_back(std::move(index));
    }
  }

  std::size_t width(int weight) const { return index_[static_cast<std::size_t>(weight)].size(); }

  ScalarVector dense(const FockVector& v, int weight) const {
    const auto& index = index_[static_cast<std::size_t>(weight)];
    ScalarVector out(index.size());
    for (const auto& [m, c] : v.terms()) out[index.at(m)] = c;
    return out;
  }

 private:
  std::vector<std::map<FockMonomial, std::size_t>> index_;
};

}  // namespace

GradedSubspace saturate(const FockSpace& space, int max_weight) {
  if (max_weight < 0) throw std::invalid_argument("max weight must be non-negative");
  GradedSubspace out;
  out.max_weight = max_weight;
  out.by_weight.resize(static_cast<std::size_t>(max_weight) + 1);

  const Coordinates coords(space, max_weight);
  std::vector<EchelonBasis> echelons;
  for (int w = 0; w <= max_weight; ++w) echelons.emplace_back(coords.width(w));

  ModeEvaluator eval(space);
  out.by_weight[0].push_back({ModeWord(), FockVector::vacuum()});
  echelons[0].insert(coords.dense(FockVector::vacuum(), 0));

  struct Ref {
    int weight;
    std::size_t index;
  };
  std::vector<Ref> frontier{{0, 0}};
  const auto pairs = index_pairs(space.dimension());

  while (!frontier.empty()) {
    struct Candidate {
      ModeWord word;
      Ref parent;
      ModeSymbol mode;
    };
    std::vector<Candidate> candidates;
    for (const Ref& ref : frontier) {
      const auto& parent = out.by_weight[static_cast<std::size_t>(ref.weight)][ref.index];
      for (const auto& [i, j] : pairs) {
        for (int m = std::max(-max_weight, ref.weight - max_weight); m <= std::min(max_weight, ref.weight); ++m) {
          const ModeSymbol s{i, j, m};
          ModeWord word = parent.word.prepend(s);
          if (word.is_null()) continue;
          candidates.push_back({std::move(word), ref, s});
        }
      }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) { return a.word < b.word; });

    std::vector<Ref> next;
    for (const auto& cand : candidates) {
      const auto& parent = out.by_weight[static_cast<std::size_t>(cand.parent.weight)][cand.parent.index];
      FockVector image = eval.apply(cand.mode, parent.vector);
      if (image.is_zero()) continue;
      const int weight = cand.parent.weight - cand.mode.n;
      if (!echelons[static_cast<std::size_t>(weight)].insert(coords.dense(image, weight))) continue;
      auto& layer = out.by_weight[static_cast<std::size_t>(weight)];
      layer.push_back({cand.word, std::move(image)});
      next.push_back({weight, layer.size() - 1});
    }
    frontier = std::move(next);
  }
  return out;
}

FockVector omega(const FockSpace& space, int i, int j) {
  return mode_apply(space, ModeSymbol{i, j, -2}, FockVector::vacuum());
}

std::vector<Scalar> omega_coordinates(const FockSpace& space, const FockVector& v) {
  const auto pairs = index_pairs(space.dimension());
  std::vector<Scalar> out(pairs.size());
  for (const auto& [m, c] : v.terms()) {
    const auto& f = m.factors();
    if (f.size() != 1 || f[0].m != -1 || f[0].n != -1) {
      throw std::invalid_argument("vector leaves the weight-2 space: " + m.to_string());
    }
    const auto pos = std::find(pairs.begin(), pairs.end(), std::make_pair(f[0].i, f[0].j)) - pairs.begin();
    // omega^{ij} carries coefficient 1/2 on its monomial.
    out[static_cast<std::size_t>(pos)] = c * Scalar(2);
  }
  return out;
}

GriessTable griess_table(const FockSpace& space) {
  GriessTable table;
  table.labels = index_pairs(space.dimension());
  const std::size_t n = table.labels.size();
  table.constants.resize(n * n * n);
  ModeEvaluator eval(space);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto [s, t] = table.labels[b];
      const FockVector product = eval.apply(ModeSymbol{table.labels[a].first, table.labels[a].second, 0},
                                            omega(space, s, t));
      const auto coords = omega_coordinates(space, product);
      for (std::size_t c = 0; c < n; ++c) table.constants[(a * n + b) * n + c] = coords[c];
    }
  }
  return table;
}

std::vector<Scalar> griess_delta_formula(int d, std::pair<int, int> a, std::pair<int, int> b) {
  const auto pairs = index_pairs(d);
  std::vector<Scalar> out(pairs.size());
  const auto [i, j] = a;
  const auto [s, t] = b;
  auto add = [&](bool delta, int x, int y) {
    if (!delta) return;
    const auto key = std::make_pair(std::min(x, y), std::max(x, y));
    const auto pos = std::find(pairs.begin(), pairs.end(), key) - pairs.begin();
    out[static_cast<std::size_t>(pos)] += Scalar(make_rational(1, 2));
  };
  add(i == s, j, t);
  add(i == t, j, s);
  add(j == s, i, t);
  add(j == t, i, s);
  return out;
}

VerificationReport verify_griess_table(const GriessTable& table, int d) {
  VerificationReport report;
  const std::size_t n = table.size();
  CheckResult delta{"griess.delta_formula", 0, std::nullopt};
  CheckResult commutative{"griess.commutative", 0, std::nullopt};
  CheckResult r_free{"griess.r_independent", 0, std::nullopt};
  auto label = [&](std::size_t a) {
    return "w^" + std::to_string(table.labels[a].first) + std::to_string(table.labels[a].second);
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto expected = griess_delta_formula(d, table.labels[a], table.labels[b]);
      for (std::size_t c = 0; c < n; ++c) {
        const Scalar& got = table.constant(a, b, c);
        ++delta.cases;
        ++commutative.cases;
        ++r_free.cases;
        const std::string where = "(" + label(a) + ")_1 " + label(b) + " on " + label(c);
        if (!delta.witness && got != expected[c]) {
          delta.witness = where + ": computed " + got.to_string() + ", formula " + expected[c].to_string();
        }
        if (!commutative.witness && got != table.constant(b, a, c)) {
          commutative.witness = where + " differs from the swapped product";
        }
        if (!r_free.witness && !got.is_constant()) r_free.witness = where + " depends on r: " + got.to_string();
      }
    }
  }
  report.checks = {delta, commutative, r_free};
  return report;
}

Scalar pair_with_vector(ModeEvaluator& eval, const ModeWord& u, const FockVector& v) {
  if (u.is_null()) return {};
  FockVector current = v;
  for (const auto& s : u.modes()) {
    if (current.is_zero()) return {};
    current = eval.apply(ModeSymbol{s.i, s.j, -s.n}, current);
  }
  return current.coefficient(FockMonomial::vacuum());
}

Scalar inner_product(const FockSpace& space, const ModeWord& u, const ModeWord& w) {
  if (u.weight() != w.weight()) return {};
  ModeEvaluator eval(space);
  return pair_with_vector(eval, u, eval.word(w));
}

Scalar central_charge(const FockSpace& space) {
  ModeEvaluator eval(space);
  const int d = space.dimension();
  FockVector virasoro;
  for (int i = 1; i <= d; ++i) virasoro += omega(space, i, i);
  Scalar total;
  for (int i = 1; i <= d; ++i) total += pair_with_vector(eval, ModeWord({{i, i, -2}}), virasoro);
  return total * Scalar(2);
}

GramData gram_matrix(const FockSpace& space, const GradedSubspace& subspace, int weight,
                     std::optional<Rational> r_value) {
  if (weight < 0 || weight > subspace.max_weight) throw std::out_of_range("weight outside the saturated range");
  GramData out;
  out.weight = weight;
  const auto& layer = subspace.by_weight[static_cast<std::size_t>(weight)];
  for (const auto& b : layer) out.labels.push_back(b.word);
  const std::size_t n = layer.size();
  out.matrix = ScalarMatrix(n, n);
  ModeEvaluator eval(space);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Scalar value = pair_with_vector(eval, layer[a].word, layer[b].vector);
      out.matrix.at(a, b) = r_value ? Scalar(value.specialize(*r_value)) : value;
    }
  }
  return out;
}

std::size_t radical_dimension(const FockSpace& space, const GradedSubspace& subspace, int weight,
                              const Rational& r_value) {
  const GramData gram = gram_matrix(space, subspace, weight, r_value);
  return gram.matrix.cols() - rank(gram.matrix);
}

VerificationReport quasi_primary_check(const FockSpace& space) {
  CheckResult check{"quasi_primary.l1_annihilates_generators", 0, std::nullopt};
  ModeEvaluator eval(space);
  const int d = space.dimension();
  for (const auto& [i, j] : index_pairs(d)) {
    FockVector image;
    const FockVector w = omega(space, i, j);
    for (int k = 1; k <= d; ++k) image += eval.apply(ModeSymbol{k, k, 1}, w);
    ++check.cases;
    if (!image.is_zero()) {
      check.witness = "L(1) w^" + std::to_string(i) + std::to_string(j) + " = " + image.to_string();
      break;
    }
  }
  return {{check}};
}

}  // namespace qvoa

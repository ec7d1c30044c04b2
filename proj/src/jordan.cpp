#include "qvoa/jordan.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qvoa {

SymMatrix::SymMatrix(int d) : d_(d), upper_(static_cast<std::size_t>(d * (d + 1) / 2)) {
  if (d < 1) throw std::invalid_argument("dimension d must be at least 1");
}

std::size_t SymMatrix::slot(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > d_) throw std::out_of_range("matrix index out of range");
  // Row-major upper triangle, matching index_pairs(d).
  const int row_start = (i - 1) * d_ - (i - 1) * (i - 2) / 2;
  return static_cast<std::size_t>(row_start + (j - i));
}

SymMatrix SymMatrix::unit(int d, int i, int j) {
  SymMatrix e(d);
  e.set(i, j, Scalar(i == j ? 2 : 1));
  return e;
}

SymMatrix SymMatrix::from_coordinates(int d, const std::vector<Scalar>& coords) {
  SymMatrix out(d);
  const auto pairs = index_pairs(d);
  if (coords.size() != pairs.size()) throw std::invalid_argument("coordinate count does not match d(d+1)/2");
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (!coords[k].is_zero()) out += coords[k] * unit(d, pairs[k].first, pairs[k].second);
  }
  return out;
}

const Scalar& SymMatrix::at(int i, int j) const { return upper_[slot(i, j)]; }

void SymMatrix::set(int i, int j, Scalar value) { upper_[slot(i, j)] = std::move(value); }

std::vector<Scalar> SymMatrix::coordinates() const {
  std::vector<Scalar> out;
  for (const auto& [i, j] : index_pairs(d_)) {
    Scalar c = at(i, j);
    if (i == j) c *= make_rational(1, 2);
    out.push_back(std::move(c));
  }
  return out;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& other) {
  if (other.d_ != d_) throw std::invalid_argument("dimension mismatch");
  for (std::size_t k = 0; k < upper_.size(); ++k) upper_[k] += other.upper_[k];
  return *this;
}

SymMatrix operator*(const Scalar& c, SymMatrix a) {
  for (auto& x : a.upper_) x = c * x;
  return a;
}

SymMatrix jordan_product(const SymMatrix& a, const SymMatrix& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("Jordan product of matrices of different size");
  const int d = a.dimension();
  SymMatrix out(d);
  for (int i = 1; i <= d; ++i) {
    for (int j = i; j <= d; ++j) {
      // (AB + BA)_{ij} / 2 with A, B symmetric: (sum_k a_ik b_kj + b_ik a_kj) / 2.
      Scalar sum;
      for (int k = 1; k <= d; ++k) sum += a.at(i, k) * b.at(k, j) + b.at(i, k) * a.at(k, j);
      sum *= make_rational(1, 2);
      out.set(i, j, std::move(sum));
    }
  }
  return out;
}

OrthogonalMatrix::OrthogonalMatrix(int d, std::vector<Rational> entries) : d_(d), entries_(std::move(entries)) {
  if (d < 1 || entries_.size() != static_cast<std::size_t>(d * d)) {
    throw std::invalid_argument("orthogonal matrix needs d*d entries");
  }
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      Rational dot(0);
      for (int k = 1; k <= d; ++k) dot += at(k, i) * at(k, j);
      if (dot != (i == j ? 1 : 0)) throw std::invalid_argument("matrix is not orthogonal (Q^T Q != I)");
    }
  }
}

OrthogonalMatrix OrthogonalMatrix::identity(int d) { return permutation([&] {
  std::vector<int> p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 1);
  return p;
}()); }

OrthogonalMatrix OrthogonalMatrix::negative_identity(int d) {
  std::vector<Rational> e(static_cast<std::size_t>(d * d), Rational(0));
  for (int i = 0; i < d; ++i) e[static_cast<std::size_t>(i * d + i)] = -1;
  return {d, std::move(e)};
}

OrthogonalMatrix OrthogonalMatrix::permutation(const std::vector<int>& perm) {
  const int d = static_cast<int>(perm.size());
  std::vector<Rational> e(static_cast<std::size_t>(d * d), Rational(0));
  for (int i = 1; i <= d; ++i) {
    const int k = perm[static_cast<std::size_t>(i - 1)];
    if (k < 1 || k > d) throw std::invalid_argument("permutation entry out of range");
    e[static_cast<std::size_t>((k - 1) * d + (i - 1))] = 1;
  }
  return {d, std::move(e)};
}

OrthogonalMatrix OrthogonalMatrix::rotation_345(int d) {
  if (d < 2) throw std::invalid_argument("the 3-4-5 rotation needs d >= 2");
  std::vector<Rational> e(static_cast<std::size_t>(d * d), Rational(0));
  for (int i = 0; i < d; ++i) e[static_cast<std::size_t>(i * d + i)] = 1;
  e[0] = make_rational(3, 5);
  e[1] = make_rational(4, 5);
  e[static_cast<std::size_t>(d)] = make_rational(-4, 5);
  e[static_cast<std::size_t>(d + 1)] = make_rational(3, 5);
  return {d, std::move(e)};
}

bool OrthogonalMatrix::is_negative_identity() const {
  for (int k = 1; k <= d_; ++k) {
    for (int i = 1; i <= d_; ++i) {
      if (at(k, i) != (k == i ? -1 : 0)) return false;
    }
  }
  return true;
}

std::string OrthogonalMatrix::to_string() const {
  std::string out = "[";
  for (int k = 1; k <= d_; ++k) {
    out += k > 1 ? ", [" : "[";
    for (int i = 1; i <= d_; ++i) out += (i > 1 ? ", " : "") + qvoa::to_string(at(k, i));
    out += "]";
  }
  return out + "]";
}

std::vector<OrthogonalMatrix> builtin_orthogonal_matrices(int d) {
  std::vector<OrthogonalMatrix> out;
  if (d <= 3) {
    std::vector<int> perm(static_cast<std::size_t>(d));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      out.push_back(OrthogonalMatrix::permutation(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    std::vector<int> cycle(static_cast<std::size_t>(d));
    std::iota(cycle.begin(), cycle.end(), 2);
    cycle.back() = 1;
    out.push_back(OrthogonalMatrix::permutation(cycle));
  }
  out.push_back(OrthogonalMatrix::negative_identity(d));
  if (d >= 2) out.push_back(OrthogonalMatrix::rotation_345(d));
  return out;
}

SymMatrix orthogonal_action(const OrthogonalMatrix& q, const SymMatrix& s) {
  if (q.dimension() != s.dimension()) throw std::invalid_argument("dimension mismatch");
  const int d = s.dimension();
  SymMatrix out(d);
  for (int k = 1; k <= d; ++k) {
    for (int l = k; l <= d; ++l) {
      Scalar sum;
      for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= d; ++j) {
          if (q.at(k, i) == 0 || q.at(l, j) == 0 || s.at(i, j).is_zero()) continue;
          Scalar term = s.at(i, j);
          term *= Rational(q.at(k, i) * q.at(l, j));
          sum += term;
        }
      }
      out.set(k, l, std::move(sum));
    }
  }
  return out;
}

namespace {

LieElement transform_quadratic(const OrthogonalMatrix& q, const DeformedLieAlgebra& algebra,
                               const NormalQuadratic& x) {
  LieElement out;
  const int d = q.dimension();
  for (int k = 1; k <= d; ++k) {
    if (q.at(k, x.i) == 0) continue;
    for (int l = 1; l <= d; ++l) {
      if (q.at(l, x.j) == 0) continue;
      LieElement term = algebra.normalize_quadratic(k, x.m, l, x.n);
      term *= Scalar(Rational(q.at(k, x.i) * q.at(l, x.j)));
      out += term;
    }
  }
  return out;
}

}  // namespace

FockVector orthogonal_action(const OrthogonalMatrix& q, const FockSpace& space, const FockVector& v) {
  if (q.dimension() != space.dimension()) throw std::invalid_argument("dimension mismatch");
  FockVector out;
  for (const auto& [mono, coeff] : v.terms()) {
    FockVector product = FockVector::monomial(FockMonomial::vacuum(), coeff);
    for (const auto& factor : mono.factors()) {
      // Creation factors stay creation quadratics; no central terms can appear.
      const LieElement image = transform_quadratic(q, space.algebra(), factor);
      FockVector next;
      for (const auto& [m, c] : product.terms()) {
        for (const auto& [quad, qc] : image.quadratic_part()) next.add(m.times(quad), c * qc);
      }
      product = std::move(next);
    }
    out += product;
  }
  return out;
}

std::vector<std::pair<ModeSymbol, Scalar>> orthogonal_action(const OrthogonalMatrix& q, const ModeSymbol& s) {
  const int d = q.dimension();
  const auto coords = orthogonal_action(q, SymMatrix::unit(d, s.i, s.j)).coordinates();
  const auto pairs = index_pairs(d);
  std::vector<std::pair<ModeSymbol, Scalar>> out;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (!coords[k].is_zero()) out.emplace_back(ModeSymbol{pairs[k].first, pairs[k].second, s.n}, coords[k]);
  }
  return out;
}

VerificationReport check_isomorphism(const FockSpace& space, const GriessTable& table) {
  const int d = space.dimension();
  const auto& pairs = table.labels;
  const std::size_t n = pairs.size();
  CheckResult products{"jordan.isomorphism_products", 0, std::nullopt};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      ++products.cases;
      const auto jordan = jordan_product(SymMatrix::unit(d, pairs[a].first, pairs[a].second),
                                         SymMatrix::unit(d, pairs[b].first, pairs[b].second))
                              .coordinates();
      for (std::size_t c = 0; c < n; ++c) {
        if (jordan[c] != table.constant(a, b, c)) {
          products.witness = "E^" + std::to_string(pairs[a].first) + std::to_string(pairs[a].second) + " * E^" +
                             std::to_string(pairs[b].first) + std::to_string(pairs[b].second) +
                             " differs from the 1-product at coordinate " + std::to_string(c);
          break;
        }
      }
      if (products.witness) break;
    }
    if (products.witness) break;
  }

  // g maps E^{ij} to omega^{ij}; it is a bijection iff the omega^{ij} are independent.
  CheckResult bijection{"jordan.isomorphism_bijective", 1, std::nullopt};
  const auto& basis = space.basis_of_weight(2);
  EchelonBasis echelon(basis.size());
  for (const auto& [i, j] : pairs) {
    const FockVector w = omega(space, i, j);
    ScalarVector dense;
    for (const auto& m : basis) dense.push_back(w.coefficient(m));
    echelon.insert(std::move(dense));
  }
  if (echelon.rank() != n || basis.size() != n) {
    bijection.witness = "rank " + std::to_string(echelon.rank()) + " of " + std::to_string(n) +
                        " generators in a weight-2 space of dimension " + std::to_string(basis.size());
  }
  return {{products, bijection}};
}

namespace {

std::vector<std::pair<ModeWord, Scalar>> transform_word(const OrthogonalMatrix& q, const ModeWord& w) {
  std::vector<std::pair<ModeWord, Scalar>> out{{ModeWord(), Scalar(1)}};
  for (auto it = w.modes().rbegin(); it != w.modes().rend(); ++it) {
    std::vector<std::pair<ModeWord, Scalar>> next;
    for (const auto& [word, c] : out) {
      for (const auto& [s, sc] : orthogonal_action(q, *it)) next.emplace_back(word.prepend(s), c * sc);
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

VerificationReport verify_automorphism(const OrthogonalMatrix& q, const FockSpace& space, int max_weight, int jobs) {
  if (q.dimension() != space.dimension()) throw std::invalid_argument("dimension mismatch");
  VerificationReport report;
  const int d = space.dimension();
  const auto pairs = index_pairs(d);
  const std::string tag = " [Q = " + q.to_string() + "]";

  std::vector<FockMonomial> basis;
  for (int w = 0; w <= max_weight; ++w) {
    const auto& b = space.basis_of_weight(w);
    basis.insert(basis.end(), b.begin(), b.end());
  }

  // g(L(m) e) = (g L(m) g^-1)(g e)
  std::vector<ModeSymbol> modes;
  for (const auto& [i, j] : pairs) {
    for (int m = -max_weight; m <= max_weight; ++m) modes.push_back({i, j, m});
  }
  FirstFailure conjugation_failure;
  parallel_for(
      modes.size(), jobs, [&] { return ModeEvaluator(space); },
      [&](ModeEvaluator& eval, std::size_t index) {
        const ModeSymbol& s = modes[index];
        const auto transformed = orthogonal_action(q, s);
        for (const auto& e : basis) {
          const FockVector lhs = orthogonal_action(q, space, eval.apply(s, FockVector::monomial(e)));
          const FockVector ge = orthogonal_action(q, space, FockVector::monomial(e));
          FockVector rhs;
          for (const auto& [t, c] : transformed) rhs.add_scaled(eval.apply(t, ge), c);
          if (lhs != rhs) {
            conjugation_failure.record(index, "g " + to_string(s) + " " + e.to_string() + " = " + lhs.to_string() +
                                                  " but conjugated mode gives " + rhs.to_string() + tag);
            return;
          }
        }
      });
  report.checks.push_back({"automorphism.mode_conjugation", modes.size() * basis.size(), conjugation_failure.message()});

  // Griess table in the transformed basis {g omega^a}.
  CheckResult griess{"automorphism.griess_invariance", 0, std::nullopt};
  {
    const GriessTable table = griess_table(space);
    ModeEvaluator eval(space);
    std::vector<FockVector> transformed;
    for (const auto& [i, j] : pairs) transformed.push_back(orthogonal_action(q, space, omega(space, i, j)));
    for (std::size_t a = 0; a < pairs.size() && !griess.witness; ++a) {
      for (std::size_t b = 0; b < pairs.size(); ++b) {
        ++griess.cases;
        FockVector lhs;
        for (const auto& [t, c] : orthogonal_action(q, ModeSymbol{pairs[a].first, pairs[a].second, 0})) {
          lhs.add_scaled(eval.apply(t, transformed[b]), c);
        }
        FockVector rhs;
        for (std::size_t c = 0; c < pairs.size(); ++c) rhs.add_scaled(transformed[c], table.constant(a, b, c));
        if (lhs != rhs) {
          griess.witness = "structure constant (" + std::to_string(a) + ", " + std::to_string(b) +
                           ") changes in the transformed basis" + tag;
          break;
        }
      }
    }
  }
  report.checks.push_back(griess);

  CheckResult gram{"automorphism.gram_invariance", 0, std::nullopt};
  {
    const GradedSubspace subspace = saturate(space, max_weight);
    ModeEvaluator eval(space);
    for (int w = 0; w <= max_weight && !gram.witness; ++w) {
      const GramData original = gram_matrix(space, subspace, w);
      const auto& layer = subspace.by_weight[static_cast<std::size_t>(w)];
      for (std::size_t a = 0; a < layer.size() && !gram.witness; ++a) {
        const auto expanded = transform_word(q, layer[a].word);
        for (std::size_t b = 0; b < layer.size(); ++b) {
          ++gram.cases;
          const FockVector gb = orthogonal_action(q, space, layer[b].vector);
          Scalar value;
          for (const auto& [word, c] : expanded) value += c * pair_with_vector(eval, word, gb);
          if (value != original.matrix.at(a, b)) {
            gram.witness = "weight " + std::to_string(w) + " Gram entry (" + std::to_string(a) + ", " +
                           std::to_string(b) + "): " + original.matrix.at(a, b).to_string() + " becomes " +
                           value.to_string() + tag;
            break;
          }
        }
      }
    }
  }
  report.checks.push_back(gram);

  if (q.is_negative_identity()) {
    CheckResult fixed{"automorphism.minus_identity_trivial", 0, std::nullopt};
    for (const auto& e : basis) {
      ++fixed.cases;
      const FockVector v = FockVector::monomial(e);
      const FockVector image = orthogonal_action(q, space, v);
      if (image != v) {
        fixed.witness = "-I moves " + e.to_string() + " to " + image.to_string();
        break;
      }
    }
    report.checks.push_back(fixed);
  }
  return report;
}

}  // namespace qvoa

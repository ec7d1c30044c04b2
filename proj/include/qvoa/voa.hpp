#pragma once

#include <optional>
#include <vector>

#include "qvoa/check.hpp"
#include "qvoa/matrix.hpp"
#include "qvoa/sugawara.hpp"

namespace qvoa {

struct GradedBasisVector {
  ModeWord word;
  FockVector vector;
};

// Basis of (V_J)_N for every N <= max_weight, each vector labelled by the word that produced it.
struct GradedSubspace {
  int max_weight = 0;
  std::vector<std::vector<GradedBasisVector>> by_weight;

  std::vector<std::size_t> dims() const;
  std::vector<ModeWord> words(int weight) const;
};

// Closes {1} under all modes L^{ij}(m), |m| <= W, keeping images of weight <= W that raise
// the generic (Q(r)) rank. Candidates are tried shortest word first, then lexicographically.
GradedSubspace saturate(const FockSpace& space, int max_weight);

// Structure constants of the 1-product on {omega^{ij} | i <= j}:
// (omega^a)_1 omega^b = sum_c constant(a, b, c) omega^c.
struct GriessTable {
  std::vector<std::pair<int, int>> labels;
  std::vector<Scalar> constants;  // indexed [(a * n + b) * n + c]

  std::size_t size() const { return labels.size(); }
  const Scalar& constant(std::size_t a, std::size_t b, std::size_t c) const {
    return constants[(a * size() + b) * size() + c];
  }
};

// omega^{ij} = L^{ij}(-2) 1 = (1/2) :v^i(-1) v^j(-1): 1.
FockVector omega(const FockSpace& space, int i, int j);

// Coordinates of a weight-2 vector in the omega basis. Throws std::invalid_argument if the
// vector has a component outside weight 2.
std::vector<Scalar> omega_coordinates(const FockSpace& space, const FockVector& v);

GriessTable griess_table(const FockSpace& space);

// Coordinates of (1/2)(d_is w^jt + d_it w^js + d_js w^it + d_jt w^is) in the omega basis.
std::vector<Scalar> griess_delta_formula(int d, std::pair<int, int> a, std::pair<int, int> b);

// Checks the table against the delta formula, commutativity and r-independence.
VerificationReport verify_griess_table(const GriessTable& table, int d);

// <u, v>: applies u's modes, negated, to v (leftmost first) and reads off the vacuum coefficient.
Scalar pair_with_vector(ModeEvaluator& eval, const ModeWord& u, const FockVector& v);
Scalar inner_product(const FockSpace& space, const ModeWord& u, const ModeWord& w);

// 2 <omega, omega> with omega = sum_i omega^{ii}.
Scalar central_charge(const FockSpace& space);

struct GramData {
  int weight = 0;
  std::vector<ModeWord> labels;
  ScalarMatrix matrix;
};

GramData gram_matrix(const FockSpace& space, const GradedSubspace& subspace, int weight,
                     std::optional<Rational> r_value = std::nullopt);

// Nullity of the Gram matrix at weight N specialized at r_value.
std::size_t radical_dimension(const FockSpace& space, const GradedSubspace& subspace, int weight,
                              const Rational& r_value);

// L(1) omega^{ij} = 0 for every generator.
VerificationReport quasi_primary_check(const FockSpace& space);

}  // namespace qvoa

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qvoa/fock.hpp"

namespace qvoa {
namespace {

const Scalar r = Scalar::r();

FockVector state(std::vector<NormalQuadratic> factors, Scalar c = Scalar(1)) {
  return FockVector::monomial(FockMonomial(std::move(factors)), c);
}

TEST(FockBasis, LowWeights) {
  const FockSpace space{DeformedLieAlgebra(2)};
  ASSERT_EQ(space.basis_of_weight(0).size(), 1u);
  EXPECT_TRUE(space.basis_of_weight(0)[0].is_vacuum());
  EXPECT_TRUE(space.basis_of_weight(1).empty());
  EXPECT_EQ(space.basis_of_weight(2).size(), 3u);
}

TEST(FockBasis, WeightFourInRankOne) {
  const FockSpace space{DeformedLieAlgebra(1)};
  const auto& basis = space.basis_of_weight(4);
  const std::vector<FockMonomial> expected = {
      FockMonomial({{1, -3, 1, -1}}),
      FockMonomial({{1, -2, 1, -2}}),
      FockMonomial({{1, -1, 1, -1}, {1, -1, 1, -1}}),
  };
  ASSERT_EQ(basis.size(), expected.size());
  for (const auto& m : expected) EXPECT_NE(std::find(basis.begin(), basis.end(), m), basis.end()) << m.to_string();
}

TEST(FockBasis, DimensionsMatchGeneratingFunction) {
  for (int d = 1; d <= 3; ++d) {
    const FockSpace space{DeformedLieAlgebra(d)};
    for (int n = 0; n <= (d == 3 ? 5 : 7); ++n) {
      ASSERT_EQ(space.basis_of_weight(n).size(), oracle::fock_dimension(d, n)) << "d=" << d << " N=" << n;
      for (const auto& m : space.basis_of_weight(n)) ASSERT_EQ(m.degree(), n);
    }
  }
}

TEST(FockBasis, CreationQuadraticCount) {
  for (int d = 1; d <= 4; ++d) {
    const FockSpace space{DeformedLieAlgebra(d)};
    for (int k = 2; k <= 6; ++k) {
      EXPECT_EQ(space.creation_quadratics(k).size(),
                static_cast<std::size_t>(d * (d - 1) / 2 * (k - 1) + d * (k / 2)));
    }
  }
}

TEST(FockAct, AnnihilatorKillsVacuumAndUnmatchedStates) {
  const FockSpace space{DeformedLieAlgebra(1)};
  const LieElement x = LieElement::quadratic({1, 0, 1, 5});
  EXPECT_TRUE(space.act(x, FockVector::vacuum()).is_zero());
  EXPECT_TRUE(space.act(x, state({{1, -1, 1, -1}})).is_zero());
}

TEST(FockAct, SingleContraction) {
  const FockSpace space{DeformedLieAlgebra(1)};
  const FockVector w = state({{1, -1, 1, -1}});
  EXPECT_EQ(space.act(LieElement::quadratic({1, -1, 1, 1}), w), Scalar(2) * w);
}

TEST(FockAct, DoubleContractionGivesScalar) {
  const FockSpace space{DeformedLieAlgebra(1)};
  const FockVector w = state({{1, -1, 1, -1}});
  EXPECT_EQ(space.act(LieElement::quadratic({1, 1, 1, 1}), w), Scalar(2) * r * FockVector::vacuum());
}

TEST(FockAct, CentralElementActsByScalar) {
  const FockSpace space{DeformedLieAlgebra(2)};
  const FockVector w = state({{1, -1, 2, -2}});
  EXPECT_EQ(space.act(LieElement::constant(r), w), r * w);
}

TEST(FockAct, ModuleAxiom) {
  const FockSpace space{DeformedLieAlgebra(2)};
  const DeformedLieAlgebra& alg = space.algebra();
  std::mt19937 rng(17);
  for (int k = 0; k < 200; ++k) {
    const LieElement x = oracle::random_lie_element(rng, 2, 3, 2);
    const LieElement y = oracle::random_lie_element(rng, 2, 3, 2);
    const FockVector v = oracle::random_fock_vector(rng, space, 5, 3);
    const FockVector lhs = space.act(alg.bracket(x, y), v);
    const FockVector rhs = space.act(x, space.act(y, v)) - space.act(y, space.act(x, v));
    ASSERT_EQ(lhs, rhs) << x.to_string() << " | " << y.to_string() << " | " << v.to_string();
  }
}

TEST(FockAct, AgreesWithFreeBosonsAtLevelOne) {
  const FockSpace space{DeformedLieAlgebra(2)};
  std::mt19937 rng(19);
  using Boson = oracle::HeisenbergFock;
  for (int k = 0; k < 150; ++k) {
    const LieElement x = oracle::random_lie_element(rng, 2, 4, 3);
    const FockVector v = oracle::random_fock_vector(rng, space, 5, 3);
    ASSERT_EQ(Boson::embed(space.act(x, v)), Boson::apply(x, Boson::embed(v)))
        << x.to_string() << " | " << v.to_string();
  }
}

TEST(FockAct, GradedAction) {
  const FockSpace space{DeformedLieAlgebra(2)};
  std::mt19937 rng(23);
  for (int k = 0; k < 100; ++k) {
    const NormalQuadratic g = oracle::random_quadratic(rng, 2, 3);
    const auto& basis = space.basis_of_weight(4);
    const FockMonomial& m = basis[static_cast<std::size_t>(k) % basis.size()];
    const FockVector out = space.act(g, m);
    if (out.is_zero()) continue;
    ASSERT_EQ(out.weight(), std::optional<int>(4 + g.degree()));
    ASSERT_EQ(weight_decompose(out).size(), 1u);
  }
}

TEST(WeightDecompose, SplitsByWeight) {
  const auto vac = weight_decompose(FockVector::vacuum());
  ASSERT_EQ(vac.size(), 1u);
  EXPECT_EQ(vac.at(0), FockVector::vacuum());
  const FockVector a = state({{1, -1, 1, -1}});
  const FockVector b = state({{1, -2, 1, -1}});
  const auto parts = weight_decompose(a + b);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts.at(2), a);
  EXPECT_EQ(parts.at(3), b);
  EXPECT_FALSE((a + b).weight().has_value());
}

}  // namespace
}  // namespace qvoa

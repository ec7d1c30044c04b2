#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qvoa/sugawara.hpp"
#include "qvoa/voa.hpp"

namespace qvoa {
namespace {

const Scalar r = Scalar::r();

FockVector commutator(const FockSpace& space, const ModeSymbol& a, const ModeSymbol& b, const FockVector& v) {
  return mode_apply(space, a, mode_apply(space, b, v)) - mode_apply(space, b, mode_apply(space, a, v));
}

const CheckResult& find_check(const VerificationReport& report, const std::string& name) {
  for (const auto& c : report.checks) {
    if (c.name == name) return c;
  }
  throw std::runtime_error("missing check " + name);
}

TEST(ModeApply, GeneratorFromVacuum) {
  const FockSpace space{DeformedLieAlgebra(2)};
  EXPECT_EQ(mode_apply(space, {1, 1, -2}, FockVector::vacuum()), omega(space, 1, 1));
  const FockVector expected =
      FockVector::monomial(FockMonomial({{1, -1, 1, -1}}), Scalar(make_rational(1, 2)));
  EXPECT_EQ(omega(space, 1, 1), expected);
  for (int m = -1; m <= 3; ++m) {
    EXPECT_TRUE(mode_apply(space, {1, 2, m}, FockVector::vacuum()).is_zero()) << m;
  }
}

TEST(ModeApply, AnnihilatesGeneratorToCentralCharge) {
  const FockSpace space{DeformedLieAlgebra(1)};
  EXPECT_EQ(mode_apply(space, {1, 1, 2}, omega(space, 1, 1)), Scalar(make_rational(1, 2)) * r * FockVector::vacuum());
}

TEST(WordToFock, Examples) {
  const FockSpace space{DeformedLieAlgebra(1)};
  EXPECT_EQ(word_to_fock(space, ModeWord()), FockVector::vacuum());
  EXPECT_EQ(word_to_fock(space, ModeWord({{1, 1, -2}})), omega(space, 1, 1));
  const FockVector v = word_to_fock(space, ModeWord({{1, 1, -2}, {1, 1, -2}}));
  EXPECT_EQ(v.weight(), std::optional<int>(4));
  const FockMonomial square({{1, -1, 1, -1}, {1, -1, 1, -1}});
  EXPECT_EQ(v.coefficient(square), Scalar(make_rational(1, 4)));
  EXPECT_TRUE(word_to_fock(space, ModeWord({{1, 1, -2}, {1, 1, -1}})).is_zero());
}

TEST(ModeApply, ShiftsWeightExactly) {
  const FockSpace space{DeformedLieAlgebra(2)};
  for (int n = -4; n <= 4; ++n) {
    for (const auto& m : space.basis_of_weight(4)) {
      const FockVector out = mode_apply(space, {1, 2, n}, FockVector::monomial(m));
      if (!out.is_zero()) ASSERT_EQ(out.weight(), std::optional<int>(4 - n));
    }
  }
}

TEST(ModeApply, MatchesFreeBosonSugawaraSums) {
  // Level-one free bosons, unnormalized two-sum definition over a wide window.
  const FockSpace space{DeformedLieAlgebra(2)};
  using Boson = oracle::HeisenbergFock;
  for (int weight = 0; weight <= 4; ++weight) {
    for (const auto& m : space.basis_of_weight(weight)) {
      for (const auto& [i, j] : index_pairs(2)) {
        for (int n = -3; n <= 3; ++n) {
          const ModeSymbol s{i, j, n};
          const FockVector v = FockVector::monomial(m);
          ASSERT_EQ(Boson::embed(mode_apply(space, s, v)), Boson::apply_mode(s, Boson::embed(v), 12))
              << to_string(s) << " on " << m.to_string();
        }
      }
    }
  }
}

TEST(ModeApply, TruncationIsSound) {
  const FockSpace space{DeformedLieAlgebra(2)};
  const DeformedLieAlgebra& alg = space.algebra();
  for (int weight = 0; weight <= 4; ++weight) {
    for (const auto& m : space.basis_of_weight(weight)) {
      for (const auto& [i, j] : index_pairs(2)) {
        for (int n = -4; n <= 4; ++n) {
          const ModeSymbol s{i, j, n};
          const FockVector v = FockVector::monomial(m);
          const FockVector narrow = space.act(mode_element(alg, s, weight), v);
          const FockVector wide = space.act(mode_element_window(alg, s, n - weight - 6, weight + 6), v);
          ASSERT_EQ(narrow, wide) << to_string(s) << " on " << m.to_string();
        }
      }
    }
  }
}

TEST(ModeApply, TwoSumDiagonalDefinitionEqualsCollapsedForm) {
  // L^{ii}(n) = 1/2 sum_{p<=h} v(p)v(h) + 1/2 sum_{h<p} v(h)v(p), p = n - h, each product
  // normal ordered by the algebra.
  const FockSpace space{DeformedLieAlgebra(2)};
  const DeformedLieAlgebra& alg = space.algebra();
  const int window = 10;
  for (int i = 1; i <= 2; ++i) {
    for (int n = -4; n <= 4; ++n) {
      LieElement two_sum;
      for (int h = -window; h <= window; ++h) {
        const int p = n - h;
        LieElement term = p <= h ? alg.normalize_quadratic(i, p, i, h) : alg.normalize_quadratic(i, h, i, p);
        two_sum += Scalar(make_rational(1, 2)) * term;
      }
      for (int weight = 0; weight <= 4; ++weight) {
        for (const auto& m : space.basis_of_weight(weight)) {
          const FockVector v = FockVector::monomial(m);
          ASSERT_EQ(space.act(two_sum, v), mode_apply(space, {i, i, n}, v)) << "i=" << i << " n=" << n;
        }
      }
    }
  }
}

TEST(Commutators, VirasoroCentralTerm) {
  const FockSpace space{DeformedLieAlgebra(1)};
  EXPECT_EQ(commutator(space, {1, 1, 2}, {1, 1, -2}, FockVector::vacuum()),
            Scalar(make_rational(1, 2)) * r * FockVector::vacuum());
}

TEST(Commutators, DisjointIndicesCommute) {
  const FockSpace space{DeformedLieAlgebra(4)};
  std::mt19937 rng(29);
  for (int k = 0; k < 30; ++k) {
    const FockVector v = oracle::random_fock_vector(rng, space, 4, 2);
    for (int m = -2; m <= 2; ++m) {
      ASSERT_TRUE(commutator(space, {1, 2, m}, {3, 4, -m + 1}, v).is_zero());
    }
  }
}

TEST(Commutators, OffDiagonalCentralTerm) {
  const FockSpace space{DeformedLieAlgebra(2)};
  EXPECT_EQ(commutator(space, {1, 2, 2}, {1, 2, -2}, FockVector::vacuum()),
            Scalar(make_rational(1, 4)) * r * FockVector::vacuum());
}

TEST(Commutators, OffDiagonalSelfCoefficientIsOneQuarter) {
  // [L^{12}(m), L^{12}(n)] = c (m - n)(L^{11} + L^{22})(m + n) + delta (m^3 - m)/24 r.
  // The coefficient c = 1/4 holds; c = 1/2 is refuted already on the vacuum.
  const FockSpace space{DeformedLieAlgebra(2)};
  const int m = 1, n = -3;
  const FockVector lhs = commutator(space, {1, 2, m}, {1, 2, n}, FockVector::vacuum());
  const FockVector sum = mode_apply(space, {1, 1, m + n}, FockVector::vacuum()) +
                         mode_apply(space, {2, 2, m + n}, FockVector::vacuum());
  EXPECT_EQ(lhs, Scalar(make_rational(m - n, 4)) * sum);
  EXPECT_NE(lhs, Scalar(make_rational(m - n, 2)) * sum);
}

TEST(Commutators, FullSuitePassesInLowRank) {
  for (int d = 1; d <= 2; ++d) {
    const FockSpace space{DeformedLieAlgebra(d)};
    const VerificationReport report = verify_commutators(space, 3, 2);
    ASSERT_EQ(report.checks.size(), 6u);
    for (const auto& c : report.checks) EXPECT_TRUE(c.passed()) << c.name << ": " << c.witness.value_or("");
  }
}

TEST(Commutators, FaultInjectionProducesWitness) {
  const FockSpace space{DeformedLieAlgebra(1, BracketFault::kDoubledCentralTerm)};
  const VerificationReport report = verify_commutators(space, 2, 1);
  EXPECT_FALSE(report.passed());
  ASSERT_NE(report.first_failure(), nullptr);
  EXPECT_FALSE(report.first_failure()->witness->empty());
}

TEST(Commutators, ParallelSweepReportsSameWitness) {
  const FockSpace space{DeformedLieAlgebra(1, BracketFault::kDoubledCentralTerm)};
  const VerificationReport one = verify_commutators(space, 3, 1);
  const VerificationReport four = verify_commutators(space, 3, 4);
  ASSERT_EQ(one.checks.size(), four.checks.size());
  for (std::size_t k = 0; k < one.checks.size(); ++k) {
    EXPECT_EQ(one.checks[k].witness, four.checks[k].witness);
    EXPECT_EQ(one.checks[k].cases, four.checks[k].cases);
  }
}

TEST(Locality, OrderFourIdentity) {
  const FockSpace space{DeformedLieAlgebra(3)};
  const VerificationReport report = verify_locality(space, 3, 2);
  EXPECT_TRUE(report.passed()) << report.first_failure()->witness.value_or("");
}

TEST(Grading, EigenvalueAndTranslation) {
  const FockSpace space{DeformedLieAlgebra(2)};
  const VerificationReport report = verify_grading_and_translation(space, 4, 2);
  for (const auto& c : report.checks) EXPECT_TRUE(c.passed()) << c.name << ": " << c.witness.value_or("");
  EXPECT_TRUE(find_check(report, "translation.vacuum").passed());
}

TEST(Grading, Examples) {
  const FockSpace space{DeformedLieAlgebra(1)};
  const FockVector w = omega(space, 1, 1);
  EXPECT_EQ(mode_apply(space, {1, 1, 0}, w), Scalar(2) * w);
  EXPECT_TRUE(mode_apply(space, {1, 1, -1}, FockVector::vacuum()).is_zero());
  EXPECT_EQ(commutator(space, {1, 1, -1}, {1, 1, -2}, FockVector::vacuum()),
            mode_apply(space, {1, 1, -3}, FockVector::vacuum()));
}

TEST(ModeWord, OrderingAndNullity) {
  const ModeWord a({{1, 1, -2}});
  const ModeWord b({{1, 1, -3}});
  const ModeWord ab({{1, 1, -2}, {1, 1, -2}});
  EXPECT_LT(a, ab);
  EXPECT_LT(b, a);
  EXPECT_EQ(ab.weight(), 4);
  EXPECT_TRUE(ModeWord({{1, 1, -1}}).is_null());
  EXPECT_FALSE(a.is_null());
  EXPECT_EQ(a.prepend({1, 1, -2}), ab);
}

}  // namespace
}  // namespace qvoa

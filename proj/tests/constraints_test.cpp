#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "cylint/constraints.hpp"
#include "cylint/sampling.hpp"
#include "cylint/special.hpp"

namespace cylint {
namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

// Plain Gauss-Jordan over the rationals, for cross-checking exact_rank.
std::size_t reference_rank(RationalMatrix m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

ConstraintSystem random_system(Rng& rng, int max_index) {
  ConstraintSystem sys;
  std::set<std::pair<int, int>> used;
  const int n_terms = 1 + static_cast<int>(rng() % 8);
  while (static_cast<int>(sys.terms.size()) < n_terms) {
    const int j = static_cast<int>(rng() % static_cast<unsigned>(max_index + 1));
    const int k = static_cast<int>(rng() % static_cast<unsigned>(max_index + 1));
    if (!used.emplace(j, k).second) continue;
    sys.terms.push_back({j, k, random_rational(rng, 1000)});
  }
  return sys;
}

TEST(ExactRankTest, Basics) {
  EXPECT_EQ(exact_rank({}), 0u);
  EXPECT_EQ(exact_rank({{q(0), q(0)}}), 0u);
  EXPECT_EQ(exact_rank({{q(1), q(2)}, {q(2), q(4)}}), 1u);
  EXPECT_EQ(exact_rank({{q(1, 3), q(2)}, {q(1, 2), q(3)}}), 1u);
  EXPECT_EQ(exact_rank({{q(1, 3), q(2)}, {q(1, 2), q(5)}}), 2u);
  EXPECT_THROW(exact_rank({{q(1)}, {q(1), q(2)}}), std::invalid_argument);
}

TEST(ExactRankTest, MatchesReferenceOnRandomLowRankMatrices) {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 9);
    const int cols = 1 + static_cast<int>(rng() % 9);
    const int inner = 1 + static_cast<int>(rng() % 5);
    // product of rows x inner and inner x cols factors has rank <= inner
    RationalMatrix left(rows, std::vector<Rational>(inner));
    RationalMatrix right(inner, std::vector<Rational>(cols));
    for (auto& r : left) for (auto& x : r) x = random_rational(rng, 20);
    for (auto& r : right) for (auto& x : r) x = random_rational(rng, 20);
    RationalMatrix m(rows, std::vector<Rational>(cols));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        for (int t = 0; t < inner; ++t) m[i][j] += left[i][t] * right[t][j];
    EXPECT_EQ(exact_rank(m), reference_rank(m));
    EXPECT_LE(exact_rank(m), static_cast<std::size_t>(inner));
  }
}

TEST(AssembleATest, Examples) {
  ConstraintSystem sys{{{0, 0, q(1)}}};
  EXPECT_EQ(assemble_A(sys, q(1)), (RationalMatrix{{q(1)}}));

  sys.terms = {{0, 0, q(1)}, {0, 1, q(1)}, {1, 0, q(1)}};
  const Rational rho = q(7, 20);
  const Rational r2 = rho * rho;
  EXPECT_EQ(assemble_A(sys, rho),
            (RationalMatrix{{q(1), r2 / q(3), r2 / q(3)}, {q(0), q(2, 3), q(-1, 3)}}));

  sys.terms = {{1, 1, q(1)}};
  EXPECT_EQ(assemble_A(sys, q(1)),
            (RationalMatrix{{q(1, 5)}, {q(-1, 15)}, {q(-2, 15)}}));
}

TEST(AssembleATest, EvaluateUsesCoefficients) {
  ConstraintSystem sys{{{0, 1, q(3)}, {1, 0, q(-2)}}};
  const auto A = evaluate_A(sys, q(1, 2));
  ASSERT_EQ(A.size(), 2u);
  EXPECT_EQ(A[0], q(3) * q(1, 12) + q(-2) * q(1, 12));
  EXPECT_EQ(A[1], q(2) + q(2, 3));
}

TEST(CheckDegeneracyTest, Examples) {
  ConstraintSystem sys{{{0, 0, q(1)}}};
  IdentityCheck c = check_degeneracy(sys, 0);
  EXPECT_TRUE(c.holds());
  EXPECT_EQ(c.lhs, q(1));

  Rng rng(43);
  sys.terms = {{0, 1, random_rational(rng, 1000)}, {1, 0, random_rational(rng, 1000)}};
  c = check_degeneracy(sys, 1);
  EXPECT_TRUE(c.holds());
  EXPECT_EQ(c.lhs, (q(2) * sys.terms[0].a - sys.terms[1].a) / q(3));

  sys.terms = {{1, 1, q(1)}};
  c = check_degeneracy(sys, 1);
  EXPECT_TRUE(c.holds());
  EXPECT_EQ(c.rhs, q(-1, 15));
}

TEST(CheckDegeneracyTest, RefusesBelowMaxJ) {
  ConstraintSystem sys{{{2, 1, q(1)}, {0, 4, q(1)}}};
  try {
    check_degeneracy(sys, 1);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("max{j}"), std::string::npos);
  }
  EXPECT_THROW(check_degeneracy(sys, 5), DomainError);
  EXPECT_THROW(check_degeneracy(ConstraintSystem{}, 0), DomainError);
}

TEST(CheckDegeneracyTest, RandomSystemsAtBothRadiusChoices) {
  Rng rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    ConstraintSystem sys = random_system(rng, 5);
    if (trial % 2) sys.rho_outer = q(6, 5);
    for (int N = sys.max_j(); N <= sys.L(); ++N) {
      EXPECT_TRUE(check_degeneracy(sys, N).holds());
    }
  }
}

TEST(DedupTest, Examples) {
  DedupReport r = dedup(ConstraintSystem{{{0, 0, q(1)}}});
  EXPECT_EQ(r.total_rows, 2);
  EXPECT_EQ(r.rank, 1);
  EXPECT_EQ(r.redundant_rows, (std::vector<RowRef>{{Radius::outer, 0}}));
  EXPECT_EQ(r.predicted_independent, 1);

  r = dedup(ConstraintSystem{{{0, 0, q(1)}, {0, 1, q(1)}, {1, 0, q(1)}}});
  EXPECT_EQ(r.total_rows, 4);
  EXPECT_EQ(r.rank, 3);
  EXPECT_EQ(r.redundant_rows, (std::vector<RowRef>{{Radius::outer, 1}}));
  EXPECT_EQ(r.predicted_independent, 3);
  EXPECT_EQ(r.rank_status(), "equal");
  EXPECT_TRUE(r.witnesses_verified);

  r = dedup(ConstraintSystem{{{1, 1, q(1)}}});
  EXPECT_EQ(r.total_rows, 6);
  EXPECT_EQ(r.rank, 1);
  EXPECT_EQ(r.predicted_independent, 1);
}

TEST(DedupTest, WitnessReproducesOuterRowsExactly) {
  Rng rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    ConstraintSystem sys = random_system(rng, 5);
    if (trial % 3 == 1) sys.rho_outer = q(3, 2);
    const RationalMatrix inner = assemble_A(sys, sys.rho_inner);
    const RationalMatrix outer = assemble_A(sys, sys.rho_outer);
    for (int N = sys.max_j(); N <= sys.L(); ++N) {
      const auto w = degeneracy_witness(sys, N);
      for (int l = 0; l < N; ++l) EXPECT_TRUE(w[static_cast<std::size_t>(l)].is_zero());
      for (std::size_t c = 0; c < sys.terms.size(); ++c) {
        Rational combo;
        for (std::size_t l = 0; l < w.size(); ++l) combo += w[l] * inner[l][c];
        EXPECT_EQ(combo, outer[static_cast<std::size_t>(N)][c]);
      }
    }
    const DedupReport r = dedup(sys);
    EXPECT_LE(r.rank, r.predicted_independent);
    EXPECT_LE(r.rank, static_cast<int>(sys.terms.size()));
  }
}

TEST(DedupTest, RankInvariantUnderColumnScalingAndRowPermutation) {
  Rng rng(59);
  for (int trial = 0; trial < 15; ++trial) {
    const ConstraintSystem sys = random_system(rng, 4);
    RationalMatrix m = assemble_A(sys, sys.rho_inner);
    const RationalMatrix outer = assemble_A(sys, sys.rho_outer);
    m.insert(m.end(), outer.begin(), outer.end());
    const std::size_t base = exact_rank(m);
    EXPECT_EQ(base, static_cast<std::size_t>(dedup(sys).rank));

    RationalMatrix scaled = m;
    const std::size_t col = rng() % m[0].size();
    Rational f = random_rational(rng, 100);
    if (f.is_zero()) f = q(7);
    for (auto& row : scaled) row[col] *= f;
    EXPECT_EQ(exact_rank(scaled), base);

    RationalMatrix shuffled = m;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(exact_rank(shuffled), base);
  }
}

TEST(DedupTest, CoincidentRadiiCollapseRank) {
  Rng rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    ConstraintSystem sys = random_system(rng, 5);
    sys.rho_inner = q(3, 5);
    sys.rho_outer = q(3, 5);
    EXPECT_LE(dedup(sys).rank, sys.L() + 1);
    EXPECT_THROW(sys.validate(), DomainError);
  }
}

TEST(ConstraintSystemTest, DerivedBoundsAndValidation) {
  ConstraintSystem sys{{{2, 1, q(1)}, {0, 4, q(1)}}};
  EXPECT_EQ(sys.L(), 4);
  EXPECT_EQ(sys.max_j(), 2);
  EXPECT_EQ(sys.rho_inner, q(7, 20));
  EXPECT_EQ(sys.rho_outer, q(1));
  EXPECT_NO_THROW(sys.validate());
  sys.terms.push_back({5, 5, q(1)});
  EXPECT_EQ(sys.L(), 10);
  EXPECT_EQ(sys.max_j(), 5);

  sys.terms.push_back({2, 1, q(3)});
  EXPECT_THROW(sys.validate(), DomainError);
  EXPECT_THROW(ConstraintSystem{}.validate(), DomainError);
  ConstraintSystem bad{{{0, 0, q(1)}}, q(1), q(7, 20)};
  EXPECT_THROW(bad.validate(), DomainError);
  bad = ConstraintSystem{{{0, -1, q(1)}}};
  EXPECT_THROW(bad.validate(), DomainError);
}

}  // namespace
}  // namespace cylint

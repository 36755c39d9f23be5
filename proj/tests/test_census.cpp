#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "tourtype/census.hpp"
#include "tourtype/verify.hpp"

using namespace tourtype;

namespace {

SignedTuple T(std::initializer_list<int> v) { return SignedTuple(v); }

Tournament tt3() { return transitive(3); }
Tournament c3() { return parse_tournament("3:101"); }

// Tournament on m vertices whose cycle 0,1,...,m-1 reads the given word;
// chords point from lower to higher index.
Tournament with_cycle(const SignedTuple& beta) {
  const SignWord w = expand(beta);
  const int m = w.length;
  return Tournament::from_predicate(m, [&](int i, int j) {
    if (j == i + 1) return w.forward(i);
    if (i == 0 && j == m - 1) return !w.forward(m - 1);
    return true;
  });
}

std::vector<Tournament> sample(int n, int count, std::uint64_t seed) {
  std::vector<Tournament> out;
  for (int i = 0; i < count; ++i) out.push_back(random_tournament(n, sample_seed(seed, static_cast<std::uint64_t>(i))));
  return out;
}

}  // namespace

TEST(Classify, Enumerations) {
  EXPECT_EQ(classify_enumeration(tt3(), std::vector<int>{0, 1, 2}), T({2}));
  EXPECT_EQ(classify_enumeration(tt3(), std::vector<int>{0, 2, 1}), T({1, -1}));
  EXPECT_EQ(classify_enumeration(c3(), std::vector<int>{0, 1, 2}), T({2}));
  EXPECT_THROW(classify_enumeration(tt3(), std::vector<int>{0}), TooShort);
  EXPECT_THROW(classify_enumeration(tt3(), std::vector<int>{0, 0}), BadSubset);
}

TEST(Classify, Cycles) {
  EXPECT_EQ(classify_cycle(c3(), std::vector<int>{0, 1, 2}).repr(), T({3}));
  EXPECT_EQ(classify_cycle(tt3(), std::vector<int>{0, 1, 2}).repr(), T({1, -2}));
  const Tournament t = with_cycle(T({1, -1, 1, -1}));
  EXPECT_EQ(classify_cycle(t, std::vector<int>{0, 1, 2, 3}).repr(), T({1, -1, 1, -1}));
  EXPECT_THROW(classify_cycle(tt3(), std::vector<int>{0, 1}), TooShort);
}

TEST(Counts, SmallExamples) {
  EXPECT_EQ(count_enumerations(tt3(), T({1, -1})), 2U);
  EXPECT_EQ(count_enumerations(tt3(), T({2})), 1U);
  EXPECT_EQ(count_enumerations(c3(), T({1, -1})), 0U);
  EXPECT_EQ(count_paths(tt3(), T({1, -1})), 1U);
  EXPECT_EQ(count_paths(c3(), T({2})), 3U);
  EXPECT_EQ(count_paths(tt3(), T({-1, 1})), 1U);
  EXPECT_EQ(count_cycles(c3(), T({3})), 1U);
  EXPECT_EQ(count_cycles(tt3(), T({1, -2})), 1U);
  EXPECT_EQ(count_cycles(c3(), T({1, -2})), 0U);
  EXPECT_THROW(count_paths(tt3(), T({3})), TypeTooLong);
  EXPECT_THROW(count_cycles(tt3(), T({1, -1})), TooShort);
  EXPECT_THROW(count_paths(tt3(), T({1, 1})), IllFormed);
}

TEST(Counts, SingleTypeAgreesWithOracle) {
  for (int n = 2; n <= 6; ++n) {
    for (const Tournament& t : sample(n, 6, 100 + static_cast<std::uint64_t>(n))) {
      for (int k = 1; k < n; ++k) {
        for (const auto& alpha : list_types(k, TypeKind::Path)) {
          EXPECT_EQ(count_paths(t, alpha), oracle::paths(t, alpha)) << serialize(t) << " " << to_string(alpha);
        }
      }
      for (int m = 3; m <= n; ++m) {
        for (const auto& beta : list_types(m, TypeKind::Cycle)) {
          EXPECT_EQ(count_cycles(t, beta), oracle::cycles(t, beta)) << serialize(t) << " " << to_string(beta);
        }
      }
    }
  }
}

TEST(Counts, EnumerationRatio) {
  for (const Tournament& t : sample(6, 10, 7)) {
    for (const auto& alpha : list_types(5, TypeKind::Path)) {
      const Count e = oracle::enumerations(t, alpha);
      EXPECT_EQ(count_enumerations(t, alpha), e);
      EXPECT_EQ(e, (is_symmetric(alpha) ? 2 : 1) * oracle::paths(t, alpha));
    }
  }
}

TEST(Counts, EnumerationsPartitionPermutations) {
  for (int n = 2; n <= 7; ++n) {
    for (const Tournament& t : sample(n, 5, 55)) {
      Count total = 0;
      for (const auto& alpha : list_types(n - 1, TypeKind::Path)) total += count_enumerations(t, alpha);
      EXPECT_EQ(total, factorial(n));
    }
  }
}

TEST(Counts, SixteenVertices) {
  const Tournament t = transitive(16);
  EXPECT_EQ(count_paths(t, T({15})), 1U);
  const Tournament r = random_tournament(16, 5);
  Count total = 0;
  // Two words suffice to exercise the DP at full size.
  total += count_enumerations(r, T({15})) + count_enumerations(r, T({-15}));
  EXPECT_GE(total, 2U);
}

TEST(Census, Transitive3) {
  const CensusReport r = census(tt3());
  EXPECT_EQ(r.order, 3);
  ASSERT_EQ(r.path_counts.size(), 3U);
  EXPECT_EQ(r.path_counts.at(path_canonical(T({2}))), 1U);
  EXPECT_EQ(r.path_counts.at(path_canonical(T({1, -1}))), 1U);
  EXPECT_EQ(r.path_counts.at(path_canonical(T({-1, 1}))), 1U);
  EXPECT_EQ(r.cycle_counts.at(cycle_canonical(T({1, -2}))), 1U);
  EXPECT_EQ(r.cycle_counts.at(cycle_canonical(T({3}))), 0U);
}

TEST(Census, TrivialOrders) {
  EXPECT_TRUE(census(transitive(1)).path_counts.empty());
  EXPECT_TRUE(census(transitive(1)).cycle_counts.empty());
  EXPECT_TRUE(census(transitive(0)).path_counts.empty());
  EXPECT_EQ(census(transitive(2)).path_counts.size(), 1U);
  EXPECT_TRUE(census(transitive(2)).cycle_counts.empty());
  EXPECT_THROW(census(transitive(13)), ScopeTooLarge);
  EXPECT_THROW(oracle_census(transitive(9)), ScopeTooLarge);
}

TEST(Census, MatchesOracleExhaustive) {
  for (int n = 1; n <= 5; ++n) {
    for (const Tournament& t : all_tournaments(n)) EXPECT_EQ(census(t), oracle_census(t)) << serialize(t);
  }
}

TEST(Census, MatchesOracleRandom) {
  for (int n = 6; n <= 8; ++n) {
    for (const Tournament& t : sample(n, 8, 900 + static_cast<std::uint64_t>(n))) {
      EXPECT_EQ(census(t), oracle_census(t)) << serialize(t);
    }
  }
}

TEST(Census, MatchesEdgeSetOracle) {
  for (const Tournament& t : sample(6, 4, 31)) {
    const CensusReport r = census(t);
    for (const auto& [alpha, f] : r.path_counts) EXPECT_EQ(f, oracle::paths(t, alpha.repr()));
    for (const auto& [beta, g] : r.cycle_counts) EXPECT_EQ(g, oracle::cycles(t, beta.repr()));
  }
}

TEST(Census, SingleTypeRoutesAgree) {
  for (const Tournament& t : sample(9, 3, 4)) {
    const CensusReport r = census(t);
    for (const auto& [alpha, f] : r.path_counts) EXPECT_EQ(f, count_paths(t, alpha.repr()));
    for (const auto& [beta, g] : r.cycle_counts) EXPECT_EQ(g, count_cycles(t, beta.repr()));
  }
}

TEST(Census, Transitive) {
  for (int n = 3; n <= 10; ++n) EXPECT_EQ(census(transitive(n)).path_counts.at(path_canonical(T({n - 1}))), 1U);
}

TEST(Tables, AgreeWithSingleWordDp) {
  for (const Tournament& t : sample(7, 3, 12)) {
    const EnumerationTable e = enumeration_table(t);
    const ClosedTable c = closed_table(t);
    for (int k = 1; k < 7; ++k) {
      for (const auto& alpha : list_types(k, TypeKind::Path)) EXPECT_EQ(e.at(expand(alpha)), count_enumerations(t, alpha));
    }
    for (int m = 3; m <= 7; ++m) {
      for (const auto& beta : list_types(m, TypeKind::Cycle)) {
        EXPECT_EQ(cycles_from_table(c, beta), count_cycles(t, beta)) << to_string(beta);
      }
    }
  }
}

TEST(Clones, Examples) {
  EXPECT_EQ(clones(with_cycle(T({1, -1, 1, -1})), std::vector<int>{0, 1, 2, 3}),
            (std::vector<VertexSeq>{{0, 2}, {1, 3}}));
  EXPECT_EQ(clones(with_cycle(T({2, -1, 2, -1})), std::vector<int>{0, 1, 2, 3, 4, 5}),
            (std::vector<VertexSeq>{{0, 3}, {1, 4}, {2, 5}}));
  EXPECT_EQ(clones(c3(), std::vector<int>{0, 1, 2}), (std::vector<VertexSeq>{{0}, {1}, {2}}));
  EXPECT_EQ(clones(with_cycle(T({1, -2, 1, -1})), std::vector<int>{0, 1, 2, 3, 4}).size(), 5U);
}

TEST(Clones, ClassSizeIsT) {
  for (int m = 3; m <= 9; ++m) {
    for (const auto& beta : list_types(m, TypeKind::Cycle)) {
      if (is_singleton(beta)) continue;
      VertexSeq cyc(static_cast<std::size_t>(m));
      std::iota(cyc.begin(), cyc.end(), 0);
      const auto classes = clones(with_cycle(beta), cyc);
      const auto t = static_cast<std::size_t>(period_info(beta).t);
      EXPECT_EQ(classes.size(), static_cast<std::size_t>(m) / t);
      for (const auto& cls : classes) EXPECT_EQ(cls.size(), t);
    }
  }
}

TEST(PathClasses, Examples) {
  const auto circuit = path_classes(c3(), T({2}));
  ASSERT_EQ(circuit.classes.size(), 1U);
  EXPECT_EQ(circuit.classes[0].paths.size(), 3U);
  EXPECT_EQ(circuit.classes[0].cycle_type.repr(), T({3}));

  const auto tt = path_classes(tt3(), T({1, -1}));
  ASSERT_EQ(tt.classes.size(), 1U);
  EXPECT_EQ(tt.classes[0].paths.size(), 1U);

  const auto straight = path_classes(tt3(), T({2}));
  ASSERT_EQ(straight.classes.size(), 1U);
  EXPECT_EQ(straight.classes[0].cycle_type.repr(), T({1, -2}));
  EXPECT_EQ(straight.classes[0].paths.size(), 1U);

  EXPECT_THROW(path_classes(transitive(4), T({2})), IllFormed);
}

TEST(PathClasses, SizesFollowTheLaw) {
  for (int n = 3; n <= 6; ++n) {
    for (const Tournament& t : sample(n, 20, 77)) {
      for (const auto& alpha : list_types(n - 1, TypeKind::Path)) {
        Count total = 0;
        for (const auto& cls : path_classes(t, alpha).classes) {
          EXPECT_EQ(cls.paths.size(), expected_class_size(cls.cycle_type, n)) << serialize(t) << to_string(alpha);
          total += cls.paths.size();
        }
        EXPECT_EQ(total, count_paths(t, alpha));
      }
    }
  }
}

TEST(Identities, PathAndCycleNegation) {
  for (int n = 3; n <= 8; ++n) {
    for (const Tournament& t : sample(n, 10, 3)) {
      const CensusReport r = census(t);
      for (const auto& [alpha, f] : r.path_counts) {
        EXPECT_EQ(f, r.path_counts.at(path_canonical(negated(alpha.repr()))));
      }
      for (const auto& [beta, g] : r.cycle_counts) {
        EXPECT_EQ(g, r.cycle_counts.at(cycle_canonical(negated(beta.repr()))));
      }
    }
  }
}

TEST(Identities, ComplementBridge) {
  for (const Tournament& t : sample(7, 10, 8)) {
    EXPECT_EQ(census(t), census(complement(t)));
    const Tournament r = complement(t);
    for (const auto& alpha : list_types(6, TypeKind::Path)) {
      EXPECT_EQ(count_enumerations(r, alpha), count_enumerations(t, negated(alpha)));
    }
  }
}

TEST(Identities, Divisibility) {
  for (const Tournament& t : sample(8, 5, 21)) {
    for (const auto& beta : list_types(8, TypeKind::Cycle)) {
      const auto closed = detail::closed_by_subset(t, expand(beta));
      const Count n = closed[t.vertex_mask()];
      const Count unit = static_cast<Count>(delta(beta) * period_info(beta).t);
      EXPECT_EQ(n % unit, 0U) << to_string(beta);
    }
  }
}

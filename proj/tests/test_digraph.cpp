#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tourtype/digraph.hpp"
#include "tourtype/verify.hpp"

using namespace tourtype;

namespace {

SignedTuple T(std::initializer_list<int> v) { return SignedTuple(v); }

oracle::Digraph to_oracle(const Digraph2Spec& h) {
  oracle::Digraph d;
  for (const auto& c : h.components) {
    switch (c.kind) {
      case Component::Kind::Path: oracle::add_path(d, c.tuple); break;
      case Component::Kind::Cycle: oracle::add_cycle(d, c.tuple); break;
      case Component::Kind::Vertex: oracle::add_vertex(d); break;
    }
  }
  return d;
}

}  // namespace

TEST(DigraphText, ParseAndPrint) {
  const Digraph2Spec h = parse_digraph_spec("P(2,-1);C(3);V;V");
  ASSERT_EQ(h.components.size(), 4U);
  EXPECT_EQ(h.components[0].kind, Component::Kind::Path);
  EXPECT_EQ(h.components[1].kind, Component::Kind::Cycle);
  EXPECT_EQ(h.order(), 4 + 3 + 2);
  EXPECT_EQ(to_string(h), "P(2,-1);C(3);V;V");
  EXPECT_EQ(to_string(parse_digraph_spec(" P( 1 ,0, 1) ; V ")), "P(2);V");
}

TEST(DigraphText, ParseErrors) {
  EXPECT_THROW(parse_digraph_spec(""), ParseError);
  EXPECT_THROW(parse_digraph_spec("P(1);"), ParseError);
  EXPECT_THROW(parse_digraph_spec("Q(1)"), ParseError);
  EXPECT_THROW(parse_digraph_spec("C(1,-1)"), ParseError);
  EXPECT_THROW(parse_digraph_spec("P(1,1)"), ParseError);
  try {
    parse_digraph_spec("V;P(2,x)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 6U);
  }
}

TEST(Copies, Examples) {
  EXPECT_EQ(count_copies(transitive(3), parse_digraph_spec("P(2)")), 1U);
  EXPECT_EQ(count_copies(parse_tournament("3:101"), parse_digraph_spec("C(3)")), 1U);
  EXPECT_EQ(count_copies(transitive(4), parse_digraph_spec("V;V")), 6U);
  EXPECT_EQ(count_copies(transitive(4), Digraph2Spec{}), 1U);
  EXPECT_THROW(count_copies(transitive(3), parse_digraph_spec("P(3)")), TooManyVertices);
}

TEST(Copies, SingleComponentMatchesCensus) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Tournament t = random_tournament(6, s);
    for (const auto& alpha : list_types(5, TypeKind::Path)) {
      EXPECT_EQ(count_copies(t, {{Component::path(alpha)}}), count_paths(t, alpha));
    }
    for (const auto& beta : list_types(6, TypeKind::Cycle)) {
      EXPECT_EQ(count_copies(t, {{Component::cycle(beta)}}), count_cycles(t, beta));
    }
  }
}

TEST(Copies, MatchesBruteForce) {
  const auto specs = all_digraph_specs(5);
  for (std::uint64_t s = 0; s < 3; ++s) {
    const Tournament t = random_tournament(5, 40 + s);
    CopyCounter counter(t);
    for (const auto& h : specs) EXPECT_EQ(counter.count(h), oracle::copies(t, to_oracle(h))) << to_string(h);
  }
  SplitMix64 rng(99);
  for (int i = 0; i < 30; ++i) {
    const Tournament t = random_tournament(6, rng.next());
    const Digraph2Spec h = random_digraph_spec(6, rng);
    EXPECT_EQ(count_copies(t, h), oracle::copies(t, to_oracle(h))) << serialize(t) << " " << to_string(h);
  }
}

TEST(Copies, ComplementInvariance) {
  const auto a = check_complement_invariance(transitive(3), parse_digraph_spec("P(1,-1)"));
  EXPECT_EQ(a.in_tournament, 1U);
  EXPECT_EQ(a.in_complement, 1U);
  EXPECT_TRUE(a.equal);
  const auto b = check_complement_invariance(parse_tournament("3:101"), parse_digraph_spec("C(3)"));
  EXPECT_EQ(b.in_tournament, 1U);
  EXPECT_TRUE(b.equal);
  const Tournament t = random_tournament(6, 7);
  const Digraph2Spec h{{Component::path(T({2})), Component::path(T({1, -1}))}};
  const auto c = check_complement_invariance(t, h);
  EXPECT_TRUE(c.equal);
  EXPECT_EQ(c.in_tournament, oracle::copies(t, to_oracle(h)));
  EXPECT_EQ(c.in_complement, oracle::copies(complement(t), to_oracle(h)));
}

TEST(Copies, AllSpecsAreDistinctClasses) {
  const auto specs = all_digraph_specs(4);
  std::set<std::string> seen;
  for (const auto& h : specs) {
    EXPECT_LE(h.order(), 4);
    EXPECT_TRUE(seen.insert(to_string(h)).second);
  }
}

TEST(Star, CounterexampleCounts) {
  for (int n = 3; n <= 8; ++n) {
    const auto s = star_counterexample(n);
    EXPECT_EQ(s.count, 1U) << n;
    EXPECT_EQ(s.complement_count, 0U) << n;
    EXPECT_EQ(s.tournament.order(), n + 1);
  }
  EXPECT_THROW(star_counterexample(2), IllFormed);
}

TEST(Star, CountMatchesBruteForce) {
  for (int n = 3; n <= 4; ++n) {
    const auto s = star_counterexample(n);
    oracle::Digraph star;
    star.vertices = s.star_vertices;
    star.arcs = s.star_arcs;
    EXPECT_EQ(oracle::copies(s.tournament, star), s.count);
    EXPECT_EQ(oracle::copies(complement(s.tournament), star), s.complement_count);
  }
}

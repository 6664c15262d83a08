#include <gtest/gtest.h>

#include "cplc/bench.hpp"
#include "cplc/error.hpp"
#include "cplc/metrics.hpp"
#include "cplc/towns.hpp"
#include "test_support.hpp"

namespace cplc {
namespace {

using testing::karate;
using testing::node;

std::vector<std::string> centres(const CplcResult& r) {
  std::vector<std::string> out;
  for (const Town& t : r.towns) out.push_back(karate().label(t.centre));
  return out;
}

void expect_structural_invariants(const LinkSet& community, const CplcResult& r) {
  LinkSet covered(community.graph());
  for (const Town& town : r.towns) {
    ASSERT_FALSE(town.body.empty());
    EXPECT_TRUE(testing::brute_connected(town.body));
    EXPECT_TRUE(town.body.is_subset_of(community));
    ASSERT_FALSE(town.star_log.empty());
    EXPECT_EQ(town.star_log.front().kind, AttachmentKind::founder);
    EXPECT_EQ(town.star_log.front().centre, town.centre);
    for (std::size_t i = 1; i < town.star_log.size(); ++i) {
      EXPECT_NE(town.star_log[i].kind, AttachmentKind::founder);
      // Stars attach only to bodies built from stars at least as large.
      EXPECT_GE(town.star_log[i - 1].star_size, town.star_log[i].star_size);
    }
    // Each body link belongs to some logged star.
    for (EdgeId e : town.body.edge_ids()) {
      const Edge& edge = community.graph().edge(e);
      bool found = false;
      for (const StarEntry& s : town.star_log) found = found || s.centre == edge.u || s.centre == edge.v;
      EXPECT_TRUE(found);
    }
    covered.insert_all(town.body);
  }
  EXPECT_EQ(covered, community);
  for (const MergeRecord& m : r.merge_log) {
    for (const TownContact& c : m.contacts) {
      const Fraction overlap = m.relative_overlap(c);
      EXPECT_GE(overlap, 0);
      EXPECT_LE(overlap, 1);
    }
  }
}

TEST(RunCplc, KarateSingleTownAtZero) {
  const CplcResult r = run_cplc(LinkSet::all(karate()), Fraction(0));
  ASSERT_EQ(r.towns.size(), 1u);
  EXPECT_EQ(karate().label(r.towns[0].centre), "34");
  EXPECT_EQ(r.towns[0].body.size(), 78u);
}

TEST(RunCplc, KarateTwoTownsAtOneQuarter) {
  const CplcResult r = run_cplc(LinkSet::all(karate()), Fraction(1, 4));
  EXPECT_EQ(centres(r), (std::vector<std::string>{"34", "1"}));
}

TEST(RunCplc, KarateOverlapAtFourNinths) {
  const Graph& g = karate();
  const CplcResult r = run_cplc(LinkSet::all(g), Fraction(4, 9));
  ASSERT_EQ(centres(r), (std::vector<std::string>{"34", "1"}));
  ASSERT_EQ(r.overlaps.size(), 1u);
  const TownOverlap& o = r.overlaps[0];
  EXPECT_EQ(testing::numeric_pairs(g, o.links), (std::set<std::pair<int, int>>{{3, 9}, {3, 14}, {9, 31}}));
  std::set<std::string> nodes;
  for (NodeId i : o.nodes) nodes.insert(g.label(i));
  EXPECT_EQ(nodes, (std::set<std::string>{"3", "9", "14", "31", "20", "32"}));
  EXPECT_NEAR(normalized_node_cut(r.towns[1].body).psi, 0.1770, 5e-4);
  EXPECT_NEAR(normalized_node_cut(r.towns[0].body).psi, 0.1723, 5e-4);
}

TEST(RunCplc, KarateJustBelowQuarterStaysOneTown) {
  const CplcResult r = run_cplc(LinkSet::all(karate()), Fraction(1, 4) - Fraction(1, 1000));
  EXPECT_EQ(r.towns.size(), 1u);
}

TEST(RunCplc, KarateSplitStarsAreLogged) {
  const Graph& g = karate();
  const CplcResult r = run_cplc(LinkSet::all(g), Fraction(4, 9));
  std::set<std::string> split;
  for (const MergeRecord& m : r.merge_log) {
    if (m.decision == Decision::split) split.insert(g.label(m.centre));
  }
  EXPECT_EQ(split, (std::set<std::string>{"3", "32", "9"}));
}

TEST(RunCplc, SingleStar) {
  const Graph g = testing::star_graph(5);
  const CplcResult r = run_cplc(LinkSet::all(g), Fraction(0));
  ASSERT_EQ(r.towns.size(), 1u);
  EXPECT_EQ(g.label(r.towns[0].centre), "c");
  for (const MergeRecord& m : r.merge_log) EXPECT_EQ(m.decision, Decision::pruned);
}

TEST(RunCplc, TwoStarsJoinedByAPathSeparateAtHighResolution) {
  // Hubs a and b, joined through x; at q = 1/2 b shares 1 of 4 outer nodes.
  const Graph g = parse_edge_list("a 1\na 2\na 3\na x\nb 4\nb 5\nb 6\nb x\n");
  const LinkSet all = LinkSet::all(g);
  EXPECT_EQ(run_cplc(all, Fraction(0)).towns.size(), 1u);
  const CplcResult r = run_cplc(all, Fraction(1, 2));
  ASSERT_EQ(r.towns.size(), 2u);
  EXPECT_TRUE(r.overlaps.empty() || r.overlaps[0].links.empty());
}

TEST(RunCplc, Errors) {
  const Graph g = parse_edge_list("1 2\n2 3\n1 3\n4 5\n5 6\n4 6\n");
  EXPECT_THROW(run_cplc(LinkSet::all(g), Fraction(0)), PreconditionError);
  EXPECT_THROW(run_cplc(LinkSet::all(karate()), Fraction(1)), PreconditionError);
  EXPECT_THROW(run_cplc(LinkSet::all(karate()), Fraction(-1, 2)), PreconditionError);
  EXPECT_THROW(run_cplc(LinkSet(karate()), Fraction(0)), PreconditionError);
}

TEST(RunCplc, DisconnectedMessageListsComponentSizes) {
  const Graph g = parse_edge_list("1 2\n2 3\n1 3\n4 5\n");
  try {
    run_cplc(LinkSet::all(g), Fraction(0));
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("3, 1"), std::string::npos) << e.what();
  }
}

TEST(RunCplc, Deterministic) {
  const LinkSet all = LinkSet::all(karate());
  EXPECT_EQ(run_cplc(all, Fraction(1, 3)), run_cplc(all, Fraction(1, 3)));
  EXPECT_EQ(run_cplc(all, Fraction(1, 3), TieRule::seeded(4)), run_cplc(all, Fraction(1, 3), TieRule::seeded(4)));
}

TEST(RunCplc, InvariantsOnKarateAcrossResolutions) {
  const LinkSet all = LinkSet::all(karate());
  for (int num = 0; num < 20; ++num) {
    const CplcResult r = run_cplc(all, Fraction(num, 20));
    expect_structural_invariants(all, r);
  }
}

TEST(RunCplc, InvariantsOnRandomGraphsAndSubsets) {
  Rng rng(123);
  for (int round = 0; round < 40; ++round) {
    const Graph g = random_connected_graph(20 + uniform_below(rng, 200), round);
    const LinkSet all = LinkSet::all(g);
    const Fraction q(static_cast<std::int64_t>(uniform_below(rng, 10)), 10);
    expect_structural_invariants(all, run_cplc(all, q));
    expect_structural_invariants(all, run_cplc(all, q, TieRule::seeded(round)));
    const LinkSet part = testing::random_connected_subset(all, 1 + uniform_below(rng, g.edge_count()), rng);
    expect_structural_invariants(part, run_cplc(part, q));
  }
}

TEST(RunCplc, OverlapRecordsMatchBodies) {
  const LinkSet all = LinkSet::all(karate());
  const CplcResult r = run_cplc(all, Fraction(1, 4));
  for (const TownOverlap& o : r.overlaps) {
    for (EdgeId e : o.links) {
      EXPECT_TRUE(r.towns[o.first].body.contains(e));
      EXPECT_TRUE(r.towns[o.second].body.contains(e));
    }
    for (NodeId i : o.nodes) {
      EXPECT_TRUE(r.towns[o.first].body.touches(i));
      EXPECT_TRUE(r.towns[o.second].body.touches(i));
    }
  }
}

}  // namespace
}  // namespace cplc

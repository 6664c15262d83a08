#include <gtest/gtest.h>

#include <cmath>

#include "cplc/bench.hpp"
#include "cplc/metrics.hpp"
#include "cplc/sweep.hpp"
#include "test_support.hpp"

namespace cplc {
namespace {

using testing::karate;

TEST(NextThreshold, KarateZeroGivesOneQuarter) {
  const CplcResult r = run_cplc(LinkSet::all(karate()), Fraction(0));
  EXPECT_EQ(next_threshold(r), Fraction(1, 4));
}

TEST(NextThreshold, NoneWhenEveryUnionSharedALink) {
  const Graph g = parse_edge_list("1 2\n2 3\n1 3\n");
  const CplcResult r = run_cplc(LinkSet::all(g), Fraction(0));
  EXPECT_EQ(next_threshold(r), std::nullopt);
}

TEST(NextThreshold, DefinitionOnHandMadeLog) {
  CplcResult r;
  MergeRecord a{1, 9, Decision::united, {{0, 2, false, true}}};
  MergeRecord b{2, 4, Decision::split, {{0, 2, false, true}, {1, 1, true, false}}};
  MergeRecord linked{3, 5, Decision::united, {{0, 1, true, false}}};
  MergeRecord pruned{4, 2, Decision::pruned, {}};
  r.merge_log = {a, b, linked, pruned};
  EXPECT_EQ(next_threshold(r), Fraction(2, 9));
  r.merge_log = {linked, pruned};
  EXPECT_EQ(next_threshold(r), std::nullopt);
}

TEST(Sweep, KarateLevels) {
  const SweepResult s = sweep(LinkSet::all(karate()));
  std::vector<Fraction> qs;
  std::vector<std::size_t> towns;
  for (const auto& l : s.levels) {
    qs.push_back(l.q);
    towns.push_back(l.town_count());
  }
  EXPECT_EQ(qs, (std::vector<Fraction>{Fraction(0), Fraction(1, 4), Fraction(1, 3), Fraction(4, 9)}));
  EXPECT_EQ(towns, (std::vector<std::size_t>{1, 2, 2, 2}));
  EXPECT_TRUE(std::isinf(s.levels[0].level_score));
  EXPECT_EQ(s.selected, 3u);
  const ResolutionLevel& best = s.levels[s.selected];
  EXPECT_EQ(best.overlap_link_count, 3u);
  EXPECT_NEAR(best.level_score, 0.1723, 5e-4);
}

TEST(Sweep, LevelScoresAreWorstTownAndNoWorseThanFullBody) {
  const LinkSet all = LinkSet::all(karate());
  const SweepResult s = sweep(all);
  for (const ResolutionLevel& level : s.levels) {
    double worst = 0;
    for (std::size_t t = 0; t < level.town_count(); ++t) {
      const double psi = level.per_town_psi[t];
      worst = std::max(worst, psi);
      const LinkSet& body = level.result.towns[t].body;
      if (body.size() < all.size()) {
        EXPECT_LE(psi, normalized_node_cut(body, all).psi);
        EXPECT_GE(psi, 0.0);
        EXPECT_LE(psi, 2.0);
      }
    }
    EXPECT_EQ(level.level_score, worst);
  }
}

TEST(Sweep, SingleStarHasOneLevel) {
  const Graph g = testing::star_graph(6);
  const SweepResult s = sweep(LinkSet::all(g));
  ASSERT_EQ(s.levels.size(), 1u);
  EXPECT_EQ(s.levels[0].town_count(), 1u);
  EXPECT_EQ(s.selected, 0u);
}

TEST(Sweep, ThresholdsIncreaseAndCountIsBounded) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_connected_graph(50, seed);
    const LinkSet all = LinkSet::all(g);
    const SweepResult s = sweep(all);
    ASSERT_FALSE(s.levels.empty());
    EXPECT_EQ(s.levels.front().q, Fraction(0));
    for (std::size_t i = 1; i < s.levels.size(); ++i) EXPECT_LT(s.levels[i - 1].q, s.levels[i].q);
    EXPECT_LT(s.levels.back().q, Fraction(1));
    EXPECT_LE(s.levels.size(), s.levels.front().result.merge_log.size() + 1);
  }
}

TEST(Sweep, DeterministicAndJobIndependent) {
  const Graph g = random_connected_graph(150, 9);
  const LinkSet all = LinkSet::all(g);
  const SweepResult a = sweep(all);
  const SweepResult b = sweep(all, {TieRule{}, 4});
  ASSERT_EQ(a.levels.size(), b.levels.size());
  EXPECT_EQ(a.selected, b.selected);
  for (std::size_t i = 0; i < a.levels.size(); ++i) {
    EXPECT_EQ(a.levels[i].result, b.levels[i].result);
    EXPECT_EQ(a.levels[i].per_town_psi, b.levels[i].per_town_psi);
  }
}

TEST(Sweep, ScoresTownsWithinTheCommunity) {
  // A sub-community of karate: Psi is evaluated with E = the community.
  const Graph& g = karate();
  const LinkSet community = testing::links_of(
      g, {{"1", "2"}, {"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}, {"3", "4"}, {"4", "8"}, {"8", "2"},
          {"34", "9"}, {"9", "3"}, {"34", "10"}, {"34", "15"}, {"34", "16"}, {"33", "34"}, {"33", "15"}});
  const SweepResult s = sweep(community);
  for (const ResolutionLevel& level : s.levels) {
    for (std::size_t t = 0; t < level.town_count(); ++t) {
      const LinkSet& body = level.result.towns[t].body;
      if (body.size() == community.size()) {
        EXPECT_TRUE(std::isinf(level.per_town_psi[t]));
      } else {
        EXPECT_LE(level.per_town_psi[t], normalized_node_cut(body, community).psi);
      }
    }
  }
}

ResolutionLevel fake_level(Fraction q, double score, std::size_t towns, std::size_t overlap) {
  ResolutionLevel l;
  l.q = q;
  l.level_score = score;
  l.overlap_link_count = overlap;
  l.result.towns.resize(towns);
  return l;
}

TEST(SelectLevel, LowestScoreWins) {
  std::vector<ResolutionLevel> levels{fake_level(0, INFINITY, 1, 0), fake_level(Fraction(1, 4), 0.3, 2, 5),
                                      fake_level(Fraction(1, 2), 0.2, 3, 9)};
  EXPECT_EQ(select_level(levels), 2u);
}

TEST(SelectLevel, SingleLevel) {
  std::vector<ResolutionLevel> levels{fake_level(0, INFINITY, 1, 0)};
  EXPECT_EQ(select_level(levels), 0u);
}

TEST(SelectLevel, TieBrokenByOverlapThenLowestQ) {
  std::vector<ResolutionLevel> levels{fake_level(Fraction(1, 5), 0.25, 2, 5), fake_level(Fraction(1, 3), 0.25, 2, 2),
                                      fake_level(Fraction(1, 2), 0.25, 2, 2)};
  EXPECT_EQ(select_level(levels), 1u);
  // Different town counts are not a tie: the earlier level stays.
  std::vector<ResolutionLevel> other{fake_level(Fraction(1, 5), 0.25, 2, 5), fake_level(Fraction(1, 3), 0.25, 3, 2)};
  EXPECT_EQ(select_level(other), 0u);
}

}  // namespace
}  // namespace cplc

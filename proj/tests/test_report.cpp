#include <gtest/gtest.h>

#include <regex>
#include <sstream>

#include "cplc/error.hpp"
#include "cplc/report.hpp"
#include "test_support.hpp"

namespace cplc {
namespace {

using testing::karate;

ResultDocument karate_sweep_document(bool verbose) {
  const Graph& g = karate();
  ResultDocument doc;
  doc.command = "towns";
  doc.nodes = g.node_count();
  doc.edges = g.edge_count();
  doc.parameters = {{"mode", "sweep"}};
  doc.components.push_back(make_component_record(g, sweep(LinkSet::all(g)), verbose));
  return doc;
}

std::size_t count_matches(const std::string& text, const std::regex& re) {
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), {}));
}

TEST(ResultDocument, RoundTripIsByteIdentical) {
  for (bool verbose : {false, true}) {
    const ResultDocument doc = karate_sweep_document(verbose);
    const std::string text = serialize(doc);
    const ResultDocument back = parse_document(text);
    EXPECT_EQ(back, doc);
    EXPECT_EQ(serialize(back), text);
  }
}

TEST(ResultDocument, SelectedLevelContents) {
  const ResultDocument doc = karate_sweep_document(false);
  const ComponentRecord& c = doc.components.at(0);
  ASSERT_EQ(c.selected, 3u);
  const LevelRecord& l = c.levels[3];
  EXPECT_EQ(l.q, Fraction(4, 9));
  ASSERT_EQ(l.towns.size(), 2u);
  EXPECT_EQ(l.towns[0].centre, "34");
  EXPECT_EQ(l.towns[1].centre, "1");
  ASSERT_EQ(l.overlaps.size(), 1u);
  EXPECT_EQ(l.overlaps[0].links.size(), 3u);
  EXPECT_FALSE(c.levels[0].level_score.has_value());
  EXPECT_FALSE(c.levels[0].towns[0].psi.has_value());
}

TEST(ResultDocument, MalformedInput) {
  EXPECT_THROW(parse_document("{"), ParseError);
  EXPECT_THROW(parse_document("{\"command\": 3}"), ValidationError);
}

TEST(Metrics, CliqueJson) {
  const Graph g = testing::clique(4);
  const Json m = link_set_metrics(LinkSet::all(g));
  EXPECT_EQ(m.at("pair_connectedness").get<std::uint64_t>(), 24u);
  EXPECT_DOUBLE_EQ(m.at("connectedness_density").get<double>(), 0.8);
  EXPECT_FALSE(m.at("is_star").get<bool>());
  // L = E: Psi is undefined, reported as null plus a reason.
  EXPECT_TRUE(m.at("psi").is_null());
  EXPECT_TRUE(m.contains("psi_error"));
}

TEST(Metrics, StarOf34) {
  const Json m = link_set_metrics(testing::star_links(karate(), "34"));
  EXPECT_DOUBLE_EQ(m.at("connectedness_density").get<double>(), 1.0);
  EXPECT_TRUE(m.at("is_star").get<bool>());
  EXPECT_TRUE(m.at("psi").is_number());
}

TEST(Metrics, NodeSetJson) {
  const Graph g = testing::clique_with_tail();
  const Json m = node_set_metrics(testing::nodes_of(g, {"1", "2", "3", "4"}));
  EXPECT_EQ(m.at("k_in").get<std::uint64_t>(), 12u);
  EXPECT_EQ(m.at("k_out").get<std::uint64_t>(), 1u);
  EXPECT_NEAR(m.at("escape_probability").get<double>(), 1.0 / 13.0, 1e-12);
  EXPECT_TRUE(m.at("weak_community").get<bool>());
}

TEST(Community, LoadsListedEdgesInEitherOrientation) {
  std::istringstream in("# comment\n34 9\n1 2\n\n");
  const LinkSet l = load_community(karate(), in);
  EXPECT_EQ(l.size(), 2u);
  EXPECT_TRUE(l.contains(testing::edge(karate(), "9", "34")));
}

TEST(Community, RejectsEdgeNotInGraph) {
  std::istringstream in("1 34\n");
  try {
    load_community(karate(), in);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("34"), std::string::npos);
  }
}

TEST(ExportDot, KarateSelectedLevel) {
  const ResultDocument doc = karate_sweep_document(false);
  const std::string dot = export_dot(karate(), doc);
  EXPECT_EQ(dot.rfind("graph towns {", 0), 0u);
  EXPECT_EQ(count_matches(dot, std::regex(R"( -- )")), 78u);
  EXPECT_EQ(count_matches(dot, std::regex(R"(color="#ff[0-9a-f]{2}00")")), 78u);
  EXPECT_EQ(count_matches(dot, std::regex(R"(towns="0,1")")), 3u);
  EXPECT_EQ(count_matches(dot, std::regex(R"(town_centre=)")), 2u);
  // The largest star (centre 34) is drawn in pure red.
  EXPECT_NE(dot.find(R"("9" -- "34" [color="#ff0000")"), std::string::npos) << dot.substr(0, 400);
}

TEST(ExportDot, SingleStarIsOneColour) {
  const Graph g = testing::star_graph(4);
  ResultDocument doc;
  doc.command = "towns";
  doc.components.push_back(make_component_record(g, sweep(LinkSet::all(g)), false));
  const std::string dot = export_dot(g, doc);
  EXPECT_EQ(count_matches(dot, std::regex(R"(color="#ff0000")")), 4u);
}

TEST(ExportDot, CommunityNeighboursAreGray) {
  const Graph& g = karate();
  const LinkSet star = testing::star_links(g, "1");
  ResultDocument doc;
  doc.command = "towns";
  doc.components.push_back(make_component_record(g, sweep(star), false));
  const std::string dot = export_dot(g, doc);
  EXPECT_EQ(count_matches(dot, std::regex(R"(color="#ff)")), 16u);
  // Every non-community link touching a node of the star is drawn gray.
  const NodeSet touched = NodeSet::touched_by(star);
  std::size_t neighbours = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!star.contains(e) && (touched.contains(g.edge(e).u) || touched.contains(g.edge(e).v))) ++neighbours;
  }
  EXPECT_EQ(count_matches(dot, std::regex(R"(color="gray")")), neighbours);
}

TEST(ExportDot, Errors) {
  const ResultDocument doc = karate_sweep_document(false);
  EXPECT_THROW(export_dot(karate(), doc, 0, 99), PreconditionError);
  EXPECT_THROW(export_dot(karate(), doc, 5), PreconditionError);
  ResultDocument empty = doc;
  empty.components[0].levels.clear();
  EXPECT_THROW(export_dot(karate(), empty), PreconditionError);
}

TEST(RenderText, MentionsSelectedTowns) {
  const std::string text = render_text(karate_sweep_document(false));
  EXPECT_NE(text.find("4/9"), std::string::npos);
  EXPECT_NE(text.find("34"), std::string::npos);
}

}  // namespace
}  // namespace cplc

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cplc/fraction.hpp"
#include "cplc/graph.hpp"
#include "cplc/sweep.hpp"

namespace cplc {

using Json = nlohmann::ordered_json;

/// Endpoints by original label, canonical order.
using LabelPair = std::array<std::string, 2>;

struct TownRecord {
  std::string centre;
  std::optional<double> psi;  // null when the town is the whole community
  std::vector<std::string> star_centres;
  std::vector<LabelPair> links;

  friend bool operator==(const TownRecord&, const TownRecord&) = default;
};

struct OverlapRecord {
  std::size_t first = 0;
  std::size_t second = 0;
  std::vector<LabelPair> links;
  std::vector<std::string> nodes;

  friend bool operator==(const OverlapRecord&, const OverlapRecord&) = default;
};

struct ContactRecord {
  std::size_t town = 0;
  std::uint32_t shared_outer = 0;
  bool shares_link = false;
  bool passes_resolution = false;

  friend bool operator==(const ContactRecord&, const ContactRecord&) = default;
};

struct MergeLogRecord {
  std::string centre;
  std::uint32_t star_size = 0;
  std::string decision;
  std::vector<ContactRecord> contacts;

  friend bool operator==(const MergeLogRecord&, const MergeLogRecord&) = default;
};

struct LevelRecord {
  Fraction q{0};
  std::optional<double> level_score;  // null for +inf (single-town levels)
  std::size_t overlap_link_count = 0;
  std::vector<TownRecord> towns;
  std::vector<OverlapRecord> overlaps;
  std::optional<std::vector<MergeLogRecord>> merge_log;  // only with --verbose

  friend bool operator==(const LevelRecord&, const LevelRecord&) = default;
};

struct ComponentRecord {
  std::size_t links = 0;
  std::vector<LevelRecord> levels;
  std::optional<std::size_t> selected;  // set in sweep mode

  friend bool operator==(const ComponentRecord&, const ComponentRecord&) = default;
};

/// Everything one CLI invocation reports. Serialises to indented JSON.
struct ResultDocument {
  std::string command;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  Json parameters = Json::object();
  Json metrics;  // metrics command only
  std::vector<ComponentRecord> components;
  std::optional<double> elapsed_seconds;

  friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

LevelRecord make_level_record(const Graph& graph, const ResolutionLevel& level, bool verbose);
ComponentRecord make_component_record(const Graph& graph, const SweepResult& sweep, bool verbose);

/// Every applicable measure; inapplicable ones are null with an "*_error" entry.
Json link_set_metrics(const LinkSet& links);
Json node_set_metrics(const NodeSet& nodes);

Json to_json(const ResultDocument& doc);
ResultDocument document_from_json(const Json& json);
std::string serialize(const ResultDocument& doc);
ResultDocument parse_document(std::string_view text);

/// Short human-readable summary.
std::string render_text(const ResultDocument& doc);

/// Link set of a community file: every line must be an edge of `graph`.
LinkSet load_community(const Graph& graph, std::istream& in);
LinkSet load_community_file(const Graph& graph, const std::filesystem::path& path);
/// Whitespace-separated node labels; '#' starts a comment line.
NodeSet load_node_set_file(const Graph& graph, const std::filesystem::path& path);

/// DOT rendering of one level: community links coloured red (largest star) to
/// yellow (smallest star) by the largest star containing them, neighbouring
/// non-community links gray, town membership in a `towns` attribute.
/// `level` defaults to the selected level, or the only one.
std::string export_dot(const Graph& graph, const ResultDocument& doc, std::size_t component = 0,
                       std::optional<std::size_t> level = {});

}  // namespace cplc

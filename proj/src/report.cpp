#include "cplc/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "cplc/error.hpp"
#include "cplc/metrics.hpp"

namespace cplc {

namespace {

LabelPair label_pair(const Graph& g, EdgeId e) {
  const Edge& edge = g.edge(e);
  return {g.label(edge.u), g.label(edge.v)};
}

std::vector<LabelPair> label_pairs(const Graph& g, const std::vector<EdgeId>& edges) {
  std::vector<LabelPair> out;
  out.reserve(edges.size());
  for (EdgeId e : edges) out.push_back(label_pair(g, e));
  return out;
}

std::optional<double> finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return std::nullopt;
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<double> number_or_null(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

}  // namespace

LevelRecord make_level_record(const Graph& graph, const ResolutionLevel& level, bool verbose) {
  LevelRecord rec;
  rec.q = level.q;
  rec.level_score = finite_or_null(level.level_score);
  rec.overlap_link_count = level.overlap_link_count;
  const CplcResult& result = level.result;
  for (std::size_t t = 0; t < result.towns.size(); ++t) {
    const Town& town = result.towns[t];
    TownRecord tr;
    tr.centre = graph.label(town.centre);
    tr.psi = t < level.per_town_psi.size() ? finite_or_null(level.per_town_psi[t]) : std::nullopt;
    for (const StarEntry& s : town.star_log) tr.star_centres.push_back(graph.label(s.centre));
    tr.links = label_pairs(graph, town.body.edge_ids());
    rec.towns.push_back(std::move(tr));
  }
  for (const TownOverlap& o : result.overlaps) {
    OverlapRecord orec{o.first, o.second, label_pairs(graph, o.links), {}};
    for (NodeId i : o.nodes) orec.nodes.push_back(graph.label(i));
    rec.overlaps.push_back(std::move(orec));
  }
  if (verbose) {
    std::vector<MergeLogRecord> log;
    for (const MergeRecord& m : result.merge_log) {
      MergeLogRecord lr{graph.label(m.centre), m.star_size, to_string(m.decision), {}};
      for (const TownContact& c : m.contacts) {
        lr.contacts.push_back({c.town, c.shared_outer, c.shares_link, c.passes_resolution});
      }
      log.push_back(std::move(lr));
    }
    rec.merge_log = std::move(log);
  }
  return rec;
}

ComponentRecord make_component_record(const Graph& graph, const SweepResult& sweep, bool verbose) {
  ComponentRecord rec;
  if (!sweep.levels.empty() && !sweep.levels.front().result.towns.empty()) {
    const auto& towns = sweep.levels.front().result.towns;
    LinkSet all(graph);
    for (const Town& t : towns) all.insert_all(t.body);
    rec.links = all.size();
  }
  for (const ResolutionLevel& level : sweep.levels) rec.levels.push_back(make_level_record(graph, level, verbose));
  rec.selected = sweep.selected;
  return rec;
}

// ---------------------------------------------------------------------------

namespace {

template <typename F>
void guarded(Json& out, const char* key, F&& compute) {
  try {
    out[key] = compute();
  } catch (const PreconditionError& e) {
    out[key] = nullptr;
    out[std::string(key) + "_error"] = e.what();
  }
}

}  // namespace

Json link_set_metrics(const LinkSet& links) {
  Json m;
  m["kind"] = "links";
  m["size"] = links.size();
  m["internal_degree_total"] = links.internal_degree_total();
  m["pair_connectedness"] = pair_connectedness(links);
  guarded(m, "connectedness_density", [&] { return connectedness_density(links); });
  m["is_star"] = is_star(links);
  m["sigma"] = sigma(links);
  guarded(m, "escape_probability", [&] { return escape_probability_links(links); });
  guarded(m, "psi", [&] { return normalized_node_cut(links).psi; });
  return m;
}

Json node_set_metrics(const NodeSet& nodes) {
  const NodeSetVolumes v = node_set_volumes(nodes);
  Json m;
  m["kind"] = "nodes";
  m["size"] = nodes.size();
  m["k_in"] = v.internal;
  m["k_out"] = v.external;
  m["volume"] = v.volume;
  guarded(m, "persistence_probability", [&] { return persistence_probability(nodes); });
  guarded(m, "escape_probability", [&] { return escape_probability_nodes(nodes); });
  m["weak_community"] = weak_community_check(nodes);
  guarded(m, "conductance", [&] { return conductance(nodes); });
  guarded(m, "normalized_cut", [&] { return normalized_cut(nodes); });
  return m;
}

// ---------------------------------------------------------------------------

namespace {

Json pairs_json(const std::vector<LabelPair>& pairs) {
  Json arr = Json::array();
  for (const LabelPair& p : pairs) arr.push_back(Json::array({p[0], p[1]}));
  return arr;
}

std::vector<LabelPair> pairs_from(const Json& arr) {
  std::vector<LabelPair> out;
  for (const Json& p : arr) out.push_back({p.at(0).get<std::string>(), p.at(1).get<std::string>()});
  return out;
}

Json level_json(const LevelRecord& l) {
  Json j;
  j["q"] = to_string(l.q);
  j["q_decimal"] = to_double(l.q);
  j["town_count"] = l.towns.size();
  j["level_score"] = optional_number(l.level_score);
  j["overlap_link_count"] = l.overlap_link_count;
  Json towns = Json::array();
  for (const TownRecord& t : l.towns) {
    Json tj;
    tj["centre"] = t.centre;
    tj["psi"] = optional_number(t.psi);
    tj["size"] = t.links.size();
    tj["star_centres"] = t.star_centres;
    tj["links"] = pairs_json(t.links);
    towns.push_back(std::move(tj));
  }
  j["towns"] = std::move(towns);
  Json overlaps = Json::array();
  for (const OverlapRecord& o : l.overlaps) {
    Json oj;
    oj["towns"] = Json::array({o.first, o.second});
    oj["links"] = pairs_json(o.links);
    oj["nodes"] = o.nodes;
    overlaps.push_back(std::move(oj));
  }
  j["overlaps"] = std::move(overlaps);
  if (l.merge_log) {
    Json log = Json::array();
    for (const MergeLogRecord& m : *l.merge_log) {
      Json mj;
      mj["centre"] = m.centre;
      mj["star_size"] = m.star_size;
      mj["decision"] = m.decision;
      Json contacts = Json::array();
      for (const ContactRecord& c : m.contacts) {
        Json cj;
        cj["town"] = c.town;
        cj["shared_outer"] = c.shared_outer;
        cj["relative_overlap"] = to_string(Fraction(c.shared_outer, std::max<std::uint32_t>(m.star_size, 1)));
        cj["shares_link"] = c.shares_link;
        cj["passes_resolution"] = c.passes_resolution;
        contacts.push_back(std::move(cj));
      }
      mj["contacts"] = std::move(contacts);
      log.push_back(std::move(mj));
    }
    j["merge_log"] = std::move(log);
  }
  return j;
}

LevelRecord level_from(const Json& j) {
  LevelRecord l;
  l.q = parse_fraction(j.at("q").get<std::string>());
  l.level_score = number_or_null(j.at("level_score"));
  l.overlap_link_count = j.at("overlap_link_count").get<std::size_t>();
  for (const Json& tj : j.at("towns")) {
    TownRecord t;
    t.centre = tj.at("centre").get<std::string>();
    t.psi = number_or_null(tj.at("psi"));
    t.star_centres = tj.at("star_centres").get<std::vector<std::string>>();
    t.links = pairs_from(tj.at("links"));
    l.towns.push_back(std::move(t));
  }
  for (const Json& oj : j.at("overlaps")) {
    OverlapRecord o;
    o.first = oj.at("towns").at(0).get<std::size_t>();
    o.second = oj.at("towns").at(1).get<std::size_t>();
    o.links = pairs_from(oj.at("links"));
    o.nodes = oj.at("nodes").get<std::vector<std::string>>();
    l.overlaps.push_back(std::move(o));
  }
  if (j.contains("merge_log")) {
    std::vector<MergeLogRecord> log;
    for (const Json& mj : j.at("merge_log")) {
      MergeLogRecord m;
      m.centre = mj.at("centre").get<std::string>();
      m.star_size = mj.at("star_size").get<std::uint32_t>();
      m.decision = mj.at("decision").get<std::string>();
      for (const Json& cj : mj.at("contacts")) {
        m.contacts.push_back({cj.at("town").get<std::size_t>(), cj.at("shared_outer").get<std::uint32_t>(),
                              cj.at("shares_link").get<bool>(), cj.at("passes_resolution").get<bool>()});
      }
      log.push_back(std::move(m));
    }
    l.merge_log = std::move(log);
  }
  return l;
}

}  // namespace

Json to_json(const ResultDocument& doc) {
  Json j;
  j["command"] = doc.command;
  j["graph"] = {{"nodes", doc.nodes}, {"edges", doc.edges}};
  j["parameters"] = doc.parameters;
  if (!doc.metrics.is_null()) j["metrics"] = doc.metrics;
  if (!doc.components.empty()) {
    Json comps = Json::array();
    for (const ComponentRecord& c : doc.components) {
      Json cj;
      cj["links"] = c.links;
      cj["selected"] = c.selected ? Json(*c.selected) : Json(nullptr);
      Json levels = Json::array();
      for (const LevelRecord& l : c.levels) levels.push_back(level_json(l));
      cj["levels"] = std::move(levels);
      comps.push_back(std::move(cj));
    }
    j["components"] = std::move(comps);
  }
  if (doc.elapsed_seconds) j["elapsed_seconds"] = *doc.elapsed_seconds;
  return j;
}

ResultDocument document_from_json(const Json& j) {
  try {
    ResultDocument doc;
    doc.command = j.at("command").get<std::string>();
    doc.nodes = j.at("graph").at("nodes").get<std::size_t>();
    doc.edges = j.at("graph").at("edges").get<std::size_t>();
    doc.parameters = j.at("parameters");
    if (j.contains("metrics")) doc.metrics = j.at("metrics");
    if (j.contains("components")) {
      for (const Json& cj : j.at("components")) {
        ComponentRecord c;
        c.links = cj.at("links").get<std::size_t>();
        if (!cj.at("selected").is_null()) c.selected = cj.at("selected").get<std::size_t>();
        for (const Json& lj : cj.at("levels")) c.levels.push_back(level_from(lj));
        doc.components.push_back(std::move(c));
      }
    }
    if (j.contains("elapsed_seconds")) doc.elapsed_seconds = j.at("elapsed_seconds").get<double>();
    return doc;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed result document: ") + e.what());
  }
}

std::string serialize(const ResultDocument& doc) { return to_json(doc).dump(2) + "\n"; }

ResultDocument parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(0, std::string("result document: ") + e.what());
  }
  return document_from_json(j);
}

std::string render_text(const ResultDocument& doc) {
  std::ostringstream out;
  out << doc.command << ": graph with " << doc.nodes << " nodes, " << doc.edges << " edges\n";
  if (!doc.metrics.is_null()) {
    for (const auto& [key, value] : doc.metrics.items()) out << "  " << key << " = " << value.dump() << "\n";
  }
  out << std::setprecision(6);
  for (std::size_t c = 0; c < doc.components.size(); ++c) {
    const ComponentRecord& comp = doc.components[c];
    out << "component " << c << " (" << comp.links << " links)\n";
    for (std::size_t l = 0; l < comp.levels.size(); ++l) {
      const LevelRecord& level = comp.levels[l];
      out << ((comp.selected && *comp.selected == l) ? "* " : "  ") << "q = " << to_string(level.q) << ": "
          << level.towns.size() << " town(s), " << level.overlap_link_count << " overlap link(s), score ";
      if (level.level_score) {
        out << *level.level_score;
      } else {
        out << "-";
      }
      out << "\n";
      for (const TownRecord& t : level.towns) {
        out << "      centre " << t.centre << ": " << t.links.size() << " links, psi ";
        if (t.psi) {
          out << *t.psi;
        } else {
          out << "-";
        }
        out << "\n";
      }
    }
  }
  if (doc.elapsed_seconds) out << "elapsed " << *doc.elapsed_seconds << " s\n";
  return out.str();
}

// ---------------------------------------------------------------------------

LinkSet load_community(const Graph& graph, std::istream& in) {
  LinkSet links(graph);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw ParseError(line_no, "expected two node tokens, got '" + line + "'");
    }
    const auto u = graph.find_node(a);
    const auto v = graph.find_node(b);
    const auto e = (u && v) ? graph.find_edge(*u, *v) : std::nullopt;
    if (!e) throw ValidationError("line " + std::to_string(line_no) + ": edge '" + a + " " + b + "' is not in the graph");
    if (!links.insert(*e)) {
      throw ValidationError("line " + std::to_string(line_no) + ": duplicate edge '" + a + " " + b + "'");
    }
  }
  return links;
}

LinkSet load_community_file(const Graph& graph, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");
  return load_community(graph, in);
}

NodeSet load_node_set_file(const Graph& graph, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");
  NodeSet nodes(graph);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string token;
    while (fields >> token) {
      const auto id = graph.find_node(token);
      if (!id) throw ValidationError("node '" + token + "' is not in the graph");
      nodes.insert(*id);
    }
  }
  return nodes;
}

// ---------------------------------------------------------------------------

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string red_to_yellow(double t) {
  // t = 1 -> red, t = 0 -> yellow
  const int green = static_cast<int>(std::lround(255.0 * (1.0 - std::clamp(t, 0.0, 1.0))));
  std::ostringstream out;
  out << "#ff" << std::hex << std::setw(2) << std::setfill('0') << green << "00";
  return out.str();
}

}  // namespace

std::string export_dot(const Graph& graph, const ResultDocument& doc, std::size_t component,
                       std::optional<std::size_t> level) {
  if (component >= doc.components.size()) {
    throw PreconditionError("component " + std::to_string(component) + " does not exist");
  }
  const ComponentRecord& comp = doc.components[component];
  if (comp.levels.empty()) throw PreconditionError("the result document has no levels");
  const std::size_t index = level ? *level : comp.selected.value_or(0);
  if (index >= comp.levels.size()) {
    throw PreconditionError("level " + std::to_string(index) + " does not exist (" +
                            std::to_string(comp.levels.size()) + " levels)");
  }
  const LevelRecord& rec = comp.levels[index];

  LinkSet community(graph);
  std::map<EdgeId, std::vector<std::size_t>> membership;
  for (std::size_t t = 0; t < rec.towns.size(); ++t) {
    for (const LabelPair& p : rec.towns[t].links) {
      const auto u = graph.find_node(p[0]);
      const auto v = graph.find_node(p[1]);
      const auto e = (u && v) ? graph.find_edge(*u, *v) : std::nullopt;
      if (!e) throw ValidationError("edge '" + p[0] + " " + p[1] + "' of the document is not in the graph");
      community.insert(*e);
      membership[*e].push_back(t);
    }
  }

  auto star_of = [&](EdgeId e) {
    const Edge& edge = graph.edge(e);
    return std::max(community.internal_degree(edge.u), community.internal_degree(edge.v));
  };
  std::uint32_t smallest = UINT32_MAX, largest = 0;
  for (const auto& [e, towns] : membership) {
    smallest = std::min(smallest, star_of(e));
    largest = std::max(largest, star_of(e));
  }

  std::ostringstream out;
  out << "graph towns {\n";
  out << "  // q = " << to_string(rec.q) << ", " << rec.towns.size() << " town(s)\n";
  for (std::size_t t = 0; t < rec.towns.size(); ++t) {
    out << "  " << dot_quote(rec.towns[t].centre) << " [town_centre=" << t << "];\n";
  }
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edge(e);
    const std::string ends = dot_quote(graph.label(edge.u)) + " -- " + dot_quote(graph.label(edge.v));
    if (auto it = membership.find(e); it != membership.end()) {
      const std::uint32_t star = star_of(e);
      const double t = largest == smallest ? 1.0 : double(star - smallest) / double(largest - smallest);
      std::string towns;
      for (std::size_t id : it->second) towns += (towns.empty() ? "" : ",") + std::to_string(id);
      out << "  " << ends << " [color=\"" << red_to_yellow(t) << "\", star=" << star << ", towns=\"" << towns
          << "\"];\n";
    } else if (community.touches(edge.u) || community.touches(edge.v)) {
      out << "  " << ends << " [color=\"gray\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace cplc

#include "cplc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "cplc/error.hpp"
#include "cplc/random.hpp"

namespace cplc {

std::uint64_t Graph::pair_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

Graph::Graph(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  index_.reserve(labels_.size());
  for (NodeId i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw ValidationError("duplicate node label '" + labels_[i] + "'");
    }
  }
  std::vector<std::uint32_t> degree(labels_.size(), 0);
  edge_index_.reserve(edges_.size());
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    Edge& edge = edges_[e];
    if (edge.u >= labels_.size() || edge.v >= labels_.size()) {
      throw ValidationError("edge endpoint out of range");
    }
    if (edge.u == edge.v) throw ValidationError("self-loop at node '" + labels_[edge.u] + "'");
    if (edge.u > edge.v) std::swap(edge.u, edge.v);
    if (!edge_index_.emplace(pair_key(edge.u, edge.v), e).second) {
      throw ValidationError("duplicate edge " + edge_label(e));
    }
    ++degree[edge.u];
    ++degree[edge.v];
  }
  offsets_.assign(labels_.size() + 1, 0);
  std::partial_sum(degree.begin(), degree.end(), offsets_.begin() + 1);
  incidences_.resize(offsets_.back());
  std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    incidences_[cursor[edge.u]++] = {edge.v, e};
    incidences_[cursor[edge.v]++] = {edge.u, e};
  }
}

std::optional<NodeId> Graph::find_node(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Graph::find_edge(NodeId a, NodeId b) const {
  auto it = edge_index_.find(pair_key(a, b));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::string Graph::edge_label(EdgeId id) const {
  const Edge& e = edges_.at(id);
  return labels_[e.u] + " " + labels_[e.v];
}

Graph load_edge_list(std::istream& in) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> index;
  std::vector<Edge> edges;
  std::unordered_map<std::uint64_t, std::size_t> seen;

  auto intern = [&](const std::string& token) {
    auto [it, inserted] = index.emplace(token, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(token);
    return it->second;
  };

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
    if (a == b) throw ValidationError("line " + std::to_string(line_no) + ": self-loop at node '" + a + "'");
    NodeId u = intern(a);
    NodeId v = intern(b);
    if (u > v) std::swap(u, v);
    const std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | v;
    if (auto [it, inserted] = seen.emplace(key, line_no); !inserted) {
      throw ValidationError("line " + std::to_string(line_no) + ": duplicate edge '" + a + " " + b +
                            "' (first on line " + std::to_string(it->second) + ")");
    }
    edges.push_back({u, v});
  }
  return Graph(std::move(labels), std::move(edges));
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_edge_list(in);
}

Graph load_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");
  return load_edge_list(in);
}

// ---------------------------------------------------------------------------

LinkSet::LinkSet(const Graph& graph)
    : graph_(&graph), member_(graph.edge_count(), 0), kin_(graph.node_count(), 0) {}

LinkSet LinkSet::all(const Graph& graph) {
  LinkSet set(graph);
  for (EdgeId e = 0; e < graph.edge_count(); ++e) set.insert(e);
  return set;
}

LinkSet LinkSet::from_edges(const Graph& graph, std::span<const EdgeId> edges) {
  LinkSet set(graph);
  for (EdgeId e : edges) {
    if (e >= graph.edge_count()) throw ValidationError("edge id out of range");
    set.insert(e);
  }
  return set;
}

bool LinkSet::insert(EdgeId e) {
  if (member_[e]) return false;
  member_[e] = 1;
  const Edge& edge = graph_->edge(e);
  ++kin_[edge.u];
  ++kin_[edge.v];
  ++size_;
  return true;
}

bool LinkSet::erase(EdgeId e) {
  if (!member_[e]) return false;
  member_[e] = 0;
  const Edge& edge = graph_->edge(e);
  --kin_[edge.u];
  --kin_[edge.v];
  --size_;
  return true;
}

void LinkSet::insert_all(const LinkSet& other) {
  for (EdgeId e = 0; e < member_.size(); ++e) {
    if (other.member_[e]) insert(e);
  }
}

std::vector<EdgeId> LinkSet::edge_ids() const {
  std::vector<EdgeId> ids;
  ids.reserve(size_);
  for (EdgeId e = 0; e < member_.size(); ++e) {
    if (member_[e]) ids.push_back(e);
  }
  return ids;
}

std::vector<NodeId> LinkSet::node_ids() const {
  std::vector<NodeId> ids;
  for (NodeId i = 0; i < kin_.size(); ++i) {
    if (kin_[i] > 0) ids.push_back(i);
  }
  return ids;
}

LinkSet LinkSet::complement() const { return complement_within(LinkSet::all(*graph_)); }

LinkSet LinkSet::complement_within(const LinkSet& context) const {
  LinkSet out(*graph_);
  for (EdgeId e = 0; e < member_.size(); ++e) {
    if (context.member_[e] && !member_[e]) out.insert(e);
  }
  return out;
}

LinkSet LinkSet::difference(const LinkSet& other) const { return other.complement_within(*this); }

bool LinkSet::is_subset_of(const LinkSet& other) const {
  for (EdgeId e = 0; e < member_.size(); ++e) {
    if (member_[e] && !other.member_[e]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

NodeSet::NodeSet(const Graph& graph) : graph_(&graph), member_(graph.node_count(), 0) {}

NodeSet NodeSet::from_nodes(const Graph& graph, std::span<const NodeId> nodes) {
  NodeSet set(graph);
  for (NodeId i : nodes) {
    if (i >= graph.node_count()) throw ValidationError("node id out of range");
    set.insert(i);
  }
  return set;
}

NodeSet NodeSet::touched_by(const LinkSet& links) {
  NodeSet set(links.graph());
  for (NodeId i = 0; i < links.graph().node_count(); ++i) {
    if (links.touches(i)) set.insert(i);
  }
  return set;
}

bool NodeSet::insert(NodeId node) {
  if (member_[node]) return false;
  member_[node] = 1;
  ++size_;
  return true;
}

std::vector<NodeId> NodeSet::node_ids() const {
  std::vector<NodeId> ids;
  ids.reserve(size_);
  for (NodeId i = 0; i < member_.size(); ++i) {
    if (member_[i]) ids.push_back(i);
  }
  return ids;
}

NodeSet NodeSet::complement() const {
  NodeSet out(*graph_);
  for (NodeId i = 0; i < member_.size(); ++i) {
    if (!member_[i]) out.insert(i);
  }
  return out;
}

// ---------------------------------------------------------------------------

Star make_star(const LinkSet& links, NodeId centre) {
  Star star;
  star.centre = centre;
  for (const Incidence& inc : links.graph().incident(centre)) {
    if (links.contains(inc.edge)) {
      star.links.push_back(inc.edge);
      star.outer_nodes.push_back(inc.neighbor);
    }
  }
  return star;
}

std::vector<Star> enumerate_stars(const LinkSet& links, std::optional<std::uint64_t> seed) {
  if (links.empty()) throw PreconditionError("cannot enumerate stars of an empty link set");
  std::vector<NodeId> centres = links.node_ids();
  if (seed) {
    Rng rng(*seed);
    shuffle(std::span(centres), rng);
    std::stable_sort(centres.begin(), centres.end(), [&](NodeId a, NodeId b) {
      return links.internal_degree(a) > links.internal_degree(b);
    });
  } else {
    std::stable_sort(centres.begin(), centres.end(), [&](NodeId a, NodeId b) {
      return links.internal_degree(a) > links.internal_degree(b);
    });
  }
  std::vector<Star> stars;
  stars.reserve(centres.size());
  for (NodeId c : centres) stars.push_back(make_star(links, c));
  return stars;
}

std::vector<LinkSet> connected_components(const LinkSet& links) {
  const Graph& g = links.graph();
  std::vector<std::uint8_t> visited(g.edge_count(), 0);
  std::vector<LinkSet> components;
  std::vector<EdgeId> stack;
  for (EdgeId seed = 0; seed < g.edge_count(); ++seed) {
    if (!links.contains(seed) || visited[seed]) continue;
    LinkSet component(g);
    visited[seed] = 1;
    stack.push_back(seed);
    while (!stack.empty()) {
      const EdgeId e = stack.back();
      stack.pop_back();
      component.insert(e);
      for (NodeId end : {g.edge(e).u, g.edge(e).v}) {
        for (const Incidence& inc : g.incident(end)) {
          if (links.contains(inc.edge) && !visited[inc.edge]) {
            visited[inc.edge] = 1;
            stack.push_back(inc.edge);
          }
        }
      }
    }
    components.push_back(std::move(component));
  }
  return components;
}

bool is_link_connected(const LinkSet& links) {
  return !links.empty() && connected_components(links).size() == 1;
}

}  // namespace cplc

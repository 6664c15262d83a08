#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cplc {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Undirected edge in canonical form (u < v by node index).
struct Edge {
  NodeId u;
  NodeId v;

  NodeId other(NodeId endpoint) const { return endpoint == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  NodeId neighbor;
  EdgeId edge;
};

/// Immutable unweighted, undirected simple graph with dense 0-based indices.
///
/// Node labels are the original tokens of the input; indices follow first
/// appearance. Edges keep their input order. Self-loops and duplicate edges
/// are rejected at construction.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<std::string> labels, std::vector<Edge> edges);

  std::size_t node_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& label(NodeId node) const { return labels_.at(node); }
  std::optional<NodeId> find_node(std::string_view label) const;

  const Edge& edge(EdgeId id) const { return edges_.at(id); }
  std::span<const Edge> edges() const { return edges_; }
  std::optional<EdgeId> find_edge(NodeId a, NodeId b) const;

  std::uint32_t degree(NodeId node) const { return offsets_[node + 1] - offsets_[node]; }
  std::span<const Incidence> incident(NodeId node) const {
    return {incidences_.data() + offsets_[node], degree(node)};
  }

  /// "a b" using original labels, endpoints in canonical order.
  std::string edge_label(EdgeId id) const;

 private:
  static std::uint64_t pair_key(NodeId a, NodeId b);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, EdgeId> edge_index_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<Incidence> incidences_;
};

/// Builds a graph from line-oriented "a b" text. Blank lines and lines
/// starting with '#' are ignored.
Graph load_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph load_edge_list_file(const std::filesystem::path& path);

/// A subset of a graph's edges with per-node internal degrees.
///
/// Holds a non-owning pointer to its graph; the graph must outlive the set.
class LinkSet {
 public:
  LinkSet() = default;
  explicit LinkSet(const Graph& graph);
  explicit LinkSet(Graph&&) = delete;  // would dangle

  static LinkSet all(const Graph& graph);
  static LinkSet all(Graph&&) = delete;
  static LinkSet from_edges(const Graph& graph, std::span<const EdgeId> edges);

  const Graph& graph() const { return *graph_; }

  bool contains(EdgeId e) const { return member_[e] != 0; }
  bool insert(EdgeId e);
  bool erase(EdgeId e);
  void insert_all(const LinkSet& other);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  /// k_i^in(L): number of member edges attached to node i.
  std::uint32_t internal_degree(NodeId node) const { return kin_[node]; }
  /// k_in(L) = sum of internal degrees = 2|L|.
  std::uint64_t internal_degree_total() const { return 2 * static_cast<std::uint64_t>(size_); }
  bool touches(NodeId node) const { return kin_[node] > 0; }

  std::vector<EdgeId> edge_ids() const;
  std::vector<NodeId> node_ids() const;

  /// Edges of the graph (or of `context`) not in this set.
  LinkSet complement() const;
  LinkSet complement_within(const LinkSet& context) const;
  LinkSet difference(const LinkSet& other) const;
  bool is_subset_of(const LinkSet& other) const;

  friend bool operator==(const LinkSet& a, const LinkSet& b) {
    return a.graph_ == b.graph_ && a.member_ == b.member_;
  }

 private:
  const Graph* graph_ = nullptr;
  std::vector<std::uint8_t> member_;
  std::vector<std::uint32_t> kin_;
  std::size_t size_ = 0;
};

/// A subset of a graph's nodes.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(const Graph& graph);
  explicit NodeSet(Graph&&) = delete;

  static NodeSet from_nodes(const Graph& graph, std::span<const NodeId> nodes);
  /// Nodes touched by the link set.
  static NodeSet touched_by(const LinkSet& links);

  const Graph& graph() const { return *graph_; }
  bool contains(NodeId node) const { return member_[node] != 0; }
  bool insert(NodeId node);
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::vector<NodeId> node_ids() const;
  NodeSet complement() const;

 private:
  const Graph* graph_ = nullptr;
  std::vector<std::uint8_t> member_;
  std::size_t size_ = 0;
};

/// A centre node with its incident links restricted to a reference link set.
struct Star {
  NodeId centre = 0;
  std::vector<EdgeId> links;
  std::vector<NodeId> outer_nodes;

  std::size_t size() const { return links.size(); }
};

Star make_star(const LinkSet& links, NodeId centre);

/// One star per node touched by `links`, largest first. Equal sizes are
/// ordered by ascending node index, or shuffled when a seed is given.
std::vector<Star> enumerate_stars(const LinkSet& links, std::optional<std::uint64_t> seed = {});

/// Partition into link-connected parts (edges sharing a node are connected),
/// ordered by their smallest edge id.
std::vector<LinkSet> connected_components(const LinkSet& links);
bool is_link_connected(const LinkSet& links);

}  // namespace cplc

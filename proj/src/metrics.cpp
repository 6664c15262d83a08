#include "cplc/metrics.hpp"

#include <algorithm>
#include <map>

#include "cplc/error.hpp"

namespace cplc {

std::uint64_t pair_connectedness(const LinkSet& links) {
  std::uint64_t total = 0;
  for (NodeId i = 0; i < links.graph().node_count(); ++i) {
    const std::uint64_t k = links.internal_degree(i);
    if (k > 1) total += k * (k - 1);
  }
  return total;
}

double connectedness_density(const LinkSet& links) {
  const std::uint64_t size = links.size();
  if (size < 2) throw UndefinedMeasure("connectedness density needs at least two links");
  return static_cast<double>(pair_connectedness(links)) / static_cast<double>(size * (size - 1));
}

bool is_star(const LinkSet& links) {
  if (links.empty()) return false;
  for (NodeId i = 0; i < links.graph().node_count(); ++i) {
    if (links.internal_degree(i) == links.size()) return true;
  }
  return false;
}

NodeSetVolumes node_set_volumes(const NodeSet& nodes) {
  const Graph& g = nodes.graph();
  NodeSetVolumes v;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    if (!nodes.contains(i)) {
      v.complement_volume += g.degree(i);
      continue;
    }
    for (const Incidence& inc : g.incident(i)) {
      if (nodes.contains(inc.neighbor)) {
        ++v.internal;
      } else {
        ++v.external;
      }
    }
  }
  v.volume = v.internal + v.external;
  return v;
}

namespace {

NodeSetVolumes checked_volumes(const NodeSet& nodes) {
  if (nodes.empty()) throw PreconditionError("node set is empty");
  NodeSetVolumes v = node_set_volumes(nodes);
  if (v.volume == 0) throw PreconditionError("node set has no incident links");
  return v;
}

NodeSetVolumes checked_cut_volumes(const NodeSet& nodes) {
  if (nodes.size() == nodes.graph().node_count()) {
    throw PreconditionError("cut measures need a proper subset of the nodes");
  }
  NodeSetVolumes v = checked_volumes(nodes);
  if (v.complement_volume == 0) throw PreconditionError("complement has no incident links");
  return v;
}

}  // namespace

double persistence_probability(const NodeSet& nodes) {
  const NodeSetVolumes v = checked_volumes(nodes);
  return static_cast<double>(v.internal) / static_cast<double>(v.volume);
}

double escape_probability_nodes(const NodeSet& nodes) {
  const NodeSetVolumes v = checked_volumes(nodes);
  return static_cast<double>(v.external) / static_cast<double>(v.volume);
}

bool weak_community_check(const NodeSet& nodes) {
  const NodeSetVolumes v = node_set_volumes(nodes);
  return v.internal > v.external;
}

double conductance(const NodeSet& nodes) {
  const NodeSetVolumes v = checked_cut_volumes(nodes);
  return static_cast<double>(v.external) /
         static_cast<double>(std::min(v.volume, v.complement_volume));
}

double normalized_cut(const NodeSet& nodes) {
  const NodeSetVolumes v = checked_cut_volumes(nodes);
  const double cut = static_cast<double>(v.external);
  return cut / static_cast<double>(v.volume) + cut / static_cast<double>(v.complement_volume);
}

namespace {

template <typename DegreeOf>
double grouped_sigma(const LinkSet& links, DegreeOf degree_of) {
  // Exact integer numerator per distinct degree, one division per group.
  std::map<std::uint32_t, std::uint64_t> numerators;
  for (NodeId i = 0; i < links.graph().node_count(); ++i) {
    const std::uint64_t kin = links.internal_degree(i);
    if (kin == 0) continue;
    const std::uint32_t k = degree_of(i);
    if (kin > k) throw PreconditionError("link set is not contained in its context");
    if (kin == k) continue;
    numerators[k] += kin * (k - kin);
  }
  double total = 0;
  for (const auto& [k, num] : numerators) total += static_cast<double>(num) / k;
  return total;
}

}  // namespace

double sigma(const LinkSet& links) {
  const Graph& g = links.graph();
  return grouped_sigma(links, [&](NodeId i) { return g.degree(i); });
}

double sigma(const LinkSet& links, const LinkSet& context) {
  return grouped_sigma(links, [&](NodeId i) { return context.internal_degree(i); });
}

SeparationReport normalized_node_cut(const LinkSet& links, const LinkSet& context) {
  if (links.empty()) throw PreconditionError("normalised node-cut of an empty link set");
  if (!links.is_subset_of(context)) throw PreconditionError("link set is not contained in its context");
  if (links.size() == context.size()) {
    throw PreconditionError("normalised node-cut is undefined when the link set is the whole context");
  }
  SeparationReport r;
  r.sigma = sigma(links, context);
  r.kin = links.internal_degree_total();
  r.kin_complement = context.internal_degree_total() - r.kin;
  r.esc_links = r.sigma / static_cast<double>(r.kin);
  r.esc_complement = r.sigma / static_cast<double>(r.kin_complement);
  r.psi = r.esc_links + r.esc_complement;
  return r;
}

SeparationReport normalized_node_cut(const LinkSet& links) {
  return normalized_node_cut(links, LinkSet::all(links.graph()));
}

double escape_probability_links(const LinkSet& links) {
  if (links.empty()) throw PreconditionError("escape probability of an empty link set");
  return sigma(links) / static_cast<double>(links.internal_degree_total());
}

}  // namespace cplc

#pragma once

#include <cstdint>

#include "cplc/graph.hpp"

namespace cplc {

// Cohesion of link sets ------------------------------------------------------

/// N(L): ordered pairs of member links sharing a node, sum_i k_i^in (k_i^in - 1).
std::uint64_t pair_connectedness(const LinkSet& links);

/// D(L) = N(L) / (|L| (|L| - 1)); 1 exactly for stars. Throws UndefinedMeasure
/// for |L| < 2.
double connectedness_density(const LinkSet& links);

bool is_star(const LinkSet& links);

// Separation of node sets ----------------------------------------------------

struct NodeSetVolumes {
  std::uint64_t internal = 0;   // k_in(C), each internal edge counted from both ends
  std::uint64_t external = 0;   // k_out(C), edges leaving C
  std::uint64_t volume = 0;     // k(C) = k_in(C) + k_out(C)
  std::uint64_t complement_volume = 0;  // k(V - C)
};

NodeSetVolumes node_set_volumes(const NodeSet& nodes);

/// P_pers(C) = k_in(C) / k(C).
double persistence_probability(const NodeSet& nodes);
/// P_esc(C) = k_out(C) / k(C).
double escape_probability_nodes(const NodeSet& nodes);
/// Weak community in the sense k_in(C) > k_out(C).
bool weak_community_check(const NodeSet& nodes);
/// k_out(C) / min(k(C), k(V - C)).
double conductance(const NodeSet& nodes);
/// Phi(C) = k_out(C)/k(C) + k_out(C)/k(V - C).
double normalized_cut(const NodeSet& nodes);

// Separation of link sets ----------------------------------------------------

/// Node-cut weight sigma(L) = sum_i k_i^in(L) k_i^out(L) / k_i over the whole graph.
double sigma(const LinkSet& links);

/// sigma(L) taking node degrees inside `context` (k_i := k_i^in(context)).
/// Terms are grouped by degree so that sigma(L) and sigma(context - L) are
/// bit-identical.
double sigma(const LinkSet& links, const LinkSet& context);

struct SeparationReport {
  double sigma = 0;
  std::uint64_t kin = 0;             // k_in(L)
  std::uint64_t kin_complement = 0;  // k_in(E - L) = 2|E| - k_in(L)
  double esc_links = 0;              // sigma / k_in(L)
  double esc_complement = 0;         // sigma / k_in(E - L)
  double psi = 0;                    // esc_links + esc_complement
};

/// Normalised node-cut Psi(L) of L within context E (L a proper non-empty subset).
SeparationReport normalized_node_cut(const LinkSet& links, const LinkSet& context);
SeparationReport normalized_node_cut(const LinkSet& links);

/// P_esc(L) = sigma(L) / k_in(L) of the link-node-link walker.
double escape_probability_links(const LinkSet& links);

}  // namespace cplc

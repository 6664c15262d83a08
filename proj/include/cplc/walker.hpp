#pragma once

#include <cmath>
#include <cstdint>

#include "cplc/graph.hpp"

namespace cplc {

/// Monte Carlo estimate of a one-step escape probability.
struct WalkEstimate {
  std::uint64_t trials = 0;
  std::uint64_t escapes = 0;

  double estimate() const { return trials == 0 ? 0.0 : static_cast<double>(escapes) / trials; }
  double standard_error() const {
    const double p = estimate();
    return trials == 0 ? 0.0 : std::sqrt(p * (1 - p) / static_cast<double>(trials));
  }
  /// |estimate - expected| within `sigmas` standard errors. A zero standard
  /// error only matches an exact hit.
  bool agrees_with(double expected, double sigmas = 3.0) const {
    return std::abs(estimate() - expected) <= sigmas * standard_error();
  }
};

// Trials are split into fixed-size shards with seeds derived from the master
// seed, so a result depends only on (set, trials, seed), never on `jobs`.
inline constexpr std::uint64_t walker_shard_size = 1 << 16;

/// Walker starts on node i in C with probability k_i / k(C), steps to a
/// uniform neighbour, and escapes if that neighbour is outside C.
WalkEstimate simulate_node_escape(const NodeSet& nodes, std::uint64_t trials, std::uint64_t seed,
                                  unsigned jobs = 1);

/// Link-node-link walker: starts on a uniform link of L, moves to one of its
/// two nodes with probability 1/2, then picks uniformly among all k_i links at
/// that node (including the one it came from). Escapes if that link is not in L.
WalkEstimate simulate_link_escape(const LinkSet& links, std::uint64_t trials, std::uint64_t seed,
                                  unsigned jobs = 1);

}  // namespace cplc

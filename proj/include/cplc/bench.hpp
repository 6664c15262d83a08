#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cplc/graph.hpp"

namespace cplc {

/// Connected preferential-attachment graph with exactly `edges` edges: each
/// new node links to two distinct degree-weighted existing nodes.
Graph random_connected_graph(std::size_t edges, std::uint64_t seed);

struct BenchRow {
  std::size_t edges = 0;
  double nodes = 0;   // mean over the sampled graphs
  double levels = 0;  // mean over the sampled graphs
  double seconds = 0;  // mean over the graphs of the best per-sweep time
};

struct BenchOptions {
  std::uint64_t seed = 1;
  unsigned graphs = 5;    // random graphs per size
  unsigned repeats = 3;   // timed batches per graph; the fastest counts
  double min_batch_seconds = 0.02;  // a batch repeats the sweep until this long
};

std::vector<BenchRow> run_bench(std::span<const std::size_t> sizes, const BenchOptions& options = {});

/// Least-squares slope of log(seconds) against log(edges); needs two distinct sizes.
std::optional<double> fit_loglog_slope(std::span<const BenchRow> rows);

}  // namespace cplc

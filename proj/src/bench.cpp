#include "cplc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "cplc/error.hpp"
#include "cplc/random.hpp"
#include "cplc/sweep.hpp"

namespace cplc {

Graph random_connected_graph(std::size_t edges, std::uint64_t seed) {
  if (edges == 0) throw PreconditionError("a random graph needs at least one edge");
  Rng rng(seed);
  std::vector<Edge> list{{0, 1}};
  std::vector<NodeId> stubs{0, 1};  // node repeated once per incident edge
  NodeId next = 2;
  while (list.size() < edges) {
    const NodeId v = next++;
    std::set<NodeId> targets;
    const std::size_t want = std::min<std::size_t>({2, edges - list.size(), v});
    while (targets.size() < want) targets.insert(stubs[uniform_below(rng, stubs.size())]);
    for (NodeId t : targets) {
      list.push_back({t, v});
      stubs.push_back(t);
      stubs.push_back(v);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(next);
  for (NodeId i = 0; i < next; ++i) labels.push_back(std::to_string(i + 1));
  return Graph(std::move(labels), std::move(list));
}

namespace {

// Seconds per sweep: batches of back-to-back sweeps, fastest batch wins.
double time_sweep(const LinkSet& all, const BenchOptions& options, std::size_t& levels) {
  using Clock = std::chrono::steady_clock;
  double best = std::numeric_limits<double>::infinity();
  for (unsigned r = 0; r < std::max(1u, options.repeats); ++r) {
    std::size_t runs = 0;
    const auto start = Clock::now();
    std::chrono::duration<double> elapsed{};
    do {
      levels = sweep(all).levels.size();
      ++runs;
      elapsed = Clock::now() - start;
    } while (elapsed.count() < options.min_batch_seconds);
    best = std::min(best, elapsed.count() / static_cast<double>(runs));
  }
  return best;
}

}  // namespace

std::vector<BenchRow> run_bench(std::span<const std::size_t> sizes, const BenchOptions& options) {
  std::vector<BenchRow> rows;
  const unsigned graphs = std::max(1u, options.graphs);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    BenchRow row{sizes[i], 0, 0, 0};
    for (unsigned k = 0; k < graphs; ++k) {
      const Graph g = random_connected_graph(sizes[i], derive_seed(options.seed, i * graphs + k));
      std::size_t levels = 0;
      row.seconds += time_sweep(LinkSet::all(g), options, levels);
      row.nodes += static_cast<double>(g.node_count());
      row.levels += static_cast<double>(levels);
    }
    row.seconds /= graphs;
    row.nodes /= graphs;
    row.levels /= graphs;
    rows.push_back(row);
  }
  return rows;
}

std::optional<double> fit_loglog_slope(std::span<const BenchRow> rows) {
  std::set<std::size_t> distinct;
  for (const BenchRow& r : rows) distinct.insert(r.edges);
  if (distinct.size() < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const BenchRow& r : rows) {
    const double x = std::log(static_cast<double>(r.edges));
    const double y = std::log(std::max(r.seconds, 1e-9));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(rows.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace cplc

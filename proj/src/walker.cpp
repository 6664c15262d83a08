#include "cplc/walker.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

#include "cplc/error.hpp"
#include "cplc/random.hpp"

namespace cplc {

namespace {

template <typename Trial>
WalkEstimate run_shards(std::uint64_t trials, std::uint64_t seed, unsigned jobs, Trial trial) {
  if (trials == 0) throw PreconditionError("at least one trial is required");
  const std::uint64_t shards = (trials + walker_shard_size - 1) / walker_shard_size;
  std::vector<std::uint64_t> escapes(shards, 0);

  auto run_shard = [&](std::uint64_t s) {
    Rng rng(derive_seed(seed, s));
    const std::uint64_t begin = s * walker_shard_size;
    const std::uint64_t count = std::min(walker_shard_size, trials - begin);
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < count; ++t) hits += trial(rng) ? 1 : 0;
    escapes[s] = hits;
  };

  jobs = static_cast<unsigned>(std::clamp<std::uint64_t>(jobs, 1, shards));
  if (jobs == 1) {
    for (std::uint64_t s = 0; s < shards; ++s) run_shard(s);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::uint64_t s = next++; s < shards; s = next++) run_shard(s);
      });
    }
  }

  WalkEstimate est;
  est.trials = trials;
  for (std::uint64_t e : escapes) est.escapes += e;
  return est;
}

}  // namespace

WalkEstimate simulate_node_escape(const NodeSet& nodes, std::uint64_t trials, std::uint64_t seed,
                                  unsigned jobs) {
  const Graph& g = nodes.graph();
  std::vector<NodeId> members;
  std::vector<std::uint64_t> cumulative;  // running degree volume
  std::uint64_t volume = 0;
  for (NodeId i : nodes.node_ids()) {
    if (g.degree(i) == 0) continue;
    volume += g.degree(i);
    members.push_back(i);
    cumulative.push_back(volume);
  }
  if (volume == 0) throw PreconditionError("node set has no incident links");

  return run_shards(trials, seed, jobs, [&](Rng& rng) {
    const std::uint64_t ticket = uniform_below(rng, volume);
    const auto pos = std::upper_bound(cumulative.begin(), cumulative.end(), ticket) - cumulative.begin();
    const NodeId start = members[pos];
    const auto neighbours = g.incident(start);
    const NodeId next = neighbours[uniform_below(rng, neighbours.size())].neighbor;
    return !nodes.contains(next);
  });
}

WalkEstimate simulate_link_escape(const LinkSet& links, std::uint64_t trials, std::uint64_t seed,
                                  unsigned jobs) {
  if (links.empty()) throw PreconditionError("link set is empty");
  const Graph& g = links.graph();
  const std::vector<EdgeId> members = links.edge_ids();

  return run_shards(trials, seed, jobs, [&](Rng& rng) {
    const Edge& start = g.edge(members[uniform_below(rng, members.size())]);
    const NodeId node = fair_coin(rng) ? start.u : start.v;
    const auto attached = g.incident(node);
    const EdgeId next = attached[uniform_below(rng, attached.size())].edge;
    return !links.contains(next);
  });
}

}  // namespace cplc

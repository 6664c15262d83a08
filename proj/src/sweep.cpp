#include "cplc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "cplc/error.hpp"
#include "cplc/metrics.hpp"

namespace cplc {

std::optional<Fraction> next_threshold(const CplcResult& result) {
  std::optional<Fraction> best;
  for (const MergeRecord& record : result.merge_log) {
    if (record.decision != Decision::united && record.decision != Decision::split) continue;
    for (const TownContact& c : record.contacts) {
      if (c.shares_link || !c.passes_resolution) continue;
      const Fraction r = record.relative_overlap(c);
      if (!best || r < *best) best = r;
    }
  }
  if (best && *best >= 1) return std::nullopt;
  return best;
}

double town_psi(const LinkSet& body, const LinkSet& overlap, const LinkSet& community) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (body.size() == community.size()) return inf;
  const double full = normalized_node_cut(body, community).psi;
  LinkSet stripped = body.difference(overlap);
  if (stripped.size() == body.size() || !is_link_connected(stripped)) return full;
  return std::min(full, normalized_node_cut(stripped, community).psi);
}

ResolutionLevel score_level(CplcResult result, const LinkSet& community) {
  ResolutionLevel level;
  level.q = result.q;
  const LinkSet overlap = result.overlap_links();
  level.overlap_link_count = overlap.size();
  level.level_score = 0;
  for (const Town& town : result.towns) {
    // A town's overlap is the links it shares with any other town.
    const double psi = town_psi(town.body, overlap, community);
    level.per_town_psi.push_back(psi);
    level.level_score = std::max(level.level_score, psi);
  }
  level.result = std::move(result);
  return level;
}

SweepResult sweep(const LinkSet& community, const SweepOptions& options) {
  std::vector<CplcResult> runs;
  Fraction q(0);
  for (;;) {
    runs.push_back(run_cplc(community, q, options.tie));
    const std::optional<Fraction> next = next_threshold(runs.back());
    if (!next) break;
    if (*next <= q) throw InvariantError("resolution thresholds must strictly increase");
    q = *next;
  }

  SweepResult out;
  out.levels.resize(runs.size());
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(runs.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < runs.size(); ++i) out.levels[i] = score_level(std::move(runs[i]), community);
  } else {
    std::atomic<std::size_t> next_index{0};
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next_index++; i < runs.size(); i = next_index++) {
          out.levels[i] = score_level(std::move(runs[i]), community);
        }
      });
    }
  }
  out.selected = select_level(out.levels);
  return out;
}

std::size_t select_level(std::span<const ResolutionLevel> levels) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const ResolutionLevel& cand = levels[i];
    const ResolutionLevel& cur = levels[best];
    if (cand.level_score < cur.level_score) {
      best = i;
    } else if (cand.level_score == cur.level_score && cand.town_count() == cur.town_count()) {
      if (cand.overlap_link_count < cur.overlap_link_count ||
          (cand.overlap_link_count == cur.overlap_link_count && cand.q < cur.q)) {
        best = i;
      }
    }
  }
  return best;
}

}  // namespace cplc

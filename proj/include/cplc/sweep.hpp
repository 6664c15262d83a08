#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cplc/towns.hpp"

namespace cplc {

/// One CPLC run scored by the separation of its towns.
struct ResolutionLevel {
  Fraction q{0};
  CplcResult result;
  /// Per town: min(Psi(body), Psi(body without inter-town overlap links)),
  /// +inf when the town is the whole community.
  std::vector<double> per_town_psi;
  double level_score = 0;  // worst (largest) per-town value
  std::size_t overlap_link_count = 0;

  std::size_t town_count() const { return result.towns.size(); }
};

struct SweepResult {
  std::vector<ResolutionLevel> levels;  // ascending q
  std::size_t selected = 0;
};

struct SweepOptions {
  TieRule tie;
  unsigned jobs = 1;  // threads for per-level scoring
};

/// Smallest relative overlap among attachments admitted by the resolution
/// test alone (no shared link); nullopt if there is none or it is >= 1.
std::optional<Fraction> next_threshold(const CplcResult& result);

/// Psi of one town body within the analysed community, taking the better of
/// the full body and the body stripped of links shared with other towns.
/// The stripped variant is ignored when it is empty or not link-connected.
double town_psi(const LinkSet& body, const LinkSet& overlap, const LinkSet& community);

ResolutionLevel score_level(CplcResult result, const LinkSet& community);

/// Runs CPLC at q = 0 and then at each next threshold until none is left.
SweepResult sweep(const LinkSet& community, const SweepOptions& options = {});

/// Lowest level score wins; among levels with equal score and equal town
/// count, the one with fewest overlap links, then the lowest q.
std::size_t select_level(std::span<const ResolutionLevel> levels);

}  // namespace cplc

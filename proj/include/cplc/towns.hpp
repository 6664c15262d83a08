#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cplc/fraction.hpp"
#include "cplc/graph.hpp"

namespace cplc {

/// Order among stars of equal size: ascending node index, or a seeded shuffle.
struct TieRule {
  std::optional<std::uint64_t> seed;

  static TieRule deterministic() { return {}; }
  static TieRule seeded(std::uint64_t s) { return {s}; }
  friend bool operator==(const TieRule&, const TieRule&) = default;
};

enum class AttachmentKind { founder, link_shared, node_overlap, split_part };
enum class Decision { united, split, new_town, skipped, pruned };

const char* to_string(AttachmentKind kind);
const char* to_string(Decision decision);

struct StarEntry {
  NodeId centre = 0;
  std::uint32_t star_size = 0;
  AttachmentKind kind = AttachmentKind::founder;
  Fraction relative_overlap{0};

  friend bool operator==(const StarEntry&, const StarEntry&) = default;
};

/// A core-periphery structure: a founding star plus every star attached to it.
struct Town {
  NodeId centre = 0;
  LinkSet body;
  std::vector<StarEntry> star_log;

  friend bool operator==(const Town&, const Town&) = default;
};

/// How a candidate star met one town at decision time.
struct TownContact {
  std::size_t town = 0;
  std::uint32_t shared_outer = 0;  // |adj(j) ∩ N_T|
  bool shares_link = false;
  bool passes_resolution = false;  // shared_outer > q k_j

  friend bool operator==(const TownContact&, const TownContact&) = default;
};

struct MergeRecord {
  NodeId centre = 0;
  std::uint32_t star_size = 0;
  Decision decision = Decision::new_town;
  std::vector<TownContact> contacts;

  /// r = |adj(j) ∩ N_T| / k_j for one contact.
  Fraction relative_overlap(const TownContact& c) const {
    return Fraction(c.shared_outer, star_size);
  }
  friend bool operator==(const MergeRecord&, const MergeRecord&) = default;
};

struct TownOverlap {
  std::size_t first = 0;
  std::size_t second = 0;
  std::vector<EdgeId> links;
  std::vector<NodeId> nodes;  // every node touched by both bodies

  friend bool operator==(const TownOverlap&, const TownOverlap&) = default;
};

struct CplcResult {
  Fraction q{0};
  std::vector<Town> towns;
  std::vector<MergeRecord> merge_log;
  std::vector<TownOverlap> overlaps;  // only pairs that share a node or link

  /// Distinct links that belong to two or more towns.
  LinkSet overlap_links() const;

  friend bool operator==(const CplcResult&, const CplcResult&) = default;
};

/// Decomposes a link-connected link set into towns at resolution q in [0, 1).
///
/// Stars are ranked once by size. The largest founds the first town; each
/// following candidate joins a town when it shares a link with it or when
/// more than q k_j of its outer nodes already lie in the town. A star that
/// meets several towns is split: each town receives the links leading into
/// its node set, and the rest go to the towns that passed the resolution
/// test (to all contacted towns if none did). Candidates whose links are all
/// inside towns are pruned; candidates whose links into towns all already
/// belong to those towns are skipped.
CplcResult run_cplc(const LinkSet& links, const Fraction& q, const TieRule& tie = {});

}  // namespace cplc

#include "cplc/towns.hpp"

#include <algorithm>
#include <map>

#include "cplc/error.hpp"

namespace cplc {

const char* to_string(AttachmentKind kind) {
  switch (kind) {
    case AttachmentKind::founder:
      return "founder";
    case AttachmentKind::link_shared:
      return "link-shared";
    case AttachmentKind::node_overlap:
      return "node-overlap";
    case AttachmentKind::split_part:
      return "split-part";
  }
  return "?";
}

const char* to_string(Decision decision) {
  switch (decision) {
    case Decision::united:
      return "united";
    case Decision::split:
      return "split";
    case Decision::new_town:
      return "new-town";
    case Decision::skipped:
      return "skipped";
    case Decision::pruned:
      return "pruned";
  }
  return "?";
}

LinkSet CplcResult::overlap_links() const {
  if (towns.empty()) return {};
  LinkSet shared(towns.front().body.graph());
  for (const TownOverlap& o : overlaps) {
    for (EdgeId e : o.links) shared.insert(e);
  }
  return shared;
}

namespace {

class TownBuilder {
 public:
  TownBuilder(const LinkSet& community, const Fraction& q)
      : graph_(community.graph()), q_(q), town_count_per_edge_(graph_.edge_count(), 0) {}

  CplcResult run(const std::vector<Star>& stars) {
    found(stars.front());
    for (std::size_t i = 1; i < stars.size(); ++i) process(stars[i]);
    result_.q = q_;
    collect_overlaps();
    return std::move(result_);
  }

 private:
  void found(const Star& star) {
    Town town{star.centre, LinkSet(graph_), {}};
    town.star_log.push_back({star.centre, static_cast<std::uint32_t>(star.size()),
                             AttachmentKind::founder, Fraction(0)});
    result_.towns.push_back(std::move(town));
    add_links(result_.towns.size() - 1, star.links);
  }

  void add_links(std::size_t town, const std::vector<EdgeId>& links) {
    LinkSet& body = result_.towns[town].body;
    for (EdgeId e : links) {
      if (body.insert(e)) ++town_count_per_edge_[e];
    }
  }

  bool fully_covered(const Star& star) const {
    return std::all_of(star.links.begin(), star.links.end(),
                       [&](EdgeId e) { return town_count_per_edge_[e] > 0; });
  }

  // Every link of the star whose outer node lies in a town already belongs to
  // that town, and there is at least one such link.
  bool contributes_nothing(const Star& star) const {
    bool touched = false;
    for (std::size_t k = 0; k < star.size(); ++k) {
      for (const Town& town : result_.towns) {
        if (!town.body.touches(star.outer_nodes[k])) continue;
        touched = true;
        if (!town.body.contains(star.links[k])) return false;
      }
    }
    return touched;
  }

  std::vector<TownContact> contacts_of(const Star& star) const {
    std::vector<TownContact> contacts;
    const auto size = static_cast<std::int64_t>(star.size());
    for (std::size_t t = 0; t < result_.towns.size(); ++t) {
      const LinkSet& body = result_.towns[t].body;
      TownContact c;
      c.town = t;
      for (std::size_t k = 0; k < star.size(); ++k) {
        if (body.contains(star.links[k])) c.shares_link = true;
        if (body.touches(star.outer_nodes[k])) ++c.shared_outer;
      }
      // shared_outer > q * size, exactly
      c.passes_resolution = Fraction(c.shared_outer) > q_ * size;
      if (c.shares_link || c.passes_resolution) contacts.push_back(c);
    }
    return contacts;
  }

  void process(const Star& star) {
    MergeRecord record;
    record.centre = star.centre;
    record.star_size = static_cast<std::uint32_t>(star.size());

    if (fully_covered(star)) {
      record.decision = Decision::pruned;
      result_.merge_log.push_back(std::move(record));
      return;
    }
    if (contributes_nothing(star)) {
      record.decision = Decision::skipped;
      result_.merge_log.push_back(std::move(record));
      return;
    }

    record.contacts = contacts_of(star);
    if (record.contacts.empty()) {
      record.decision = Decision::new_town;
      found(star);
    } else if (record.contacts.size() == 1) {
      const TownContact& c = record.contacts.front();
      record.decision = Decision::united;
      add_links(c.town, star.links);
      result_.towns[c.town].star_log.push_back(
          {star.centre, record.star_size,
           c.shares_link ? AttachmentKind::link_shared : AttachmentKind::node_overlap,
           record.relative_overlap(c)});
    } else {
      record.decision = Decision::split;
      split(star, record);
    }
    result_.merge_log.push_back(std::move(record));
  }

  void split(const Star& star, const MergeRecord& record) {
    // Parts are computed against the town state before any of them grows.
    std::vector<std::vector<EdgeId>> parts(record.contacts.size());
    std::vector<EdgeId> remaining;
    for (std::size_t k = 0; k < star.size(); ++k) {
      bool assigned = false;
      for (std::size_t c = 0; c < record.contacts.size(); ++c) {
        if (result_.towns[record.contacts[c].town].body.touches(star.outer_nodes[k])) {
          parts[c].push_back(star.links[k]);
          assigned = true;
        }
      }
      if (!assigned) remaining.push_back(star.links[k]);
    }
    const bool any_passes = std::any_of(record.contacts.begin(), record.contacts.end(),
                                        [](const TownContact& c) { return c.passes_resolution; });
    for (std::size_t c = 0; c < record.contacts.size(); ++c) {
      const TownContact& contact = record.contacts[c];
      add_links(contact.town, parts[c]);
      if (contact.passes_resolution || !any_passes) add_links(contact.town, remaining);
      result_.towns[contact.town].star_log.push_back(
          {star.centre, record.star_size, AttachmentKind::split_part, record.relative_overlap(contact)});
    }
  }

  void collect_overlaps() {
    const auto& towns = result_.towns;
    std::map<std::pair<std::size_t, std::size_t>, TownOverlap> pairs;
    auto pair_of = [&](std::size_t a, std::size_t b) -> TownOverlap& {
      auto [it, inserted] = pairs.try_emplace({a, b});
      if (inserted) {
        it->second.first = a;
        it->second.second = b;
      }
      return it->second;
    };
    std::vector<std::size_t> members;
    for (EdgeId e = 0; e < graph_.edge_count(); ++e) {
      if (town_count_per_edge_[e] < 2) continue;
      members.clear();
      for (std::size_t t = 0; t < towns.size(); ++t) {
        if (towns[t].body.contains(e)) members.push_back(t);
      }
      for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) pair_of(members[a], members[b]).links.push_back(e);
      }
    }
    for (NodeId i = 0; i < graph_.node_count(); ++i) {
      members.clear();
      for (std::size_t t = 0; t < towns.size(); ++t) {
        if (towns[t].body.touches(i)) members.push_back(t);
      }
      for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) pair_of(members[a], members[b]).nodes.push_back(i);
      }
    }
    for (auto& [key, overlap] : pairs) result_.overlaps.push_back(std::move(overlap));
  }

  const Graph& graph_;
  Fraction q_;
  std::vector<std::uint32_t> town_count_per_edge_;
  CplcResult result_;
};

}  // namespace

CplcResult run_cplc(const LinkSet& links, const Fraction& q, const TieRule& tie) {
  if (q < 0 || q >= 1) throw PreconditionError("resolution q must lie in [0, 1), got " + to_string(q));
  if (links.empty()) throw PreconditionError("cannot decompose an empty link set");
  const auto components = connected_components(links);
  if (components.size() != 1) {
    std::string sizes;
    for (const LinkSet& c : components) sizes += (sizes.empty() ? "" : ", ") + std::to_string(c.size());
    throw PreconditionError("link set is not connected (component sizes: " + sizes +
                            "); decompose it with connected_components first");
  }
  const std::vector<Star> stars = enumerate_stars(links, tie.seed);
  return TownBuilder(links, q).run(stars);
}

}  // namespace cplc

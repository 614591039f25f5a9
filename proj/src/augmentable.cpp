#include <algorithm>

#include "oa/completion_enum.hpp"
#include "oa/solvers.hpp"
#include "oa/strongconn.hpp"

namespace oa {

namespace {

// Some strong completion extends X iff one extends X plus an arc covering a given terminal
// component of D+X. Siblings exclude the arcs tried before them, so no completion is reached twice.
// Pruning: D+X plus every still-addable slot must already be strong.
struct Search {
  const PlaneDigraph& d;
  std::uint64_t limit;
  std::uint64_t nodes = 0;
  bool out_of_budget = false;

  std::vector<NewArc> slots;
  std::vector<std::pair<VertexId, VertexId>> slot_pair;
  std::vector<char> excluded;
  Completion chosen;
  Completion witness;

  Search(const PlaneDigraph& g, std::uint64_t lim) : d(g), limit(lim) {
    slots = candidate_arcs(d, Mode::oriented);
    for (const NewArc& a : slots) slot_pair.push_back(new_arc_vertices(d, a));
    excluded.assign(slots.size(), 0);
  }

  bool run() {
    if (++nodes > limit) {
      out_of_budget = true;
      return false;
    }
    ArcPairs arcs = d.arc_pairs();
    for (const NewArc& a : chosen) arcs.push_back(new_arc_vertices(d, a));
    SccPartition cur = scc(d.vertex_count(), arcs);
    if (cur.strong()) {
      witness = chosen;
      return true;
    }
    std::vector<int> open;
    for (size_t s = 0; s < slots.size(); ++s)
      if (!excluded[s] && can_add_arc(d, chosen, slots[s], Mode::oriented)) open.push_back(static_cast<int>(s));
    ArcPairs optimistic = arcs;
    for (int s : open) optimistic.push_back(slot_pair[s]);
    if (!is_strong(d.vertex_count(), optimistic)) return false;

    // the terminal component with the fewest covering slots
    std::vector<int> best;
    bool have = false;
    for (int c = 0; c < cur.count; ++c) {
      if (!cur.source[c] && !cur.sink[c]) continue;
      std::vector<int> cover;
      for (int s : open) {
        const int ct = cur.comp[slot_pair[s].first], ch = cur.comp[slot_pair[s].second];
        if (ct == ch) continue;
        if ((cur.source[c] && ch == c) || (cur.sink[c] && ct == c)) cover.push_back(s);
      }
      if (!have || cover.size() < best.size()) {
        best = std::move(cover);
        have = true;
      }
    }
    std::vector<int> locked;
    bool found = false;
    for (int s : best) {
      chosen.push_back(slots[s]);
      found = run();
      if (found) break;
      chosen.pop_back();
      if (out_of_budget) break;
      excluded[s] = 1;
      locked.push_back(s);
    }
    for (int s : locked) excluded[s] = 0;
    return found;
  }
};

}  // namespace

AugmentabilityReport decide_augmentable(const PlaneDigraph& d, std::uint64_t node_limit) {
  AugmentabilityReport r;
  Search s(d, node_limit);
  const bool yes = s.run();
  r.nodes = s.nodes;
  if (yes) {
    r.verdict = Verdict::Yes;
    r.witness = s.witness;
    std::sort(r.witness.begin(), r.witness.end());
  } else {
    r.verdict = s.out_of_budget ? Verdict::Unknown : Verdict::No;
  }
  return r;
}

}  // namespace oa

#include "oa/dijoin.hpp"

#include <algorithm>
#include <string>

namespace oa {

bool is_dijoin(int n, const ArcPairs& arcs, const std::vector<int>& y) {
  ArcPairs all = arcs;
  for (int a : y) {
    if (a < 0 || a >= static_cast<int>(arcs.size()))
      throw Error(ErrorKind::UnknownArc, "arc " + std::to_string(a) + " is not in the digraph");
    all.emplace_back(arcs[a].second, arcs[a].first);
  }
  return is_strong(n, all);
}

namespace {

struct DijoinSearch {
  int n;
  const ArcPairs& arcs;
  ArcPairs work;  // arcs plus reversals of y
  std::vector<int> y;
  std::vector<char> in_y;
  std::uint64_t nodes = 0;

  bool dfs(int budget) {
    ++nodes;
    SccPartition p = scc(n, work);
    if (p.count == 1) return true;
    if (budget == 0 || std::max(p.source_count(), p.sink_count()) > budget) return false;
    std::vector<int> best;
    bool have = false;
    for (int c = 0; c < p.count; ++c) {
      for (int side = 0; side < 2; ++side) {
        if (side == 0 ? !p.source[c] : !p.sink[c]) continue;
        std::vector<int> opts;
        for (int a = 0; a < static_cast<int>(arcs.size()); ++a) {
          if (in_y[a]) continue;
          auto [u, v] = arcs[a];
          // source component: reverse an arc leaving it; sink component: reverse an arc entering it
          bool hit = side == 0 ? (p.comp[u] == c && p.comp[v] != c) : (p.comp[v] == c && p.comp[u] != c);
          if (hit) opts.push_back(a);
        }
        if (!have || opts.size() < best.size()) {
          best = std::move(opts);
          have = true;
        }
      }
    }
    for (int a : best) {
      y.push_back(a);
      in_y[a] = 1;
      work.emplace_back(arcs[a].second, arcs[a].first);
      if (dfs(budget - 1)) return true;
      work.pop_back();
      in_y[a] = 0;
      y.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> min_dijoin_upto(int n, const ArcPairs& arcs, int k, std::uint64_t* branches) {
  DijoinSearch s{n, arcs, arcs, {}, std::vector<char>(arcs.size(), 0)};
  std::optional<std::vector<int>> out;
  for (int b = 0; b <= k; ++b)
    if (s.dfs(b)) {
      std::vector<int> y = s.y;
      std::sort(y.begin(), y.end());
      out = y;
      break;
    }
  if (branches) *branches += s.nodes;
  return out;
}

DijoinInstance build_auxiliary(const PlaneDigraph& d, const std::vector<AllowedFace>& allowed, int k, Mode mode) {
  DijoinInstance inst;
  inst.k = k;
  inst.original_vertices = d.vertex_count();
  int next = d.vertex_count();
  std::vector<int> gadget_arc;
  auto add_path = [&](int from, int to) {
    // directed path of length k+1 through k fresh vertices
    int prev = from;
    for (int i = 0; i < k; ++i) {
      inst.arcs.emplace_back(prev, next);
      prev = next++;
    }
    inst.arcs.emplace_back(prev, to);
  };
  for (const Arc& a : d.arcs()) add_path(a.tail, a.head);
  for (const AllowedFace& af : allowed) {
    try {
      insert_arcs(d, af.arcs, mode);
    } catch (const Error& e) {
      throw Error(ErrorKind::NotACandidate, std::string("allowed completion cannot be inserted: ") + e.what());
    }
    for (const NewArc& na : af.arcs) {
      auto [u, v] = new_arc_vertices(d, na);
      int x = next++;
      inst.candidates.push_back(na);
      inst.gadget_vertex.push_back(x);
      add_path(af.source, x);
      add_path(x, v);
      gadget_arc.push_back(static_cast<int>(inst.arcs.size()));
      inst.arcs.emplace_back(x, u);
    }
  }
  inst.n = next;
  inst.gadget.assign(inst.arcs.size(), 0);
  inst.candidate_of.assign(inst.arcs.size(), -1);
  for (int c = 0; c < static_cast<int>(gadget_arc.size()); ++c) {
    inst.gadget[gadget_arc[c]] = 1;
    inst.candidate_of[gadget_arc[c]] = c;
  }
  return inst;
}

Completion extract_solution(const DijoinInstance& inst, const std::vector<int>& y) {
  Completion x;
  for (int a : y) {
    if (a < 0 || a >= static_cast<int>(inst.arcs.size()))
      throw Error(ErrorKind::UnknownArc, "arc " + std::to_string(a) + " is not in the auxiliary digraph");
    if (!inst.gadget[a]) throw Error(ErrorKind::NonGadgetArcInY, "dijoin uses a non-gadget arc " + std::to_string(a));
    x.push_back(inst.candidates[inst.candidate_of[a]]);
  }
  std::sort(x.begin(), x.end());
  return x;
}

}  // namespace oa

#include <algorithm>
#include <set>

#include "oa/solvers.hpp"
#include "oa/strongconn.hpp"

namespace oa {

VerifyResult verify_solution(const PlaneDigraph& d, const Completion& x, Mode mode) {
  VerifyResult r;
  try {
    PlaneDigraph aug = insert_arcs(d, x, mode);
    if (!aug.connected()) {
      r.message = "underlying graph of D+X is disconnected";
      return r;
    }
    if (!is_strong(aug.vertex_count(), aug.arc_pairs())) {
      r.message = "D+X is not strongly connected";
      return r;
    }
    r.ok = true;
    r.message = "ok";
  } catch (const Error& e) {
    r.error = e.kind();
    r.message = e.what();
  }
  return r;
}

int terminal_lower_bound(int n, const std::vector<std::pair<int, int>>& arcs) {
  SccPartition p = scc(n, arcs);
  return std::max(p.source_count(), p.sink_count());
}

std::vector<NewArc> candidate_arcs(const PlaneDigraph& d, Mode mode) {
  std::vector<NewArc> out;
  for (const Face& f : d.faces())
    for (int p = 0; p < f.size(); ++p)
      for (int q = 0; q < f.size(); ++q) {
        VertexId u = f.vertex(p), v = f.vertex(q);
        if (u == v) continue;
        if (d.has_arc(u, v)) continue;
        if (mode == Mode::oriented && d.has_arc(v, u)) continue;
        out.push_back({f.id, p, q});
      }
  return out;
}

namespace {

struct BruteSearch {
  const PlaneDigraph& d;
  Mode mode;
  std::vector<NewArc> cand;
  std::vector<std::pair<int, int>> cv;  // vertex pairs of candidates
  std::vector<std::pair<int, int>> arcs;
  std::vector<int> chosen;
  SolveStats stats;

  bool compatible(int c) const {
    const NewArc& a = cand[c];
    for (int o : chosen) {
      const NewArc& b = cand[o];
      if (a.face == b.face && chords_cross(a.tail, a.head, b.tail, b.head)) return false;
      if (cv[o] == cv[c]) return false;
      if (mode == Mode::oriented && cv[o].first == cv[c].second && cv[o].second == cv[c].first) return false;
    }
    return true;
  }

  bool dfs(int budget) {
    ++stats.branches;
    SccPartition p = scc(d.vertex_count(), arcs);
    if (p.count == 1) return true;
    if (std::max(p.source_count(), p.sink_count()) > budget) return false;
    // the terminal component with the fewest ways to be fixed
    std::vector<int> best;
    bool have = false;
    for (int comp = 0; comp < p.count; ++comp) {
      if (!p.source[comp] && !p.sink[comp]) continue;
      for (int side = 0; side < 2; ++side) {
        if (side == 0 && !p.source[comp]) continue;
        if (side == 1 && !p.sink[comp]) continue;
        std::vector<int> opts;
        for (int c = 0; c < static_cast<int>(cand.size()); ++c) {
          auto [u, v] = cv[c];
          bool fixes = side == 0 ? (p.comp[v] == comp && p.comp[u] != comp) : (p.comp[u] == comp && p.comp[v] != comp);
          if (fixes && compatible(c)) opts.push_back(c);
        }
        if (!have || opts.size() < best.size()) {
          best = std::move(opts);
          have = true;
        }
      }
    }
    for (int c : best) {
      chosen.push_back(c);
      arcs.push_back(cv[c]);
      bool ok = dfs(budget - 1);
      if (ok) return true;
      chosen.pop_back();
      arcs.pop_back();
    }
    return false;
  }
};

}  // namespace

SolveReport brute_solve(const PlaneDigraph& d, int k, Mode mode, const OracleLimits& limits) {
  if (d.vertex_count() > limits.max_vertices || k > limits.max_budget)
    throw Error(ErrorKind::BudgetTooLargeForOracle,
                "brute force limited to " + std::to_string(limits.max_vertices) + " vertices and budget " +
                    std::to_string(limits.max_budget));
  BruteSearch s{d, mode, candidate_arcs(d, mode), {}, d.arc_pairs(), {}, {}};
  for (const NewArc& a : s.cand) s.cv.push_back(new_arc_vertices(d, a));
  SolveReport r;
  r.mode = mode;
  r.method = "brute";
  for (int b = 0; b <= k; ++b) {
    if (s.dfs(b)) {
      r.yes = true;
      r.optimum = b;
      r.exact_optimum = true;
      for (int c : s.chosen) r.witness.push_back(s.cand[c]);
      std::sort(r.witness.begin(), r.witness.end());
      break;
    }
  }
  r.stats = s.stats;
  return r;
}

}  // namespace oa

#include "oa/random_gen.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace oa {

namespace {

using Pt = std::pair<double, double>;

double cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

bool segments_cross(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
  double d1 = cross(a, b, c), d2 = cross(a, b, d), d3 = cross(c, d, a), d4 = cross(c, d, b);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

}  // namespace

PlaneDigraph random_plane_graph(const RandomPlaneOptions& opt, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = opt.n;
  std::vector<Pt> xy(n);
  for (auto& p : xy) p = {unit(rng), unit(rng)};
  // greedy triangulation: shortest segments first
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  auto len2 = [&](const std::pair<int, int>& e) {
    double dx = xy[e.first].first - xy[e.second].first, dy = xy[e.first].second - xy[e.second].second;
    return dx * dx + dy * dy;
  };
  std::sort(pairs.begin(), pairs.end(), [&](auto& a, auto& b) { return len2(a) < len2(b); });
  std::vector<std::pair<int, int>> tri;
  for (auto& e : pairs) {
    bool ok = true;
    for (auto& f : tri) {
      if (e.first == f.first || e.first == f.second || e.second == f.first || e.second == f.second) continue;
      if (segments_cross(xy[e.first], xy[e.second], xy[f.first], xy[f.second])) {
        ok = false;
        break;
      }
    }
    if (ok) tri.push_back(e);
  }
  // random spanning tree, then extra edges
  std::shuffle(tri.begin(), tri.end(), rng);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<int, int>> kept;
  for (auto& e : tri) {
    int a = find(e.first), b = find(e.second);
    bool tree = a != b;
    if (tree && opt.connected) {
      parent[a] = b;
      kept.push_back(e);
    } else if (unit(rng) < opt.extra_edge_prob) {
      if (tree) parent[a] = b;
      kept.push_back(e);
    }
  }
  std::vector<int> rank(n);
  std::iota(rank.begin(), rank.end(), 0);
  std::shuffle(rank.begin(), rank.end(), rng);
  std::sort(kept.begin(), kept.end());
  std::vector<Arc> arcs;
  for (auto& [u, v] : kept) {
    bool up = unit(rng) < opt.acyclic_bias ? rank[u] < rank[v] : unit(rng) < 0.5;
    arcs.push_back(up ? Arc{u, v} : Arc{v, u});
  }
  return build_from_positions(n, arcs, xy, opt.mode);
}

}  // namespace oa

#include "oa/strongconn.hpp"

#include <algorithm>
#include <functional>

namespace oa {

int SccPartition::terminal_count() const {
  int t = 0;
  for (int c = 0; c < count; ++c) t += (source[c] || sink[c]) ? 1 : 0;
  return t;
}
int SccPartition::source_count() const { return static_cast<int>(std::count(source.begin(), source.end(), true)); }
int SccPartition::sink_count() const { return static_cast<int>(std::count(sink.begin(), sink.end(), true)); }

SccPartition scc(int n, const ArcPairs& arcs) {
  std::vector<int> head(n + 1, 0), adj(arcs.size());
  for (auto& [u, v] : arcs) ++head[u + 1];
  for (int i = 0; i < n; ++i) head[i + 1] += head[i];
  {
    std::vector<int> fill(head.begin(), head.end() - 1);
    for (auto& [u, v] : arcs) adj[fill[u]++] = v;
  }
  SccPartition p;
  p.comp.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<char> on_stack(n, 0);
  std::vector<std::pair<int, int>> call;  // (vertex, next adjacency slot)
  int counter = 0;
  for (int s = 0; s < n; ++s) {
    if (index[s] != -1) continue;
    call.emplace_back(s, head[s]);
    index[s] = low[s] = counter++;
    stack.push_back(s);
    on_stack[s] = 1;
    while (!call.empty()) {
      auto& [v, it] = call.back();
      if (it < head[v + 1]) {
        int w = adj[it++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, head[w]);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        int vv = v;
        if (low[vv] == index[vv]) {
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            p.comp[w] = p.count;
          } while (w != vv);
          ++p.count;
        }
        call.pop_back();
        if (!call.empty()) {
          int parent = call.back().first;
          low[parent] = std::min(low[parent], low[vv]);
        }
      }
    }
  }
  // renumber components by smallest member for stable ids
  std::vector<int> first(p.count, n);
  for (int v = 0; v < n; ++v) first[p.comp[v]] = std::min(first[p.comp[v]], v);
  std::vector<int> order(p.count);
  for (int c = 0; c < p.count; ++c) order[c] = c;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return first[a] < first[b]; });
  std::vector<int> rename(p.count);
  for (int i = 0; i < p.count; ++i) rename[order[i]] = i;
  for (int v = 0; v < n; ++v) p.comp[v] = rename[p.comp[v]];
  p.members.assign(p.count, {});
  for (int v = 0; v < n; ++v) p.members[p.comp[v]].push_back(v);
  for (auto& [u, v] : arcs)
    if (p.comp[u] != p.comp[v]) p.dag.emplace_back(p.comp[u], p.comp[v]);
  std::sort(p.dag.begin(), p.dag.end());
  p.dag.erase(std::unique(p.dag.begin(), p.dag.end()), p.dag.end());
  p.source.assign(p.count, false);
  p.sink.assign(p.count, false);
  if (p.count > 1) {
    std::vector<char> has_in(p.count, 0), has_out(p.count, 0);
    for (auto& [a, b] : p.dag) {
      has_out[a] = 1;
      has_in[b] = 1;
    }
    for (int c = 0; c < p.count; ++c) {
      p.source[c] = !has_in[c];
      p.sink[c] = !has_out[c];
    }
  }
  return p;
}

SccPartition scc(const PlaneDigraph& d) { return scc(d.vertex_count(), d.arc_pairs()); }

bool is_strong(int n, const ArcPairs& arcs) {
  if (n <= 1) return true;
  return scc(n, arcs).count == 1;
}

std::vector<char> reachable_from(int n, const ArcPairs& arcs, int from) {
  std::vector<std::vector<int>> out(n);
  for (auto& [u, v] : arcs) out[u].push_back(v);
  std::vector<char> seen(n, 0);
  std::vector<int> st{from};
  seen[from] = 1;
  while (!st.empty()) {
    int u = st.back();
    st.pop_back();
    for (int v : out[u])
      if (!seen[v]) {
        seen[v] = 1;
        st.push_back(v);
      }
  }
  return seen;
}

CondensationResult condense(const PlaneDigraph& d) {
  const int n = d.vertex_count(), m = d.arc_count();
  SccPartition p = scc(d);
  std::vector<int> rep(n);
  for (int v = 0; v < n; ++v) rep[v] = v;
  std::function<int(int)> find = [&](int x) { return rep[x] == x ? x : rep[x] = find(rep[x]); };
  std::vector<std::vector<EndId>> rot = d.rotations();
  std::vector<char> contracted(m, 0);
  CondensationResult r;
  for (ArcId a = 0; a < m; ++a) {
    const Arc& ar = d.arc(a);
    if (p.comp[ar.tail] != p.comp[ar.head]) continue;
    int u = find(ar.tail), v = find(ar.head);
    if (u == v) continue;
    auto cut = [](const std::vector<EndId>& r0, EndId e) {
      std::vector<EndId> out;
      auto it = std::find(r0.begin(), r0.end(), e);
      size_t i = static_cast<size_t>(it - r0.begin());
      for (size_t k = 1; k < r0.size(); ++k) out.push_back(r0[(i + k) % r0.size()]);
      return out;
    };
    std::vector<EndId> merged = cut(rot[u], tail_end(a));
    std::vector<EndId> tail = cut(rot[v], head_end(a));
    merged.insert(merged.end(), tail.begin(), tail.end());
    int keep = std::min(u, v), drop = std::max(u, v);
    rep[drop] = keep;
    rot[keep] = std::move(merged);
    rot[drop].clear();
    contracted[a] = 1;
    r.contraction_log.push_back(a);
  }
  // condensed vertex ids follow the component numbering
  r.vertex_map.assign(n, 0);
  for (int v = 0; v < n; ++v) r.vertex_map[v] = p.comp[v];
  std::vector<int> new_arc(m, -1);
  std::vector<Arc> arcs;
  for (ArcId a = 0; a < m; ++a)
    if (!contracted[a]) {
      new_arc[a] = static_cast<int>(arcs.size());
      arcs.push_back({p.comp[d.arc(a).tail], p.comp[d.arc(a).head]});
      r.arc_to_original.push_back(a);
    }
  std::vector<std::vector<EndId>> crot(p.count);
  for (int v = 0; v < n; ++v) {
    if (find(v) != v) continue;
    for (EndId e : rot[v]) crot[p.comp[v]].push_back(2 * new_arc[end_arc(e)] + (e & 1));
  }
  r.condensed = PlaneDigraph::build(p.count, std::move(arcs), std::move(crot), Mode::multi);
  return r;
}

Completion lift_solution(const PlaneDigraph& original, const CondensationResult& cond, const Completion& xc) {
  const PlaneDigraph& c = cond.condensed;
  try {
    PlaneDigraph aug = insert_arcs(c, xc, Mode::directed);
    if (!is_strong(aug.vertex_count(), aug.arc_pairs()))
      throw Error(ErrorKind::NotASolution, "condensed completion does not make the graph strong");
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotASolution) throw;
    throw Error(ErrorKind::NotASolution, e.what());
  }
  std::vector<EndId> end_map(2 * c.arc_count());
  for (ArcId a = 0; a < c.arc_count(); ++a) {
    end_map[tail_end(a)] = tail_end(cond.arc_to_original[a]);
    end_map[head_end(a)] = head_end(cond.arc_to_original[a]);
  }
  return map_completion(c, original, xc, end_map);
}

std::vector<EndId> subgraph_end_map(const Subgraph& s) {
  std::vector<EndId> m(2 * s.graph.arc_count());
  for (ArcId a = 0; a < s.graph.arc_count(); ++a) {
    m[tail_end(a)] = tail_end(s.arc_to_parent[a]);
    m[head_end(a)] = head_end(s.arc_to_parent[a]);
  }
  return m;
}

namespace {

void split_rec(const PlaneDigraph& g, const std::vector<ArcId>& arc_map, const std::vector<VertexId>& vmap,
               LoopSplit& out) {
  ArcId loop = -1;
  for (ArcId a = 0; a < g.arc_count(); ++a)
    if (g.arc(a).tail == g.arc(a).head) {
      loop = a;
      break;
    }
  if (loop < 0) {
    Subgraph s;
    s.graph = g;
    s.arc_to_parent = arc_map;
    s.vertex_to_parent = vmap;
    out.parts.push_back(std::move(s));
    return;
  }
  const VertexId v = g.arc(loop).tail;
  const auto& rot = g.rotation(v);
  const int deg = static_cast<int>(rot.size());
  int i1 = static_cast<int>(std::find(rot.begin(), rot.end(), tail_end(loop)) - rot.begin());
  int i2 = static_cast<int>(std::find(rot.begin(), rot.end(), head_end(loop)) - rot.begin());
  // side 0: ends strictly between the tail end and the head end of the loop, clockwise
  std::vector<int> side_of_end(2 * g.arc_count(), -1);
  for (int k = 1; k < deg; ++k) {
    int idx = (i1 + k) % deg;
    if (idx == i2) break;
    side_of_end[rot[idx]] = 0;
  }
  for (int k = 1; k < deg; ++k) {
    int idx = (i2 + k) % deg;
    if (idx == i1) break;
    side_of_end[rot[idx]] = 1;
  }
  // region labels for the other vertices via the arcs leaving v on each side
  std::vector<int> region(g.vertex_count(), -1);
  std::vector<std::vector<int>> nb(g.vertex_count());
  for (const Arc& a : g.arcs()) {
    if (a.tail == v || a.head == v) continue;
    nb[a.tail].push_back(a.head);
    nb[a.head].push_back(a.tail);
  }
  for (EndId e : rot) {
    if (end_arc(e) == loop) continue;
    VertexId w = g.end_vertex(twin(e));
    if (w == v || region[w] != -1) continue;
    int side = side_of_end[e];
    std::vector<int> st{w};
    region[w] = side;
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      for (int y : nb[x])
        if (region[y] == -1) {
          region[y] = side;
          st.push_back(y);
        }
    }
  }
  for (int side = 0; side < 2; ++side) {
    std::vector<bool> keep_v(g.vertex_count(), false), keep_a(g.arc_count(), false);
    keep_v[v] = true;
    for (int x = 0; x < g.vertex_count(); ++x)
      if (region[x] == side) keep_v[x] = true;
    for (ArcId a = 0; a < g.arc_count(); ++a) {
      if (a == loop) continue;
      const Arc& ar = g.arc(a);
      if (ar.tail == v && ar.head == v) {
        keep_a[a] = side_of_end[tail_end(a)] == side;
      } else {
        keep_a[a] = keep_v[ar.tail] && keep_v[ar.head];
      }
    }
    Subgraph s = arc_subgraph(g, keep_a, keep_v, Mode::multi);
    std::vector<ArcId> amap;
    for (ArcId a : s.arc_to_parent) amap.push_back(arc_map[a]);
    std::vector<VertexId> vm;
    for (VertexId x : s.vertex_to_parent) vm.push_back(vmap[x]);
    split_rec(s.graph, amap, vm, out);
  }
}

}  // namespace

LoopSplit split_loops(const PlaneDigraph& d) {
  LoopSplit out;
  std::vector<ArcId> amap(d.arc_count());
  for (ArcId a = 0; a < d.arc_count(); ++a) amap[a] = a;
  std::vector<VertexId> vmap(d.vertex_count());
  for (VertexId v = 0; v < d.vertex_count(); ++v) vmap[v] = v;
  split_rec(d, amap, vmap, out);
  return out;
}

}  // namespace oa

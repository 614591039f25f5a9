#include "oa/completion_enum.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "oa/strongconn.hpp"
#include "oa/supports.hpp"

namespace oa {

namespace {

// Triangulations of the sub-polygon lo..hi (consecutive points), composed by callback chaining.
void triangulate(int lo, int hi, std::vector<std::pair<int, int>>& cur,
                 std::vector<std::vector<std::pair<int, int>>>& out, const std::function<void()>& done) {
  if (hi - lo < 2) {
    done();
    return;
  }
  // the triangle on edge (lo,hi) has apex r
  for (int r = lo + 1; r < hi; ++r) {
    size_t mark = cur.size();
    if (r - lo >= 2) cur.emplace_back(lo, r);
    if (hi - r >= 2) cur.emplace_back(r, hi);
    triangulate(lo, r, cur, out, [&] { triangulate(r, hi, cur, out, done); });
    cur.resize(mark);
  }
}

std::vector<NewArc> face_arcs_between(const PlaneDigraph& d, int face, const std::vector<int>& positions) {
  std::vector<NewArc> out;
  const Face& f = d.face(face);
  for (int p : positions)
    for (int q : positions) {
      if (f.vertex(p) == f.vertex(q)) continue;
      out.push_back({face, p, q});
    }
  return out;
}

void choose(const PlaneDigraph& d, const std::vector<NewArc>& cand, size_t from, int left, Mode mode, Completion& cur,
            const std::function<void(const Completion&)>& emit) {
  emit(cur);
  if (left == 0) return;
  for (size_t i = from; i < cand.size(); ++i) {
    if (!can_add_arc(d, cur, cand[i], mode)) continue;
    cur.push_back(cand[i]);
    choose(d, cand, i + 1, left - 1, mode, cur, emit);
    cur.pop_back();
  }
}

const FaceAnalysis& simple_face(const Classification& cls, int face) {
  const FaceAnalysis& fa = cls.faces.at(face);
  if (fa.cls.kind != FaceKind::Simple)
    throw Error(ErrorKind::NotSimpleFace, "face " + std::to_string(face) + " is " + face_kind_name(fa.cls.kind));
  return fa;
}

// positions of the face reachable by supports of up to 2*ell angles on some interval
std::vector<int> support_positions(const PlaneDigraph& d, const FaceAnalysis& fa, int ell) {
  const int len = d.face(fa.face).size();
  std::set<int> pos;
  auto add = [&](const Interval& it) {
    for (int o : support_reach(d, it, 2 * ell)) pos.insert((it.start + o) % len);
  };
  for (const Interval& t : fa.terminals) add(t);
  for (const Interval& p : fa.dipaths) add(p);
  return {pos.begin(), pos.end()};
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> enumerate_triangulations(int m) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (m < 3) return out;
  std::vector<std::pair<int, int>> cur;
  triangulate(0, m - 1, cur, out, [&] {
    auto t = cur;
    std::sort(t.begin(), t.end());
    out.push_back(t);
  });
  return out;
}

bool can_add_arc(const PlaneDigraph& d, const Completion& x, const NewArc& a, Mode mode) {
  auto [u, v] = new_arc_vertices(d, a);
  if (u == v) return false;
  if (d.has_arc(u, v)) return false;
  if (mode == Mode::oriented && d.has_arc(v, u)) return false;
  for (const NewArc& b : x) {
    if (b.face == a.face && chords_cross(a.tail, a.head, b.tail, b.head)) return false;
    auto [p, q] = new_arc_vertices(d, b);
    if (p == u && q == v) return false;
    if (mode == Mode::oriented && p == v && q == u) return false;
  }
  return true;
}

std::vector<Completion> supported_completions(const PlaneDigraph& d, const Classification& cls, int face, int ell,
                                              Mode mode) {
  std::vector<Completion> out;
  const FaceAnalysis& fa = cls.faces.at(face);
  if (fa.cls.kind == FaceKind::Strong || ell <= 0) return {Completion{}};
  std::vector<NewArc> cand = face_arcs_between(d, face, support_positions(d, fa, ell));
  Completion cur;
  choose(d, cand, 0, ell, mode, cur, [&](const Completion& x) {
    if (face_completion_supported(d, fa, x)) {
      Completion s = x;
      std::sort(s.begin(), s.end());
      out.push_back(s);
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Completion> minimal_simple_completions(const PlaneDigraph& d, const Classification& cls, int face) {
  simple_face(cls, face);
  std::vector<VertexId> vs;
  for (const Angle& a : d.face(face).boundary) vs.push_back(a.vertex);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::map<int, int> idx;
  for (size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = static_cast<int>(i);
  ArcPairs inside;
  for (const Arc& a : d.arcs())
    if (idx.count(a.tail) && idx.count(a.head)) inside.emplace_back(idx[a.tail], idx[a.head]);
  const int n = static_cast<int>(vs.size());
  const int base = scc(n, inside).count;
  std::vector<Completion> out;
  for (const Completion& x : simple_face_candidates(d, cls, face, d, 3)) {
    ArcPairs arcs = inside;
    for (const NewArc& na : x) {
      auto [u, v] = new_arc_vertices(d, na);
      arcs.emplace_back(idx[u], idx[v]);
    }
    if (scc(n, arcs).count < base) out.push_back(x);
  }
  return out;
}

std::vector<Completion> simple_face_candidates(const PlaneDigraph& d, const Classification& cls, int face,
                                               const PlaneDigraph& context, int max_arcs) {
  simple_face(cls, face);
  return filter_simple_candidates(d, supported_completions(d, cls, face, max_arcs), context);
}

std::vector<Completion> filter_simple_candidates(const PlaneDigraph& d, const std::vector<Completion>& pool,
                                                 const PlaneDigraph& context) {
  std::vector<EndId> same(2 * d.arc_count());
  for (EndId e = 0; e < 2 * d.arc_count(); ++e) same[e] = e;
  SccPartition cp = scc(context);
  const ArcPairs base = context.arc_pairs();
  std::vector<Completion> out;
  for (const Completion& x : pool) {
    if (x.empty()) continue;
    Completion cx = map_completion(d, context, x, same);
    Completion legal;
    bool ok = true;
    std::set<std::pair<int, int>> pairs;
    std::vector<std::pair<int, int>> xv;
    for (const NewArc& a : cx) {
      if (!can_add_arc(context, legal, a, Mode::oriented)) {
        ok = false;
        break;
      }
      legal.push_back(a);
      auto [u, v] = new_arc_vertices(context, a);
      int cu = cp.comp[u], cv = cp.comp[v];
      if (cu == cv || !pairs.insert({std::min(cu, cv), std::max(cu, cv)}).second) {
        ok = false;
        break;
      }
      xv.emplace_back(u, v);
    }
    if (!ok) continue;
    for (size_t i = 0; i < xv.size() && ok; ++i) {
      ArcPairs arcs = base;
      for (size_t j = 0; j < xv.size(); ++j)
        if (j != i) arcs.push_back(xv[j]);
      if (reachable_from(context.vertex_count(), arcs, xv[i].first)[xv[i].second]) ok = false;
    }
    if (ok) out.push_back(x);
  }
  return out;
}

std::uint64_t for_each_alternating_branch(const PlaneDigraph& d, const Classification& cls, int k, Mode mode,
                                          const std::function<bool(const Completion&)>& visit) {
  std::vector<std::vector<Completion>> per_face;
  for (const FaceAnalysis& fa : cls.faces)
    if (fa.cls.kind == FaceKind::Alternating) {
      auto all = mode == Mode::directed ? directed_supported_completions(d, cls, fa.face, k)
                                        : supported_completions(d, cls, fa.face, k, mode);
      per_face.push_back(std::move(all));
    }
  std::uint64_t count = 0;
  bool stop = false;
  Completion cur;
  std::function<void(size_t, int)> rec = [&](size_t i, int left) {
    if (stop) return;
    if (i == per_face.size()) {
      ++count;
      Completion s = cur;
      std::sort(s.begin(), s.end());
      if (!visit(s)) stop = true;
      return;
    }
    for (const Completion& x : per_face[i]) {
      if (static_cast<int>(x.size()) > left) continue;
      // arcs from different faces may still clash as parallel pairs or digons
      Completion joined = cur;
      bool ok = true;
      for (const NewArc& a : x) {
        Completion others(joined.begin(), joined.end());
        if (!can_add_arc(d, others, a, mode)) {
          ok = false;
          break;
        }
        joined.push_back(a);
      }
      if (!ok) continue;
      size_t mark = cur.size();
      cur = joined;
      rec(i + 1, left - static_cast<int>(x.size()));
      cur.resize(mark);
      if (stop) return;
    }
  };
  rec(0, k);
  return count;
}

std::vector<Completion> directed_supported_completions(const PlaneDigraph& d, const Classification& cls, int face,
                                                       int budget) {
  const FaceAnalysis& fa = cls.faces.at(face);
  std::vector<int> points;
  for (const Interval& t : fa.terminals) points.push_back(t.start);
  std::vector<NewArc> cand;
  const Face& f = d.face(face);
  const ArcPairs arcs = d.arc_pairs();
  std::vector<std::vector<char>> reach;
  for (VertexId v = 0; v < d.vertex_count(); ++v) reach.push_back(reachable_from(d.vertex_count(), arcs, v));
  // an arc whose tail already reaches its head never belongs to a minimal solution
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = 0; j < points.size(); ++j) {
      VertexId u = f.vertex(points[i]), v = f.vertex(points[j]);
      if (i != j && u != v && !reach[u][v]) cand.push_back({face, points[i], points[j]});
    }
  std::vector<Completion> out;
  Completion cur;
  choose(d, cand, 0, budget, Mode::directed, cur, [&](const Completion& x) {
    Completion s = x;
    std::sort(s.begin(), s.end());
    out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace oa

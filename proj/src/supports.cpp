#include "oa/supports.hpp"

#include <algorithm>
#include <set>

namespace oa {

namespace {

std::vector<char> face_mask(const PlaneDigraph& d, int face) {
  std::vector<char> in(d.vertex_count(), 0);
  for (const Angle& a : d.face(face).boundary) in[a.vertex] = 1;
  return in;
}

std::optional<VertexId> common_nb(const PlaneDigraph& d, const std::vector<char>& vf, VertexId a, VertexId b,
                                  SupportStats* stats) {
  if (a == b) return std::nullopt;
  std::optional<VertexId> found;
  for (EndId e : d.rotation(a)) {
    VertexId u = d.end_vertex(twin(e));
    if (u == a || u == b || !vf[u] || (found && *found == u)) continue;
    if (stats) ++stats->adjacency_queries;
    if (d.adjacent(u, b)) {
      if (found) throw Error(ErrorKind::MultipleCommonNeighbours,
                             "vertices " + std::to_string(a) + "," + std::to_string(b) + " share two neighbours on a face");
      found = u;
    }
  }
  return found;
}

// Supports along a walk of vertices (walk[0] is the extreme end the stack grows from).
std::vector<std::vector<int>> grow(const PlaneDigraph& d, const std::vector<char>& vf,
                                   const std::vector<VertexId>& walk, int q, SupportStats* stats) {
  const int r = static_cast<int>(walk.size());
  // leftmost non-neighbour of u at index >= from; occurrences of u itself block like neighbours
  auto non_nb = [&](VertexId u, int from) -> int {
    for (int h = from; h < r; ++h) {
      if (walk[h] == u) continue;
      if (stats) ++stats->adjacency_queries;
      if (!d.adjacent(u, walk[h])) return h;
    }
    return -1;
  };
  std::set<std::vector<int>> level;
  if (r == 0 || q <= 0) return {};
  level.insert({0});
  if (r >= 2) {
    level.insert({1});
    if (auto u = common_nb(d, vf, walk[0], walk[1], stats)) {
      int h = non_nb(*u, 2);
      if (h >= 0) level.insert({h});
    }
  }
  for (int lvl = 2; lvl <= q; ++lvl) {
    std::set<std::vector<int>> next;
    for (const auto& b : level) {
      int i = b.back();
      if (i + 1 < r) {
        auto c = b;
        c.push_back(i + 1);
        next.insert(c);
        if (auto u = common_nb(d, vf, walk[i], walk[i + 1], stats)) {
          int h = non_nb(*u, i + 2);
          if (h >= 0) {
            auto e = b;
            e.push_back(h);
            next.insert(e);
          }
        }
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

std::vector<VertexId> walk_of(const PlaneDigraph& d, const Interval& it, bool reversed) {
  const Face& f = d.face(it.face);
  std::vector<VertexId> w;
  for (int pos : it.positions(f.size())) w.push_back(f.vertex(pos));
  if (reversed) std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace

std::optional<VertexId> common_neighbour(const PlaneDigraph& d, int face, int pos_a, int pos_b, SupportStats* stats) {
  const Face& f = d.face(face);
  return common_nb(d, face_mask(d, face), f.vertex(pos_a), f.vertex(pos_b), stats);
}

SupportFamily left_supports(const PlaneDigraph& d, const Interval& interval, int q, SupportStats* stats) {
  SupportFamily s;
  s.interval = interval;
  s.side = Side::Left;
  s.q = q;
  s.members = grow(d, face_mask(d, interval.face), walk_of(d, interval, false), q, stats);
  return s;
}

SupportFamily right_supports(const PlaneDigraph& d, const Interval& interval, int q, SupportStats* stats) {
  SupportFamily s;
  s.interval = interval;
  s.side = Side::Right;
  s.q = q;
  const int r = interval.length;
  auto raw = grow(d, face_mask(d, interval.face), walk_of(d, interval, true), q, stats);
  for (auto& m : raw) {
    for (int& o : m) o = r - 1 - o;
    std::sort(m.begin(), m.end());
  }
  std::sort(raw.begin(), raw.end());
  s.members = std::move(raw);
  return s;
}

bool supported_on(const PlaneDigraph& d, const Interval& interval, const std::vector<int>& used_offsets) {
  std::vector<int> w = used_offsets;
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  const int q = static_cast<int>(w.size());
  if (q == 0) return true;
  if (q > interval.length) return false;
  auto zl = left_supports(d, interval, q).members;
  auto zr = right_supports(d, interval, q).members;
  for (const auto& bl : zl) {
    std::vector<int> rest;
    std::set_difference(w.begin(), w.end(), bl.begin(), bl.end(), std::back_inserter(rest));
    if (rest.empty()) return true;
    for (const auto& br : zr)
      if (std::includes(br.begin(), br.end(), rest.begin(), rest.end())) return true;
  }
  return false;
}

std::vector<int> support_reach(const PlaneDigraph& d, const Interval& interval, int qmax) {
  std::set<int> all;
  const int top = std::min(qmax, interval.length);
  for (int q = 1; q <= top; ++q) {
    for (const auto& m : left_supports(d, interval, q).members) all.insert(m.begin(), m.end());
    for (const auto& m : right_supports(d, interval, q).members) all.insert(m.begin(), m.end());
  }
  return {all.begin(), all.end()};
}

bool face_completion_supported(const PlaneDigraph& d, const FaceAnalysis& fa, const Completion& x_face) {
  const int len = d.face(fa.face).size();
  auto check = [&](const Interval& it) {
    std::vector<int> used;
    for (const NewArc& a : x_face) {
      if (a.face != fa.face) continue;
      for (int pos : {a.tail, a.head}) {
        int o = it.offset(pos, len);
        if (o >= 0) used.push_back(o);
      }
    }
    return supported_on(d, it, used);
  };
  for (const Interval& t : fa.terminals)
    if (!check(t)) return false;
  for (const Interval& p : fa.dipaths)
    if (!check(p)) return false;
  return true;
}

bool completion_supported(const PlaneDigraph& d, const Classification& cls, const Completion& x) {
  for (const FaceAnalysis& fa : cls.faces)
    if (!face_completion_supported(d, fa, x)) return false;
  return true;
}

}  // namespace oa

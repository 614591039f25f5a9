#include "oa/reconfigure.hpp"

#include <algorithm>
#include <tuple>

#include "oa/solvers.hpp"
#include "oa/strongconn.hpp"

namespace oa {

namespace {

int& end_pos(Completion& x, EndpointRef e) { return e.head ? x[e.arc].head : x[e.arc].tail; }
int end_pos(const Completion& x, EndpointRef e) { return e.head ? x[e.arc].head : x[e.arc].tail; }
int other_pos(const Completion& x, EndpointRef e) { return e.head ? x[e.arc].tail : x[e.arc].head; }

// landing on the partner itself makes a loop, which a multicompletion may hold
bool legal_at(const PlaneDigraph& d, int face, int pos, VertexId partner) {
  return !d.adjacent(d.face(face).vertex(pos), partner);
}

}  // namespace

bool is_multicompletion(const PlaneDigraph& d, const Completion& x) {
  for (size_t a = 0; a < x.size(); ++a) {
    const NewArc& na = x[a];
    if (na.face < 0 || na.face >= d.face_count()) return false;
    const int len = d.face(na.face).size();
    if (na.tail < 0 || na.tail >= len || na.head < 0 || na.head >= len) return false;
    auto [u, v] = new_arc_vertices(d, na);
    if (d.adjacent(u, v)) return false;
    for (size_t b = 0; b < a; ++b)
      if (x[b].face == na.face && chords_cross(na.tail, na.head, x[b].tail, x[b].head)) return false;
  }
  return true;
}

bool strong_with_multi(const PlaneDigraph& d, const Completion& x) {
  ArcPairs arcs = d.arc_pairs();
  for (const NewArc& a : x) arcs.push_back(new_arc_vertices(d, a));
  return is_strong(d.vertex_count(), arcs);
}

std::vector<EndpointRef> interval_endpoints(const PlaneDigraph& d, const Interval& interval, const Completion& x) {
  const int len = d.face(interval.face).size();
  std::vector<std::tuple<int, int, int, int>> keyed;
  for (int a = 0; a < static_cast<int>(x.size()); ++a) {
    if (x[a].face != interval.face) continue;
    for (int h = 0; h < 2; ++h) {
      int p = h ? x[a].head : x[a].tail;
      int q = h ? x[a].tail : x[a].head;
      int off = interval.offset(p, len);
      if (off < 0) continue;
      keyed.emplace_back(off, ((p - q) % len + len) % len, a, h);
    }
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<EndpointRef> out;
  for (auto& [off, key, a, h] : keyed) out.push_back({a, h != 0});
  return out;
}

ShiftResult shift(const PlaneDigraph& d, const Interval& interval, const Completion& x, EndpointRef e, Side dir) {
  ShiftResult r;
  r.x = x;
  auto order = interval_endpoints(d, interval, x);
  auto it = std::find(order.begin(), order.end(), e);
  if (e.arc < 0 || e.arc >= static_cast<int>(x.size()) || it == order.end())
    throw Error(ErrorKind::EndpointNotFound, "endpoint is not on the interval");
  const size_t idx = static_cast<size_t>(it - order.begin());
  const int len = d.face(interval.face).size();
  const int i = interval.offset(end_pos(x, e), len);
  r.from = r.to = i;
  const VertexId partner = d.face(interval.face).vertex(other_pos(x, e));
  auto pos_at = [&](int off) { return (interval.start + off) % len; };
  if (dir == Side::Left) {
    int m = idx > 0 ? interval.offset(end_pos(x, order[idx - 1]), len) : 0;
    for (int j = m; j < i; ++j)
      if (legal_at(d, interval.face, pos_at(j), partner)) {
        r.to = j;
        break;
      }
  } else {
    int big = idx + 1 < order.size() ? interval.offset(end_pos(x, order[idx + 1]), len) : interval.length - 1;
    for (int j = big; j > i; --j)
      if (legal_at(d, interval.face, pos_at(j), partner)) {
        r.to = j;
        break;
      }
  }
  if (r.to != i) {
    r.moved = true;
    end_pos(r.x, e) = pos_at(r.to);
  }
  return r;
}

namespace {

std::vector<EndpointRef> at_offset(const PlaneDigraph& d, const Interval& interval, const Completion& x, int off,
                                   const std::vector<EndpointRef>& only) {
  const int len = d.face(interval.face).size();
  std::vector<EndpointRef> out;
  for (EndpointRef e : interval_endpoints(d, interval, x)) {
    if (interval.offset(end_pos(x, e), len) != off) continue;
    if (!only.empty() && std::find(only.begin(), only.end(), e) == only.end()) continue;
    out.push_back(e);
  }
  return out;
}

}  // namespace

GatherResult gather(const PlaneDigraph& d, const Interval& interval, const Completion& x, int i, int j,
                    const std::vector<EndpointRef>& only) {
  const int len = d.face(interval.face).size();
  if (i >= j) throw Error(ErrorKind::GatherBlocked, "gather needs i < j");
  for (EndpointRef e : interval_endpoints(d, interval, x)) {
    int off = interval.offset(end_pos(x, e), len);
    if (off > i && off < j) throw Error(ErrorKind::GatherBlocked, "an endpoint lies strictly between the angles");
  }
  GatherResult g;
  // right: the rightmost endpoint at w_i goes first
  g.x = x;
  g.rightwards = true;
  bool ok = true;
  for (;;) {
    auto here = at_offset(d, interval, g.x, i, only);
    if (here.empty()) break;
    ShiftResult s = shift(d, interval, g.x, here.back(), Side::Right);
    if (!s.moved || s.to != j) {
      ok = false;
      break;
    }
    g.x = std::move(s.x);
  }
  if (ok) return g;
  g.x = x;
  g.rightwards = false;
  for (;;) {
    auto there = at_offset(d, interval, g.x, j, only);
    if (there.empty()) break;
    ShiftResult s = shift(d, interval, g.x, there.front(), Side::Left);
    if (!s.moved || s.to != i) throw Error(ErrorKind::GatherBlocked, "neither side gathers onto the other");
    g.x = std::move(s.x);
  }
  return g;
}

int left_stack_size(const PlaneDigraph& d, const Interval& interval, const Completion& x) {
  int n = 0;
  for (EndpointRef e : interval_endpoints(d, interval, x)) {
    if (shift(d, interval, x, e, Side::Left).moved) break;
    ++n;
  }
  return n;
}

int right_stack_size(const PlaneDigraph& d, const Interval& interval, const Completion& x) {
  auto order = interval_endpoints(d, interval, x);
  int n = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (shift(d, interval, x, *it, Side::Right).moved) break;
    ++n;
  }
  return n;
}

Completion prune_minimal(const PlaneDigraph& d, const Completion& x) {
  Completion cur = x;
  for (int a = static_cast<int>(cur.size()) - 1; a >= 0; --a) {
    Completion without = cur;
    without.erase(without.begin() + a);
    if (strong_with_multi(d, without)) cur = std::move(without);
  }
  return cur;
}

namespace {

struct Reconfigurer {
  const PlaneDigraph& d;
  ReconfigureStats st;

  void local_terminal(const Interval& t, Completion& x) {
    for (bool again = true; again;) {
      again = false;
      for (EndpointRef e : interval_endpoints(d, t, x)) {
        ShiftResult s = shift(d, t, x, e, Side::Left);
        if (!s.moved) continue;
        x = std::move(s.x);
        ++st.shifts;
        again = true;
        break;
      }
    }
  }

  void dipath(const Interval& p, Completion& x) {
    const int len = d.face(p.face).size();
    // phase 1: grow both stacks with shifts that keep D+X strong, left first
    std::vector<EndpointRef> middle;
    for (;;) {
      auto order = interval_endpoints(d, p, x);
      const int n = static_cast<int>(order.size());
      const int nl = left_stack_size(d, p, x), nr = right_stack_size(d, p, x);
      middle.clear();
      if (nl + nr >= n) return;
      middle.assign(order.begin() + nl, order.end() - nr);
      ShiftResult s = shift(d, p, x, middle.front(), Side::Left);
      if (s.moved && strong_with_multi(d, s.x)) {
        x = std::move(s.x);
        ++st.shifts;
        continue;
      }
      s = shift(d, p, x, middle.back(), Side::Right);
      if (s.moved && strong_with_multi(d, s.x)) {
        x = std::move(s.x);
        ++st.shifts;
        continue;
      }
      break;
    }
    // phase 2: stack the middle set on the left, then gather it onto one angle
    const Completion before = x;
    for (EndpointRef e : middle) {
      ShiftResult s = shift(d, p, x, e, Side::Left);
      if (s.moved) {
        x = std::move(s.x);
        ++st.shifts;
      }
    }
    try {
      for (;;) {
        std::vector<int> offs;
        for (EndpointRef e : middle) offs.push_back(p.offset(end_pos(x, e), len));
        std::sort(offs.begin(), offs.end());
        offs.erase(std::unique(offs.begin(), offs.end()), offs.end());
        if (offs.size() <= 1) break;
        x = gather(d, p, x, offs[0], offs[1], middle).x;
        ++st.gathers;
      }
    } catch (const Error&) {
      x = before;
    }
    if (is_multicompletion(d, x) && strong_with_multi(d, x)) return;
    // the common angle may be any angle of the dipath; take the leftmost that works
    ++st.fallbacks;
    for (int g = 0; g < p.length; ++g) {
      Completion y = before;
      for (EndpointRef e : middle) end_pos(y, e) = (p.start + g) % len;
      if (is_multicompletion(d, y) && strong_with_multi(d, y)) {
        x = std::move(y);
        return;
      }
    }
    x = before;
  }
};

}  // namespace

Completion to_supported(const PlaneDigraph& d, const Completion& x, ReconfigureStats* stats) {
  if (!verify_solution(d, x, Mode::oriented).ok) throw Error(ErrorKind::NotASolution, "input is not a solution");
  Classification cls = classify_all(d);
  Reconfigurer rc{d, {}};
  Completion cur = prune_minimal(d, x);
  rc.st.pruned = static_cast<int>(x.size() - cur.size());
  if (completion_supported(d, cls, cur) && verify_solution(d, cur, Mode::oriented).ok) {
    std::sort(cur.begin(), cur.end());
    if (stats) *stats = rc.st;
    return cur;
  }
  for (int round = 0; round < 4; ++round) {
    for (const FaceAnalysis& fa : cls.faces) {
      for (const Interval& t : fa.terminals) rc.local_terminal(t, cur);
      for (const Interval& p : fa.dipaths) rc.dipath(p, cur);
    }
    Completion next = prune_minimal(d, cur);
    rc.st.pruned += static_cast<int>(cur.size() - next.size());
    cur = std::move(next);
    if (completion_supported(d, cls, cur) && verify_solution(d, cur, Mode::oriented).ok) {
      std::sort(cur.begin(), cur.end());
      if (stats) *stats = rc.st;
      return cur;
    }
  }
  if (stats) *stats = rc.st;
  throw Error(ErrorKind::GatherBlocked, "reconfiguration did not reach a supported solution");
}

}  // namespace oa

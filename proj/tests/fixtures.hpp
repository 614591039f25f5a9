#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "oa/plane_graph.hpp"

namespace fx {

using oa::Arc;
using oa::Mode;
using oa::PlaneDigraph;

inline PlaneDigraph cycle3(Mode m = Mode::oriented) {
  return oa::build_from_positions(3, {{0, 1}, {1, 2}, {2, 0}}, {{0, 0}, {1, 0}, {0, 1}}, m);
}

inline PlaneDigraph path3(Mode m = Mode::oriented) {
  return oa::build_from_positions(3, {{0, 1}, {1, 2}}, {{0, 0}, {1, 0}, {2, 0.5}}, m);
}

inline PlaneDigraph k4(Mode m = Mode::oriented) {
  return oa::build_from_positions(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}},
                                  {{0, 0}, {0, 1}, {-1, -1}, {1, -1}}, m);
}

// 0=s, 1=x, 2=t, 3=y with s->x->t and s->y->t
inline PlaneDigraph square_st(Mode m = Mode::oriented) {
  return oa::build_from_positions(4, {{0, 1}, {1, 2}, {0, 3}, {3, 2}}, {{0, 0}, {1, 0}, {1, 1}, {0, 1}}, m);
}

// 8-cycle whose vertices alternate between sources (even) and sinks (odd)
inline PlaneDigraph alt_cycle(int len = 8, Mode m = Mode::oriented) {
  std::vector<Arc> arcs;
  std::vector<std::pair<double, double>> xy;
  for (int i = 0; i < len; ++i) {
    double t = 2 * 3.14159265358979 * i / len;
    xy.push_back({std::cos(t), std::sin(t)});
    int j = (i + 1) % len;
    arcs.push_back(i % 2 == 0 ? Arc{i, j} : Arc{j, i});
  }
  return oa::build_from_positions(len, arcs, xy, m);
}

inline PlaneDigraph directed_cycle(int len, Mode m = Mode::oriented) {
  std::vector<Arc> arcs;
  std::vector<std::pair<double, double>> xy;
  for (int i = 0; i < len; ++i) {
    double t = 2 * 3.14159265358979 * i / len;
    xy.push_back({std::cos(t), std::sin(t)});
    arcs.push_back({i, (i + 1) % len});
  }
  return oa::build_from_positions(len, arcs, xy, m);
}

// directed triangle 0->1->2->0 with a pendant sink on each corner: 0->3, 1->4, 2->5
inline PlaneDigraph pendant_triangle(Mode m = Mode::oriented) {
  return oa::build_from_positions(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}, {2, 5}},
                                  {{0, 0}, {2, 0}, {1, 1.7}, {-1, -0.6}, {3, -0.6}, {1, 3}}, m);
}

// 0->1->...->n-1 on a line
inline PlaneDigraph dipath(int n, Mode m = Mode::oriented) {
  std::vector<Arc> arcs;
  std::vector<std::pair<double, double>> xy;
  for (int i = 0; i < n; ++i) {
    xy.push_back({static_cast<double>(i), 0.1 * (i % 2)});
    if (i + 1 < n) arcs.push_back({i, i + 1});
  }
  return oa::build_from_positions(n, arcs, xy, m);
}

// first boundary position of vertex v on face f, -1 if absent
inline int pos_of(const PlaneDigraph& d, int f, int v) {
  const auto& face = d.face(f);
  for (int i = 0; i < face.size(); ++i)
    if (face.vertex(i) == v) return i;
  return -1;
}

// a face containing all listed vertices
inline int face_with(const PlaneDigraph& d, std::vector<int> vs, bool prefer_inner = true) {
  int found = -1;
  for (int f = 0; f < d.face_count(); ++f) {
    bool all = true;
    for (int v : vs) all = all && pos_of(d, f, v) >= 0;
    if (!all) continue;
    if (!prefer_inner || !d.face(f).outer) return f;
    if (found < 0) found = f;
  }
  return found;
}

inline int largest_face(const PlaneDigraph& d) {
  int best = 0;
  for (int f = 1; f < d.face_count(); ++f)
    if (d.face(f).size() > d.face(best).size()) best = f;
  return best;
}

// random non-crossing chords between distinct vertices, valid in multi mode
inline oa::Completion random_chords(const PlaneDigraph& d, std::mt19937_64& rng, int count) {
  oa::Completion x;
  if (d.arc_count() == 0) return x;
  for (int tries = 0; tries < 20 * count && static_cast<int>(x.size()) < count; ++tries) {
    int f = static_cast<int>(rng() % d.face_count());
    int len = d.face(f).size();
    int p = static_cast<int>(rng() % len), q = static_cast<int>(rng() % len);
    if (d.face(f).vertex(p) == d.face(f).vertex(q)) continue;
    bool ok = true;
    for (auto& a : x)
      if (a.face == f && oa::chords_cross(a.tail, a.head, p, q)) ok = false;
    if (ok) x.push_back({f, p, q});
  }
  return x;
}

}  // namespace fx

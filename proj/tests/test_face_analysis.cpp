#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oa/face_analysis.hpp"
#include "oa/random_gen.hpp"

using namespace oa;

namespace {

// directed triangle 0->1->2->0 with pendant sinks 3 (from 0) and 4 (from 1) in the outer face
PlaneDigraph triangle_with_pendants() {
  return build_from_positions(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}},
                              {{0, 0}, {2, 0}, {1, 2}, {-1, -1}, {3, -1}}, Mode::oriented);
}

// 8-cycle s->x->t<-y<-s'->z->t'<-w<-s : two sources, two sinks, every dipath one vertex long
PlaneDigraph spaced_alternating() {
  std::vector<std::pair<double, double>> xy;
  for (int i = 0; i < 8; ++i) {
    double t = 2 * 3.14159265358979 * i / 8;
    xy.push_back({std::cos(t), std::sin(t)});
  }
  // 0=s 1=x 2=t 3=y 4=s' 5=z 6=t' 7=w
  return build_from_positions(8, {{0, 1}, {1, 2}, {3, 2}, {4, 3}, {4, 5}, {5, 6}, {7, 6}, {0, 7}}, xy,
                              Mode::oriented);
}

}  // namespace

TEST_CASE("faces of a directed triangle are strong") {
  PlaneDigraph d = fx::cycle3();
  Classification c = classify_all(d);
  for (const FaceAnalysis& fa : c.faces) {
    CHECK(fa.cls.kind == FaceKind::Strong);
    CHECK(fa.strong.size() == 1);
    CHECK(fa.strong[0].length == 3);
    CHECK(fa.terminals.empty());
    CHECK(fa.dipaths.empty());
  }
}

TEST_CASE("alternating 8-cycle") {
  PlaneDigraph d = fx::alt_cycle(8);
  Classification c = classify_all(d);
  REQUIRE(c.faces.size() == 2);
  for (const FaceAnalysis& fa : c.faces) {
    CHECK(fa.strong.size() == 8);
    CHECK(fa.cls.kind == FaceKind::Alternating);
    CHECK(fa.cls.lt == 8);
    auto [src, snk] = local_terminals(d, c.scc, fa.face);
    CHECK(src.size() == 4);
    CHECK(snk.size() == 4);
    for (size_t i = 0; i < fa.terminals.size(); ++i)
      CHECK(fa.terminals[i].kind != fa.terminals[(i + 1) % fa.terminals.size()].kind);
  }
  CHECK(c.census.sum_lt == 16);
  CHECK(c.census.sum_nonlocal == 0);
  CHECK(c.census.two_arcs == 16);
  CHECK(c.census.identity_holds());
  CHECK(c.census.dag_bound_holds());
}

TEST_CASE("square with one source and one sink is simple on both sides") {
  PlaneDigraph d = fx::square_st();
  Classification c = classify_all(d);
  for (const FaceAnalysis& fa : c.faces) {
    CHECK(fa.cls.kind == FaceKind::Simple);
    CHECK(fa.dipaths.size() == 2);
    auto [src, snk] = local_terminals(d, c.scc, fa.face);
    REQUIRE(src.size() == 1);
    REQUIRE(snk.size() == 1);
    CHECK(d.face(fa.face).vertex(src[0].start) == 0);
    CHECK(d.face(fa.face).vertex(snk[0].start) == 2);
  }
}

TEST_CASE("lt=4 face with spaced terminals has four dipaths") {
  PlaneDigraph d = spaced_alternating();
  Classification c = classify_all(d);
  for (const FaceAnalysis& fa : c.faces) {
    CHECK(fa.cls.lt == 4);
    CHECK(fa.dipaths.size() == 4);
    for (const Interval& p : fa.dipaths) CHECK(p.length == 1);
  }
  CHECK(interval_dipaths(d, c.scc, 0).size() == 4);
}

TEST_CASE("a component touching a face twice gives two strong intervals") {
  PlaneDigraph d = triangle_with_pendants();
  Classification c = classify_all(d);
  int tri = c.scc.comp[0];
  int outer = -1;
  for (const Face& f : d.faces())
    if (f.size() == 7) outer = f.id;
  REQUIRE(outer >= 0);
  const FaceAnalysis& fa = c.faces[outer];
  int tri_intervals = 0;
  for (const Interval& it : fa.strong) tri_intervals += c.scc.comp[d.face(outer).vertex(it.start)] == tri;
  CHECK(tri_intervals == 2);
  CHECK(fa.cls.lt == 4);
  CHECK(fa.cls.kind == FaceKind::Alternating);
  CHECK(c.census.identity_holds());
}

TEST_CASE("empty-arc graph has one strong face") {
  PlaneDigraph d = PlaneDigraph::build(1, {}, {{}}, Mode::oriented);
  Classification c = classify_all(d);
  REQUIRE(c.faces.size() == 1);
  CHECK(c.faces[0].cls.kind == FaceKind::Strong);
}

TEST_CASE("property: tiling, alternation, census and dipath reachability") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 400; ++it) {
    RandomPlaneOptions opt;
    opt.n = 2 + static_cast<int>(rng() % 9);
    opt.extra_edge_prob = static_cast<double>(rng() % 100) / 100.0;
    opt.acyclic_bias = (it % 2) ? 1.0 : 0.0;
    PlaneDigraph d = random_plane_graph(opt, rng());
    Classification c = classify_all(d);
    const Census& s = c.census;
    CHECK(s.identity_holds());
    CHECK(s.dag_bound_holds());
    CHECK(s.alternating_bound_holds());
    if (s.acyclic) CHECK(s.sum_lt + s.sum_nonlocal == s.two_arcs);
    if (s.acyclic && s.terminals == 2) CHECK(s.sum_lt_minus_2 <= 0);
    auto pairs = d.arc_pairs();
    for (const FaceAnalysis& fa : c.faces) {
      const Face& f = d.face(fa.face);
      const int len = f.size();
      CHECK(fa.cls.lt % 2 == 0);
      int covered = 0;
      for (const Interval& t : fa.terminals) covered += t.length;
      for (const Interval& p : fa.dipaths) covered += p.length;
      if (fa.cls.lt == 0)
        CHECK(covered == 0);
      else
        CHECK(covered == len);
      for (size_t i = 0; i < fa.terminals.size(); ++i)
        CHECK(fa.terminals[i].kind != fa.terminals[(i + 1) % fa.terminals.size()].kind);
      // along each dipath, reachability runs one way between every ordered pair
      for (const Interval& p : fa.dipaths) {
        std::vector<int> vs;
        vs.push_back(f.vertex((p.start + len - 1) % len));
        for (int pos : p.positions(len)) vs.push_back(f.vertex(pos));
        vs.push_back(f.vertex((p.end + 1) % len));
        bool fwd = true, bwd = true;
        for (size_t i = 0; i < vs.size(); ++i) {
          auto reach = reachable_from(d.vertex_count(), pairs, vs[i]);
          for (size_t j = 0; j < vs.size(); ++j) {
            if (i < j && !reach[vs[j]]) fwd = false;
            if (i > j && !reach[vs[j]]) bwd = false;
          }
        }
        CHECK((fwd || bwd));
      }
    }
  }
}

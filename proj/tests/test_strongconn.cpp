#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oa/random_gen.hpp"
#include "oa/strongconn.hpp"

using namespace oa;

namespace {

// v=0 with a loop whose inside holds v->a->b and outside v->c->d
PlaneDigraph loop_with_two_sides() {
  std::vector<Arc> arcs{{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 0}};
  std::vector<std::vector<EndId>> rot{{8, 0, 9, 4}, {1, 2}, {3}, {5, 6}, {7}};
  return PlaneDigraph::build(5, arcs, rot, Mode::multi);
}

}  // namespace

TEST_CASE("path has three trivial components") {
  SccPartition p = scc(fx::path3());
  CHECK(p.count == 3);
  CHECK(p.source[p.comp[0]]);
  CHECK(p.sink[p.comp[2]]);
  CHECK_FALSE(p.source[p.comp[1]]);
  CHECK_FALSE(p.sink[p.comp[1]]);
  CHECK(p.terminal_count() == 2);
}

TEST_CASE("directed triangle is one component without terminals") {
  SccPartition p = scc(fx::cycle3());
  CHECK(p.count == 1);
  CHECK(p.strong());
  CHECK(p.terminal_count() == 0);
}

TEST_CASE("four-cycle with pendant structure forms one non-trivial component") {
  // 0->1->2->3->0 plus 4->0 and 2->5
  PlaneDigraph d = build_from_positions(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {2, 5}},
                                        {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {-1, -0.5}, {2, 1.5}}, Mode::oriented);
  SccPartition p = scc(d);
  CHECK(p.count == 3);
  CHECK(p.members[p.comp[0]] == std::vector<int>{0, 1, 2, 3});
  CHECK(p.source[p.comp[4]]);
  CHECK(p.sink[p.comp[5]]);
}

TEST_CASE("condensing an acyclic graph is the identity") {
  PlaneDigraph d = fx::alt_cycle(6);
  CondensationResult c = condense(d);
  CHECK(c.contraction_log.empty());
  CHECK(c.condensed.arc_pairs() == d.arc_pairs());
  CHECK(c.condensed.rotations() == d.rotations());
}

TEST_CASE("a digon condenses to one vertex with a loop") {
  PlaneDigraph d = PlaneDigraph::build(2, {{0, 1}, {1, 0}}, {{0, 3}, {1, 2}}, Mode::directed);
  CondensationResult c = condense(d);
  CHECK(c.condensed.vertex_count() == 1);
  CHECK(c.condensed.arc_count() == 1);
  CHECK(c.condensed.arc(0).tail == c.condensed.arc(0).head);
  CHECK(c.contraction_log == std::vector<ArcId>{0});
}

TEST_CASE("condensing the four-cycle example merges it into one vertex") {
  PlaneDigraph d = build_from_positions(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {2, 5}},
                                        {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {-1, -0.5}, {2, 1.5}}, Mode::oriented);
  CondensationResult c = condense(d);
  CHECK(c.condensed.vertex_count() == 3);
  CHECK(c.contraction_log.size() == 3);
  // the remaining cycle arc becomes a loop
  int loops = 0;
  for (const Arc& a : c.condensed.arcs()) loops += a.tail == a.head;
  CHECK(loops == 1);
  CHECK(c.condensed.vertex_count() - c.condensed.arc_count() + c.condensed.face_count() == 2);
}

TEST_CASE("property: condensation is acyclic up to loops and keeps Euler") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 300; ++it) {
    RandomPlaneOptions opt;
    opt.n = 2 + static_cast<int>(rng() % 9);
    opt.extra_edge_prob = 0.6;
    opt.mode = Mode::oriented;
    PlaneDigraph d = random_plane_graph(opt, rng());
    CondensationResult c = condense(d);
    const PlaneDigraph& g = c.condensed;
    SccPartition p = scc(g);
    CHECK(p.count == g.vertex_count());
    CHECK(g.vertex_count() - g.arc_count() + g.face_count() == 2);
    CHECK(g.arc_count() + static_cast<int>(c.contraction_log.size()) == d.arc_count());
    // replaying the contractions gives the same arc multiset
    std::multiset<std::pair<int, int>> expect, got;
    std::vector<bool> contracted(d.arc_count(), false);
    for (ArcId a : c.contraction_log) contracted[a] = true;
    for (ArcId a = 0; a < d.arc_count(); ++a)
      if (!contracted[a]) expect.insert({c.vertex_map[d.arc(a).tail], c.vertex_map[d.arc(a).head]});
    for (const Arc& a : g.arcs()) got.insert({a.tail, a.head});
    CHECK(expect == got);
  }
}

TEST_CASE("lifting rejects non-solutions") {
  PlaneDigraph d = fx::path3();
  CondensationResult c = condense(d);
  try {
    lift_solution(d, c, {});
    FAIL("expected NotASolution");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotASolution);
  }
}

TEST_CASE("lifting the empty solution of a strong graph") {
  PlaneDigraph strong = fx::directed_cycle(5);
  CondensationResult c = condense(strong);
  CHECK(lift_solution(strong, c, {}).empty());
}

TEST_CASE("lifting through a digon lands on the recorded side") {
  // digon 0<->1 with pendant arcs 0->2 and 3->1 on opposite sides
  std::vector<Arc> arcs{{0, 1}, {1, 0}, {0, 2}, {3, 1}};
  std::vector<std::vector<EndId>> rot{{0, 3, 4}, {1, 7, 2}, {5}, {6}};
  PlaneDigraph d = PlaneDigraph::build(4, arcs, rot, Mode::directed);
  CondensationResult c = condense(d);
  const PlaneDigraph& g = c.condensed;
  REQUIRE(g.vertex_count() == 3);
  // one arc from the sink 2 to the source 3 suffices; find the face that hosts it
  int sink = c.vertex_map[2], src = c.vertex_map[3];
  Completion best;
  bool found = false;
  for (int f = 0; f < g.face_count() && !found; ++f) {
    int ps = fx::pos_of(g, f, sink), pt = fx::pos_of(g, f, src);
    if (ps < 0 || pt < 0) continue;
    Completion x{{f, ps, pt}};
    try {
      PlaneDigraph aug = insert_arcs(g, x, Mode::directed);
      if (is_strong(aug.vertex_count(), aug.arc_pairs())) {
        best = x;
        found = true;
      }
    } catch (const Error&) {
    }
  }
  REQUIRE(found);
  Completion lifted = lift_solution(d, c, best);
  CHECK(lifted.size() == 1);
  PlaneDigraph aug = insert_arcs(d, lifted, Mode::directed);
  CHECK(is_strong(aug.vertex_count(), aug.arc_pairs()));
}

TEST_CASE("loopless graph is a single part") {
  LoopSplit s = split_loops(fx::alt_cycle(6, Mode::multi));
  CHECK(s.parts.size() == 1);
}

TEST_CASE("lone loop splits into two empty parts") {
  PlaneDigraph d = PlaneDigraph::build(1, {{0, 0}}, {{0, 1}}, Mode::multi);
  LoopSplit s = split_loops(d);
  REQUIRE(s.parts.size() == 2);
  for (auto& p : s.parts) {
    CHECK(p.graph.vertex_count() == 1);
    CHECK(p.graph.arc_count() == 0);
  }
}

TEST_CASE("loop separates inside and outside") {
  LoopSplit s = split_loops(loop_with_two_sides());
  REQUIRE(s.parts.size() == 2);
  std::set<std::vector<int>> sides;
  for (auto& p : s.parts) sides.insert(p.vertex_to_parent);
  CHECK(sides.count({0, 1, 2}) == 1);
  CHECK(sides.count({0, 3, 4}) == 1);
  for (auto& p : s.parts) CHECK(p.graph.arc_count() == 2);
}

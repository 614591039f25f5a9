#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oa/dijoin.hpp"
#include "oa/face_analysis.hpp"
#include "oa/random_gen.hpp"
#include "oa/solvers.hpp"

using namespace oa;

namespace {

// smallest subset size of arcs whose reversal makes the digraph strong, or -1 above k
int subset_min_dijoin(int n, const ArcPairs& arcs, int k) {
  const int m = static_cast<int>(arcs.size());
  int best = -1;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    int sz = __builtin_popcount(mask);
    if (sz > k || (best >= 0 && sz >= best)) continue;
    std::vector<int> y;
    for (int a = 0; a < m; ++a)
      if (mask >> a & 1) y.push_back(a);
    if (is_dijoin(n, arcs, y)) best = sz;
  }
  return best;
}

// minimum subset of `pool` (size <= k) that verifies as an oriented solution, -1 if none
int subset_min_solution(const PlaneDigraph& d, const Completion& pool, int k) {
  const int m = static_cast<int>(pool.size());
  int best = -1;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    int sz = __builtin_popcount(mask);
    if (sz > k || (best >= 0 && sz >= best)) continue;
    Completion x;
    for (int a = 0; a < m; ++a)
      if (mask >> a & 1) x.push_back(pool[a]);
    if (verify_solution(d, x, Mode::oriented).ok) best = sz;
  }
  return best;
}

}  // namespace

TEST_CASE("dijoin membership examples") {
  CHECK(is_dijoin(2, {{0, 1}}, {0}));
  CHECK(is_dijoin(3, {{0, 1}, {1, 2}, {2, 0}}, {}));
  CHECK_FALSE(is_dijoin(3, {{0, 1}, {1, 2}}, {0}));
  try {
    is_dijoin(2, {{0, 1}}, {3});
    FAIL("expected UnknownArc");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownArc);
  }
}

TEST_CASE("minimum dijoins of small digraphs") {
  auto path = min_dijoin_upto(3, {{0, 1}, {1, 2}}, 3);
  REQUIRE(path);
  CHECK(path->size() == 2);
  auto star = min_dijoin_upto(4, {{0, 1}, {0, 2}, {0, 3}}, 3);
  REQUIRE(star);
  CHECK(star->size() == 3);
  CHECK_FALSE(min_dijoin_upto(4, {{0, 1}, {0, 2}, {0, 3}}, 2));
  auto cyc = min_dijoin_upto(3, {{0, 1}, {1, 2}, {2, 0}}, 0);
  REQUIRE(cyc);
  CHECK(cyc->empty());
}

TEST_CASE("property: branch search matches subset brute force") {
  std::mt19937_64 rng(8);
  for (int it = 0; it < 600; ++it) {
    int n = 2 + static_cast<int>(rng() % 5);
    int m = 1 + static_cast<int>(rng() % 8);
    ArcPairs arcs;
    for (int i = 0; i < m; ++i) {
      int u = rng() % n, v = rng() % n;
      if (u == v) v = (u + 1) % n;
      arcs.emplace_back(u, v);
    }
    for (int k = 0; k <= 3; ++k) {
      int expect = subset_min_dijoin(n, arcs, k);
      auto got = min_dijoin_upto(n, arcs, k);
      CHECK(got.has_value() == (expect >= 0));
      if (got) {
        CHECK(static_cast<int>(got->size()) == expect);
        CHECK(is_dijoin(n, arcs, *got));
      }
    }
  }
}

TEST_CASE("auxiliary graph without allowed arcs is a subdivision") {
  PlaneDigraph d = fx::path3();
  DijoinInstance inst = build_auxiliary(d, {}, 2, Mode::oriented);
  CHECK(inst.arcs.size() == 6);
  CHECK(inst.n == 3 + 4);
  CHECK_FALSE(min_dijoin_upto(inst.n, inst.arcs, 2));
  PlaneDigraph c = fx::directed_cycle(4);
  DijoinInstance sc = build_auxiliary(c, {}, 2, Mode::oriented);
  auto y = min_dijoin_upto(sc.n, sc.arcs, 2);
  REQUIRE(y);
  CHECK(y->empty());
}

TEST_CASE("single candidate on a directed path") {
  // 0->1->2->3 drawn on a convex arc: the (3,0) chord closes it
  PlaneDigraph d = build_from_positions(4, {{0, 1}, {1, 2}, {2, 3}}, {{0, 0}, {1, 1}, {2, 1}, {3, 0}}, Mode::oriented);
  int f = 0;
  NewArc ts{f, fx::pos_of(d, f, 3), fx::pos_of(d, f, 0)};
  std::vector<AllowedFace> allowed{{0, {ts}}};
  DijoinInstance inst = build_auxiliary(d, allowed, 1, Mode::oriented);
  CHECK(inst.candidates.size() == 1);
  auto y = min_dijoin_upto(inst.n, inst.arcs, 1);
  REQUIRE(y);
  Completion x = extract_solution(inst, *y);
  CHECK(x == Completion{ts});
  CHECK(verify_solution(d, x, Mode::oriented).ok);
  // budget 0 is not enough
  DijoinInstance inst0 = build_auxiliary(d, allowed, 0, Mode::oriented);
  CHECK_FALSE(min_dijoin_upto(inst0.n, inst0.arcs, 0));
}

TEST_CASE("two candidates give two independent gadgets") {
  PlaneDigraph d = build_from_positions(4, {{0, 1}, {1, 2}, {2, 3}}, {{0, 0}, {1, 1}, {2, 1}, {3, 0}}, Mode::oriented);
  int f = 0;
  Completion two{{f, fx::pos_of(d, f, 3), fx::pos_of(d, f, 0)}, {f, fx::pos_of(d, f, 2), fx::pos_of(d, f, 0)}};
  // the two chords share vertex 0 and do not cross
  DijoinInstance inst = build_auxiliary(d, {{0, two}}, 1, Mode::oriented);
  CHECK(inst.gadget_vertex.size() == 2);
  CHECK(inst.gadget_vertex[0] != inst.gadget_vertex[1]);
  for (auto [u, v] : inst.arcs) {
    bool ux = u == inst.gadget_vertex[0] || u == inst.gadget_vertex[1];
    bool vx = v == inst.gadget_vertex[0] || v == inst.gadget_vertex[1];
    CHECK_FALSE((ux && vx));
  }
  int gadgets = 0;
  for (char g : inst.gadget) gadgets += g;
  CHECK(gadgets == 2);
}

TEST_CASE("non-candidates and non-gadget arcs are rejected") {
  PlaneDigraph d = fx::path3();
  NewArc back{0, fx::pos_of(d, 0, 1), fx::pos_of(d, 0, 0)};  // digon with 0->1
  try {
    build_auxiliary(d, {{0, {back}}}, 1, Mode::oriented);
    FAIL("expected NotACandidate");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotACandidate);
  }
  DijoinInstance inst = build_auxiliary(d, {}, 1, Mode::oriented);
  try {
    extract_solution(inst, {0});
    FAIL("expected NonGadgetArcInY");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonGadgetArcInY);
  }
}

TEST_CASE("property: auxiliary dijoin agrees with search inside the allowed arcs") {
  std::mt19937_64 rng(99);
  int scenarios = 0, positive = 0;
  for (int it = 0; it < 400; ++it) {
    RandomPlaneOptions opt;
    opt.n = 3 + static_cast<int>(rng() % 5);
    opt.extra_edge_prob = 0.3;
    PlaneDigraph d = random_plane_graph(opt, rng());
    Classification c = classify_all(d);
    std::vector<AllowedFace> allowed;
    Completion pool;
    for (const FaceAnalysis& fa : c.faces) {
      if (fa.cls.kind != FaceKind::Simple || allowed.size() == 2) continue;
      const Face& f = d.face(fa.face);
      AllowedFace af;
      const Interval& src = fa.terminals[0].kind == IntervalKind::LocalSource ? fa.terminals[0] : fa.terminals[1];
      af.source = f.vertex(src.start);
      // random non-crossing insertable chords
      for (int tries = 0; tries < 12 && af.arcs.size() < 3; ++tries) {
        int p = rng() % f.size(), q = rng() % f.size();
        NewArc na{fa.face, p, q};
        Completion trial = af.arcs;
        trial.push_back(na);
        try {
          insert_arcs(d, trial, Mode::oriented);
          af.arcs = trial;
        } catch (const Error&) {
        }
      }
      if (af.arcs.empty()) continue;
      pool.insert(pool.end(), af.arcs.begin(), af.arcs.end());
      allowed.push_back(af);
    }
    if (allowed.empty() || pool.size() > 8) continue;
    ++scenarios;
    for (int k = 0; k <= 2; ++k) {
      DijoinInstance inst = build_auxiliary(d, allowed, k, Mode::oriented);
      auto y = min_dijoin_upto(inst.n, inst.arcs, k);
      int expect = subset_min_solution(d, pool, k);
      CHECK(y.has_value() == (expect >= 0));
      if (y) {
        ++positive;
        for (int a : *y) CHECK(inst.gadget[a]);
        Completion x = extract_solution(inst, *y);
        CHECK(static_cast<int>(x.size()) == expect);
        CHECK(verify_solution(d, x, Mode::oriented).ok);
      }
    }
  }
  CHECK(scenarios > 50);
  CHECK(positive > 5);
}

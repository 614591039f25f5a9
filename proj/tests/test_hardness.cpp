#include <algorithm>
#include <set>

#include "doctest.h"
#include "oa/hardness_gen.hpp"
#include "oa/solvers.hpp"
#include "oa/strongconn.hpp"

using namespace oa;

namespace {

Literal P(int v) { return {v, true}; }
Literal N(int v) { return {v, false}; }

std::set<VertexId> sources_of(const PlaneDigraph& d, const Completion& x, int* sink_components = nullptr) {
  ArcPairs arcs = d.arc_pairs();
  for (const NewArc& a : x) arcs.push_back(new_arc_vertices(d, a));
  SccPartition p = scc(d.vertex_count(), arcs);
  std::set<VertexId> out;
  for (int c = 0; c < p.count; ++c)
    if (p.source[c]) out.insert(p.members[c].begin(), p.members[c].end());
  if (sink_components) *sink_components = p.sink_count();
  return out;
}

std::set<std::pair<VertexId, VertexId>> pairs_of(const PlaneDigraph& d, const Completion& x) {
  std::set<std::pair<VertexId, VertexId>> out;
  for (const NewArc& a : x) out.insert(new_arc_vertices(d, a));
  return out;
}

PlanarCnf single(std::array<Literal, 3> c, int vars) {
  auto all = plane_embeddings(vars, {c});
  REQUIRE(all.size() == 1);
  return all[0];
}

}  // namespace

TEST_CASE("literal gadget shape") {
  GadgetInstance g = literal_gadget();
  CHECK(g.graph.vertex_count() == 12);
  CHECK(g.graph.arc_count() == 13);
  int fives = 0;
  for (const Face& f : g.graph.faces()) fives += f.size() == 5;
  CHECK(fives == 2);
  const LiteralPorts& p = g.literals[0];
  SccPartition s = scc(g.graph);
  for (VertexId v : {p.b, p.l, p.r}) CHECK(s.sink[s.comp[v]]);
  CHECK_FALSE(s.sink[s.comp[p.t]]);
}

TEST_CASE("literal completions: positive leaves bl, tr; negative leaves br, tl") {
  GadgetInstance g = literal_gadget();
  const LiteralPorts& p = g.literals[0];
  int sinks = 0;
  Completion pos = literal_completion(g.graph, p, true);
  CHECK(pairs_of(g.graph, pos) == std::set<std::pair<VertexId, VertexId>>{{p.r, p.t}, {p.t, p.br}, {p.l, p.b}, {p.b, p.tl}});
  auto s = sources_of(g.graph, pos, &sinks);
  s.erase(p.bp), s.erase(p.lp), s.erase(p.tp), s.erase(p.rp);  // twins point into the gadget
  CHECK(s == std::set<VertexId>{p.bl, p.tr});
  CHECK(sinks == 1);
  Completion neg = literal_completion(g.graph, p, false);
  s = sources_of(g.graph, neg, &sinks);
  s.erase(p.bp), s.erase(p.lp), s.erase(p.tp), s.erase(p.rp);
  CHECK(s == std::set<VertexId>{p.br, p.tl});
  CHECK(sinks == 1);
}

TEST_CASE("literal census: exactly two valid completions hit each bottom source") {
  GadgetInstance g = literal_gadget();
  const LiteralPorts& p = g.literals[0];
  auto br = literal_completions_hitting(g, p.br);
  REQUIRE(br.size() == 2);
  std::set<std::set<std::pair<VertexId, VertexId>>> got{pairs_of(g.graph, br[0]), pairs_of(g.graph, br[1])};
  std::set<std::set<std::pair<VertexId, VertexId>>> want{
      {{p.r, p.t}, {p.t, p.br}, {p.l, p.b}, {p.b, p.tl}},
      {{p.r, p.t}, {p.t, p.br}, {p.b, p.l}, {p.l, p.t}}};
  CHECK(got == want);
  auto bl = literal_completions_hitting(g, p.bl);
  REQUIRE(bl.size() == 2);
  got = {pairs_of(g.graph, bl[0]), pairs_of(g.graph, bl[1])};
  want = {{{p.l, p.t}, {p.t, p.bl}, {p.r, p.b}, {p.b, p.tr}}, {{p.l, p.t}, {p.t, p.bl}, {p.b, p.r}, {p.r, p.t}}};
  CHECK(got == want);
}

TEST_CASE("variable gadget: two maximal partitions inside the literal faces") {
  for (int n : {2, 3}) {
    GadgetInstance g = variable_gadget(n);
    CHECK(g.graph.vertex_count() == 12 * n - 2 * n - (n - 1));
    CHECK(variable_maximal_partitions(g).size() == 2);
  }
  CHECK_THROWS_AS(variable_gadget(1), Error);
  try {
    variable_gadget(1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidArity);
  }
}

TEST_CASE("variable gadget n=2: positive completion keeps top sources apart") {
  GadgetInstance g = variable_gadget(2);
  Completion x = variable_completion(g.graph, g, 0, true);
  CHECK(x.size() == 4 * 2 + 2 + 1);
  CHECK_FALSE(verify_solution(g.graph, x, Mode::oriented).error.has_value());
  int sinks = 0;
  auto s = sources_of(g.graph, x, &sinks);
  const LiteralPorts& a = g.literals[0];
  const LiteralPorts& b = g.literals[1];
  // the t' twins only become reachable once joined to clauses
  CHECK(s == std::set<VertexId>{a.tr, b.tr, a.tp, b.tp});
  CHECK(sinks == 1);
  s = sources_of(g.graph, variable_completion(g.graph, g, 0, false));
  CHECK(s == std::set<VertexId>{a.tl, b.tl, a.tp, b.tp});
}

TEST_CASE("variable gadget n=5: positive completion is the literal completions plus the closing arcs") {
  GadgetInstance g = variable_gadget(5);
  Completion x = variable_completion(g.graph, g, 0, true);
  auto pr = pairs_of(g.graph, x);
  for (const LiteralPorts& p : g.literals) {
    for (auto e : pairs_of(g.graph, literal_completion(g.graph, p, true))) CHECK(pr.count(e));
    CHECK(pr.count({p.br, p.rp}));
  }
  CHECK(pr.count({g.literals[0].br, g.variables[0].bottom}));
  CHECK(pr.size() == 5 * 4 + 5 + 1);
}

TEST_CASE("clause gadget: 15 vertices, inner triangulation, one source triangle and three sink 4-cycles") {
  GadgetInstance g = clause_gadget();
  const PlaneDigraph& d = g.graph;
  CHECK(d.vertex_count() == 15);
  SccPartition s = scc(d);
  CHECK(s.source_count() == 1);
  CHECK(s.sink_count() == 3);
  for (int c = 0; c < s.count; ++c) {
    if (s.source[c]) CHECK(s.members[c].size() == 3);
    if (s.sink[c]) CHECK(s.members[c].size() == 4);
  }
  const ClausePorts& p = g.clauses[0];
  CHECK(s.source[s.comp[p.v[0]]]);
  CHECK(s.comp[p.v[0]] == s.comp[p.v[2]]);
  int triangles = 0;
  for (const Face& f : d.faces()) triangles += f.size() == 3;
  CHECK(triangles == d.face_count() - 1);
  for (const NewArc& a : candidate_arcs(d, Mode::oriented)) CHECK(d.face(a.face).size() > 3);
}

TEST_CASE("reduce (x | ~y | ~z): local structure around the clause") {
  PlanarCnf f = single({P(0), N(1), N(2)}, 3);
  Reduction r = reduce(f);
  const PlaneDigraph& d = r.gadget.graph;
  CHECK(r.padding_clauses == 1);
  CHECK(r.padded.clauses.size() == 2);
  CHECK(d.mode() == Mode::oriented);
  CHECK(d.connected());
  CHECK(d.vertex_count() - d.arc_count() + d.face_count() == 2);
  const ClausePorts& c = r.gadget.clauses[0];
  const LiteralPorts& x = r.gadget.literals[r.literal_of_incidence[0]];
  const LiteralPorts& y = r.gadget.literals[r.literal_of_incidence[1]];
  const LiteralPorts& z = r.gadget.literals[r.literal_of_incidence[2]];
  CHECK(c.v[0] == x.tl);
  CHECK(c.u[0] == x.tp);
  CHECK(c.w[0] == x.lp);
  CHECK(c.v[1] == y.tr);
  CHECK(c.u[1] == y.rp);
  CHECK(c.w[1] == y.tp);
  CHECK(c.v[2] == z.tr);
  CHECK(c.u[2] == z.rp);
  CHECK(c.w[2] == z.tp);
  // (x, y): positive then negative adds nothing; (y, z): r'_z -> tl_y; (z, x): t'_z -> tr_x -> tl_z
  CHECK_FALSE(d.adjacent(x.lp, y.tr));
  CHECK(d.has_arc(z.rp, y.tl));
  CHECK(d.has_arc(z.tp, x.tr));
  CHECK(d.has_arc(x.tr, z.tl));
}

TEST_CASE("satisfying assignments map to verified augmentations") {
  PlanarCnf f = single({P(0), N(1), N(2)}, 3);
  Reduction r = reduce(f);
  int ok = 0;
  for (int m = 0; m < 8; ++m) {
    std::vector<bool> a{(m & 1) != 0, (m & 2) != 0, (m & 4) != 0};
    if (!satisfies(f, a)) {
      CHECK_THROWS_AS(assignment_to_augmentation(r, a), Error);
      continue;
    }
    Completion x = assignment_to_augmentation(r, a);
    CHECK(verify_solution(r.gadget.graph, x, Mode::oriented).ok);
    ++ok;
  }
  CHECK(ok == 7);
}

TEST_CASE("x true, y false: the clause source joins the sink components") {
  PlanarCnf f = single({P(0), N(1), N(2)}, 3);
  Reduction r = reduce(f);
  const PlaneDigraph& d = r.gadget.graph;
  Completion x;
  for (int v = 0; v < 3; ++v) {
    Completion y = variable_completion(d, r.gadget, v, v == 0);
    x.insert(x.end(), y.begin(), y.end());
  }
  ArcPairs arcs = d.arc_pairs();
  for (const NewArc& a : x) arcs.push_back(new_arc_vertices(d, a));
  SccPartition s = scc(d.vertex_count(), arcs);
  const ClausePorts& c = r.gadget.clauses[0];
  const LiteralPorts& lx = r.gadget.literals[r.literal_of_incidence[0]];
  CHECK(s.comp[c.v[0]] == s.comp[lx.b]);
  CHECK(s.comp[c.m_out[0]] == s.comp[lx.b]);
}

TEST_CASE("all-true leaves an all-negative clause false") {
  PlanarCnf f = single({N(0), N(1), N(2)}, 3);
  try {
    assignment_to_augmentation(f, {true, true, true});
    FAIL("expected AssignmentDoesNotSatisfy");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AssignmentDoesNotSatisfy);
  }
}

TEST_CASE("unsatisfiable formula: the reduction admits a strong augmentation through the variable 4-faces") {
  // Known gap: chords of the faces around b' and the merged r' twins hit internal sinks from
  // outside the literal 5-faces, so the variable gadget no longer forces one truth value.
  auto all = plane_embeddings(1, {{P(0), P(0), P(0)}, {N(0), N(0), N(0)}});
  REQUIRE(all.size() == 1);
  CHECK_FALSE(find_assignment(all[0]).has_value());
  Reduction r = reduce(all[0]);
  const PlaneDigraph& d = r.gadget.graph;
  AugmentabilityReport a = decide_augmentable(d);
  REQUIRE(a.verdict == Verdict::Yes);
  CHECK(verify_solution(d, a.witness, Mode::oriented).ok);
  bool outside = false;
  for (const NewArc& x : a.witness) outside = outside || d.face(x.face).size() == 4;
  CHECK(outside);
}

TEST_CASE("linearity: size over occurrences plus clauses stays under the pinned constant") {
  std::vector<std::vector<std::array<Literal, 3>>> family{
      {{P(0), N(1), N(2)}},
      {{P(0), P(1), P(2)}, {N(0), N(1), P(3)}},
      {{P(0), P(0), N(1)}, {N(0), P(1), P(1)}},
      {{P(0), P(1), N(2)}, {P(2), N(3), N(0)}}};
  for (const auto& cl : family) {
    int vars = 0;
    for (const auto& c : cl)
      for (const Literal& l : c) vars = std::max(vars, l.var + 1);
    for (const PlanarCnf& f : plane_embeddings(vars, cl)) {
      Reduction r = reduce(f);
      const int size = 3 * static_cast<int>(r.padded.clauses.size()) + static_cast<int>(r.padded.clauses.size());
      CHECK(r.gadget.graph.vertex_count() <= kLinearityConstant * size);
      CHECK(r.gadget.graph.mode() == Mode::oriented);
    }
  }
}

TEST_CASE("plane_embeddings dedupes isomorphic rotations") {
  CHECK(plane_embeddings(3, {{P(0), P(1), P(2)}}).size() == 1);
  // two clauses on the same three variables: the two clause triangles either agree or disagree
  auto two = plane_embeddings(3, {{P(0), P(1), P(2)}, {N(0), N(1), N(2)}});
  CHECK(two.size() >= 1);
  for (const PlanarCnf& f : two) CHECK_NOTHROW(validate_cnf(f));
}

TEST_CASE("extended DIMACS round trip and errors") {
  PlanarCnf f = plane_embeddings(4, {{P(0), P(1), N(2)}, {P(2), N(3), N(0)}}).front();
  std::string text = write_dimacs(f);
  PlanarCnf g = parse_dimacs(text);
  CHECK(write_dimacs(g) == text);
  CHECK(g.clauses == f.clauses);
  CHECK(g.rotv == f.rotv);

  PlanarCnf h = parse_dimacs("c plain\np cnf 3 1\n1 -2 3 0\n");
  CHECK(h.variables == 3);
  CHECK(h.occurrences(1) == 1);

  auto kind = [](const std::string& s) {
    try {
      parse_dimacs(s);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::UsageError;
  };
  CHECK(kind("p cnf 3 1\n1 2 0\n") == ErrorKind::InvalidArity);
  CHECK(kind("p cnf 3 1\n1 2 x 0\n") == ErrorKind::ParseError);
  CHECK(kind("1 2 3 0\n") == ErrorKind::ParseError);
  CHECK(kind("p cnf 3 1\n1 2 3 0\nrotv 1 1\nrotv 2 1\nrotv 3 1\nrotc 1 1 2 4\n") == ErrorKind::EmbeddingConflict);
  try {
    parse_dimacs("p cnf 3 1\n\n1 2 q 0\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("validate_cnf rejects inconsistent rotations") {
  PlanarCnf f = single({P(0), N(1), N(2)}, 3);
  PlanarCnf bad = f;
  bad.rotv[0] = {1};
  CHECK_THROWS_AS(validate_cnf(bad), Error);
  PlanarCnf lonely = f;
  lonely.variables = 4;
  lonely.rotv.push_back({});
  try {
    validate_cnf(lonely);
    FAIL("expected EmbeddingConflict");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmbeddingConflict);
  }
}

TEST_CASE("a clause holding x and ~x is rejected") {
  auto all = plane_embeddings(2, {{P(0), N(0), P(1)}});
  REQUIRE_FALSE(all.empty());
  for (const PlanarCnf& f : all) {
    try {
      reduce(f);
      FAIL("expected EmbeddingConflict");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::EmbeddingConflict);
      CHECK(std::string(e.what()).find("both x1") != std::string::npos);
    }
  }
}

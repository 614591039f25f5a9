#include "oa/hardness_gen.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "oa/completion_enum.hpp"
#include "oa/solvers.hpp"
#include "oa/strongconn.hpp"

namespace oa {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Rotation system under construction. Vertices are identified by splicing rotations at corners;
// a corner is named by the end it follows clockwise.
struct MapBuilder {
  std::vector<Arc> arcs;
  std::vector<std::vector<EndId>> rot;
  std::vector<char> alive;

  VertexId add(const PlaneDigraph& g) {
    const int off = static_cast<int>(rot.size());
    const int eoff = 2 * static_cast<int>(arcs.size());
    for (const Arc& a : g.arcs()) arcs.push_back({a.tail + off, a.head + off});
    for (int v = 0; v < g.vertex_count(); ++v) {
      std::vector<EndId> r;
      for (EndId e : g.rotation(v)) r.push_back(e + eoff);
      rot.push_back(std::move(r));
      alive.push_back(1);
    }
    return off;
  }

  VertexId vertex_of(EndId e) const { return end_is_tail(e) ? arcs[end_arc(e)].tail : arcs[end_arc(e)].head; }

  int index_of(EndId e) const {
    const auto& r = rot[vertex_of(e)];
    return static_cast<int>(std::find(r.begin(), r.end(), e) - r.begin());
  }
  EndId next(EndId e) const {
    const auto& r = rot[vertex_of(e)];
    return r[(index_of(e) + 1) % r.size()];
  }
  EndId prev(EndId e) const {
    const auto& r = rot[vertex_of(e)];
    return r[(index_of(e) + r.size() - 1) % r.size()];
  }

  EndId end_to(VertexId a, VertexId b) const {
    EndId found = -1;
    for (EndId e : rot[a])
      if (vertex_of(twin(e)) == b) {
        if (found != -1) throw std::logic_error("several arcs between two gadget vertices");
        found = e;
      }
    if (found == -1) throw std::logic_error("gadget vertices are not adjacent");
    return found;
  }

  // face id of every dart, traced as in PlaneDigraph
  std::vector<int> faces() const {
    std::vector<int> f(2 * arcs.size(), -1);
    int id = 0;
    for (EndId s = 0; s < static_cast<int>(f.size()); ++s) {
      if (f[s] != -1) continue;
      EndId d = s;
      do {
        f[d] = id;
        d = next(twin(d));
      } while (d != s);
      ++id;
    }
    return f;
  }
  int face_after(const std::vector<int>& f, EndId e) const { return f[next(e)]; }

  bool connected(VertexId a, VertexId b) const {
    std::vector<char> seen(rot.size());
    std::vector<VertexId> st{a};
    seen[a] = 1;
    while (!st.empty()) {
      VertexId v = st.back();
      st.pop_back();
      if (v == b) return true;
      for (EndId e : rot[v]) {
        VertexId w = vertex_of(twin(e));
        if (!seen[w]) {
          seen[w] = 1;
          st.push_back(w);
        }
      }
    }
    return false;
  }

  // b disappears into a; the corners after ea and after eb become one vertex
  void splice(VertexId a, EndId ea, VertexId b, EndId eb) {
    if (a == b) throw std::logic_error("splicing a vertex with itself");
    if (connected(a, b)) {
      auto f = faces();
      if (face_after(f, ea) != face_after(f, eb)) throw Error(ErrorKind::EmbeddingConflict, "identified corners lie on different faces");
    }
    std::vector<EndId> merged;
    const auto& ra = rot[a];
    const auto& rb = rot[b];
    const int ia = index_of(ea), ib = index_of(eb);
    for (int k = 0; k <= ia; ++k) merged.push_back(ra[k]);
    for (size_t k = 1; k <= rb.size(); ++k) merged.push_back(rb[(ib + k) % rb.size()]);
    for (size_t k = ia + 1; k < ra.size(); ++k) merged.push_back(ra[k]);
    for (EndId e : rb) (end_is_tail(e) ? arcs[end_arc(e)].tail : arcs[end_arc(e)].head) = a;
    rot[a] = std::move(merged);
    rot[b].clear();
    alive[b] = 0;
  }

  void add_arc(VertexId u, EndId eu, VertexId v, EndId ev) {
    auto f = faces();
    if (face_after(f, eu) != face_after(f, ev)) throw std::logic_error("new gadget arc would cross the embedding");
    const ArcId a = static_cast<ArcId>(arcs.size());
    const int iu = index_of(eu), iv = index_of(ev);
    arcs.push_back({u, v});
    rot[u].insert(rot[u].begin() + iu + 1, tail_end(a));
    rot[v].insert(rot[v].begin() + iv + 1, head_end(a));
  }

  std::vector<EndId> corners_on(const std::vector<int>& f, VertexId v, int face) const {
    std::vector<EndId> out;
    for (EndId e : rot[v])
      if (face_after(f, e) == face) out.push_back(e);
    return out;
  }

  void add_arc_on_face(VertexId u, VertexId v, int face) {
    auto f = faces();
    auto cu = corners_on(f, u, face), cv = corners_on(f, v, face);
    if (cu.size() != 1 || cv.size() != 1) throw std::logic_error("arc endpoints are not unique on the chosen face");
    add_arc(u, cu[0], v, cv[0]);
  }

  // the only face where both have corners
  void add_arc_common_face(VertexId u, VertexId v) {
    auto f = faces();
    std::set<int> fu, fv;
    for (EndId e : rot[u]) fu.insert(face_after(f, e));
    for (EndId e : rot[v]) fv.insert(face_after(f, e));
    std::vector<int> common;
    std::set_intersection(fu.begin(), fu.end(), fv.begin(), fv.end(), std::back_inserter(common));
    if (common.size() != 1) throw std::logic_error("arc endpoints share no unique face");
    add_arc_on_face(u, v, common[0]);
  }

  // compact ids; returns the builder-to-graph vertex map
  PlaneDigraph finish(std::vector<VertexId>& map) const {
    map.assign(rot.size(), -1);
    int n = 0;
    for (size_t v = 0; v < rot.size(); ++v)
      if (alive[v]) map[v] = n++;
    std::vector<Arc> out;
    for (const Arc& a : arcs) out.push_back({map[a.tail], map[a.head]});
    std::vector<std::vector<EndId>> r(n);
    for (size_t v = 0; v < rot.size(); ++v)
      if (alive[v]) r[map[v]] = rot[v];
    PlaneDigraph d = PlaneDigraph::build(n, std::move(out), std::move(r), Mode::oriented);
    if (!d.connected() || d.vertex_count() - d.arc_count() + d.face_count() != 2)
      throw Error(ErrorKind::EmbeddingConflict, "gadget assembly is not a connected plane graph");
    return d;
  }
};

enum L { Lb, Lbl, Ll, Ltl, Lt, Ltr, Lr, Lbr, Lbp, Llp, Ltp, Lrp };

PlaneDigraph literal_graph() {
  std::vector<Arc> arcs{{Lbl, Lb}, {Lbl, Ll}, {Ltl, Ll}, {Ltl, Lt}, {Ltr, Lt}, {Ltr, Lr}, {Lbr, Lr},
                        {Lbr, Lb}, {Lbp, Lb}, {Llp, Ll}, {Ltp, Lt}, {Lrp, Lr}, {Lt, Lb}};
  const double c = 1.4;
  std::vector<std::pair<double, double>> xy{{0, -2}, {-c, -c}, {-2, 0}, {-c, c}, {0, 2},  {c, c},
                                            {2, 0},  {c, -c},  {0, -3}, {-3, 0}, {0, 3}, {3, 0}};
  return build_from_positions(12, arcs, xy, Mode::oriented);
}

LiteralPorts literal_ports(VertexId off) {
  return {off + Lb,  off + Lbl, off + Ll,  off + Ltl, off + Lt,  off + Ltr,
          off + Lr,  off + Lbr, off + Lbp, off + Llp, off + Ltp, off + Lrp};
}

// v: 0..2, m_in: 3..5, u: 6..8, w: 9..11, m_out: 12..14
PlaneDigraph clause_graph() {
  std::vector<Arc> arcs;
  std::vector<std::pair<double, double>> xy(15);
  auto at = [](double r, double deg) { return std::pair<double, double>{r * std::cos(deg * kPi / 180), r * std::sin(deg * kPi / 180)}; };
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const double th = 90.0 - 120.0 * i;
    xy[i] = at(1, th);
    xy[3 + i] = at(2, th - 60);
    xy[6 + i] = at(3, th + 25);
    xy[9 + i] = at(3, th - 25);
    xy[12 + i] = at(3.6, th - 60);
    arcs.push_back({i, j});
    arcs.push_back({i, 3 + i});
    arcs.push_back({j, 3 + i});
    arcs.push_back({i, 6 + i});
    arcs.push_back({i, 9 + i});
    arcs.push_back({9 + i, 3 + i});
    arcs.push_back({3 + i, 6 + j});
    arcs.push_back({6 + j, 12 + i});
    arcs.push_back({12 + i, 9 + i});
    arcs.push_back({12 + i, 3 + i});
  }
  return build_from_positions(15, arcs, xy, Mode::oriented);
}

ClausePorts clause_ports(VertexId off) {
  ClausePorts p;
  for (int i = 0; i < 3; ++i) {
    p.v[i] = off + i;
    p.m_in[i] = off + 3 + i;
    p.u[i] = off + 6 + i;
    p.w[i] = off + 9 + i;
    p.m_out[i] = off + 12 + i;
  }
  return p;
}

VariablePorts add_variable(MapBuilder& mb, std::vector<LiteralPorts>& lits, int n) {
  if (n < 2) throw Error(ErrorKind::InvalidArity, "a variable gadget needs at least two occurrences");
  VariablePorts vp;
  const int first = static_cast<int>(lits.size());
  for (int i = 0; i < n; ++i) {
    lits.push_back(literal_ports(mb.add(literal_graph())));
    vp.literals.push_back(first + i);
  }
  auto P = [&](int i) -> LiteralPorts& { return lits[first + ((i % n) + n) % n]; };
  // b' of every literal becomes one vertex, literals clockwise around it
  const VertexId bp = P(0).bp;
  for (int i = 1; i < n; ++i) {
    mb.splice(bp, mb.end_to(bp, P(i - 1).b), P(i).bp, mb.rot[P(i).bp][0]);
    P(i).bp = bp;
  }
  vp.bottom = bp;
  for (int i = 0; i < n; ++i) {
    mb.splice(P(i).br, mb.end_to(P(i).br, P(i).r), P(i + 1).bl, mb.end_to(P(i + 1).bl, P(i + 1).b));
    P(i + 1).bl = P(i).br;
  }
  for (int i = 0; i < n; ++i) {
    mb.splice(P(i).rp, mb.end_to(P(i).rp, P(i).r), P(i + 1).lp, mb.end_to(P(i + 1).lp, P(i + 1).l));
    P(i + 1).lp = P(i).rp;
  }
  return vp;
}

void remap(LiteralPorts& p, const std::vector<VertexId>& m) {
  for (VertexId* v : {&p.b, &p.bl, &p.l, &p.tl, &p.t, &p.tr, &p.r, &p.br, &p.bp, &p.lp, &p.tp, &p.rp}) *v = m[*v];
}

void remap(ClausePorts& p, const std::vector<VertexId>& m) {
  for (auto* arr : {&p.v, &p.u, &p.w, &p.m_in, &p.m_out})
    for (VertexId& v : *arr) v = m[v];
}

void remap(GadgetInstance& g, const std::vector<VertexId>& m) {
  for (auto& p : g.literals) remap(p, m);
  for (auto& p : g.clauses) remap(p, m);
  for (auto& v : g.variables) v.bottom = m[v.bottom];
}

// the arc u->v inside the unique face holding all of `around`
NewArc arc_in_face(const PlaneDigraph& d, VertexId u, VertexId v, std::initializer_list<VertexId> around) {
  int found = -1;
  for (const Face& f : d.faces()) {
    if (f.size() != static_cast<int>(around.size())) continue;
    bool all = true;
    for (VertexId w : around) {
      bool has = false;
      for (int p = 0; p < f.size() && !has; ++p) has = f.vertex(p) == w;
      all = all && has;
    }
    if (!all) continue;
    if (found != -1) throw std::logic_error("gadget face is not unique");
    found = f.id;
  }
  if (found == -1) throw std::logic_error("gadget face not found");
  const Face& f = d.face(found);
  int pu = -1, pv = -1;
  for (int p = 0; p < f.size(); ++p) {
    if (f.vertex(p) == u) {
      if (pu != -1) throw std::logic_error("repeated vertex on a gadget face");
      pu = p;
    }
    if (f.vertex(p) == v) {
      if (pv != -1) throw std::logic_error("repeated vertex on a gadget face");
      pv = p;
    }
  }
  return {found, pu, pv};
}

int find_face(const PlaneDigraph& d, std::initializer_list<VertexId> around) {
  NewArc a = arc_in_face(d, *around.begin(), *around.begin(), around);
  return a.face;
}

// all completions made of legal, pairwise compatible slots among `cand`
void all_completions(const PlaneDigraph& d, const std::vector<NewArc>& cand, size_t i, Completion& cur,
                     const std::function<void(const Completion&)>& emit) {
  if (i == cand.size()) {
    emit(cur);
    return;
  }
  all_completions(d, cand, i + 1, cur, emit);
  if (can_add_arc(d, cur, cand[i], Mode::oriented)) {
    cur.push_back(cand[i]);
    all_completions(d, cand, i + 1, cur, emit);
    cur.pop_back();
  }
}

std::vector<NewArc> slots_in(const PlaneDigraph& d, std::initializer_list<int> faces) {
  std::vector<NewArc> out;
  for (const NewArc& a : candidate_arcs(d, Mode::oriented))
    if (std::find(faces.begin(), faces.end(), a.face) != faces.end()) out.push_back(a);
  return out;
}

std::vector<Completion> inclusion_maximal(const PlaneDigraph& d, const std::vector<NewArc>& cand) {
  std::vector<Completion> out;
  Completion cur;
  all_completions(d, cand, 0, cur, [&](const Completion& x) {
    for (const NewArc& a : cand)
      if (std::find(x.begin(), x.end(), a) == x.end() && can_add_arc(d, x, a, Mode::oriented)) return;
    out.push_back(x);
  });
  return out;
}

bool hits_out(const PlaneDigraph& d, const Completion& x, VertexId v) {
  for (const NewArc& a : x)
    if (new_arc_vertices(d, a).first == v) return true;
  return false;
}

bool hits_in(const PlaneDigraph& d, const Completion& x, VertexId v) {
  for (const NewArc& a : x)
    if (new_arc_vertices(d, a).second == v) return true;
  return false;
}

std::vector<int> canonical_partition(const SccPartition& p) {
  std::vector<int> relabel(p.count, -1), out(p.comp.size());
  int next = 0;
  for (size_t v = 0; v < p.comp.size(); ++v) {
    int& r = relabel[p.comp[v]];
    if (r == -1) r = next++;
    out[v] = r;
  }
  return out;
}

// q is a coarsening of p
bool coarser(const std::vector<int>& q, const std::vector<int>& p) {
  std::map<int, int> img;
  for (size_t v = 0; v < p.size(); ++v) {
    auto [it, fresh] = img.emplace(p[v], q[v]);
    if (!fresh && it->second != q[v]) return false;
  }
  return true;
}

std::vector<int> incidences_of(const PlanarCnf& f, int x) {
  std::vector<int> out;
  for (size_t c = 0; c < f.clauses.size(); ++c)
    for (int s = 0; s < 3; ++s)
      if (f.clauses[c][s].var == x) out.push_back(static_cast<int>(3 * c + s));
  return out;
}

bool embeds(const PlanarCnf& f) {
  try {
    validate_cnf(f);
    return true;
  } catch (const Error&) {
    return false;
  }
}

// variables occurring once get their first clause duplicated, mirrored, wherever it embeds
std::pair<PlanarCnf, int> pad(PlanarCnf f) {
  int added = 0;
  for (;;) {
    int x = -1;
    for (int v = 0; v < f.variables; ++v)
      if (f.occurrences(v) < 2) {
        x = v;
        break;
      }
    if (x == -1) break;
    const int c = f.rotv[x][0] / 3;
    bool done = false;
    for (bool mirrored : {true, false}) {
      const std::array<int, 3> from = mirrored ? std::array<int, 3>{0, 2, 1} : std::array<int, 3>{0, 1, 2};
      PlanarCnf g = f;
      const int cn = static_cast<int>(g.clauses.size());
      g.clauses.push_back({f.clauses[c][from[0]], f.clauses[c][from[1]], f.clauses[c][from[2]]});
      // try insertion points in lexicographic order
      std::function<bool(int, PlanarCnf&)> place = [&](int k, PlanarCnf& h) -> bool {
        if (k == 3) {
          if (!embeds(h)) return false;
          f = h;
          return true;
        }
        const int var = h.clauses[cn][k].var;
        const int len = static_cast<int>(h.rotv[var].size());
        for (int p = 0; p <= len; ++p) {
          PlanarCnf t = h;
          t.rotv[var].insert(t.rotv[var].begin() + p, 3 * cn + k);
          if (place(k + 1, t)) return true;
        }
        return false;
      };
      if (place(0, g)) {
        done = true;
        break;
      }
    }
    if (!done) throw Error(ErrorKind::EmbeddingConflict, "no plane position for a padding clause");
    ++added;
  }
  return {f, added};
}

}  // namespace

PlaneDigraph incidence_graph(const PlanarCnf& f) {
  const int nv = f.variables, nc = static_cast<int>(f.clauses.size());
  std::vector<Arc> arcs;
  for (int c = 0; c < nc; ++c)
    for (int s = 0; s < 3; ++s) arcs.push_back({f.clauses[c][s].var, nv + c});
  std::vector<std::vector<EndId>> rot(nv + nc);
  for (int x = 0; x < nv; ++x)
    for (int i : f.rotv[x]) rot[x].push_back(tail_end(i));
  for (int c = 0; c < nc; ++c)
    for (int s = 0; s < 3; ++s) rot[nv + c].push_back(head_end(3 * c + s));
  return PlaneDigraph::build(nv + nc, std::move(arcs), std::move(rot), Mode::multi);
}

void validate_cnf(const PlanarCnf& f) {
  if (f.variables < 1 || f.clauses.empty()) throw Error(ErrorKind::InvalidArity, "empty formula");
  if (static_cast<int>(f.rotv.size()) != f.variables) throw Error(ErrorKind::EmbeddingConflict, "rotation list per variable missing");
  for (const auto& cl : f.clauses)
    for (const Literal& l : cl)
      if (l.var < 0 || l.var >= f.variables) throw Error(ErrorKind::InvalidArity, "literal outside the variable range");
  std::vector<int> seen(3 * f.clauses.size(), 0);
  for (int x = 0; x < f.variables; ++x) {
    for (int i : f.rotv[x]) {
      if (i < 0 || i >= static_cast<int>(seen.size()) || f.clauses[i / 3][i % 3].var != x || seen[i]++)
        throw Error(ErrorKind::EmbeddingConflict, "variable rotation does not match the clauses");
    }
  }
  for (int s : seen)
    if (s != 1) throw Error(ErrorKind::EmbeddingConflict, "an incidence is missing from the rotations");
  PlaneDigraph g = incidence_graph(f);
  if (!g.connected()) throw Error(ErrorKind::EmbeddingConflict, "incidence graph is disconnected");
  if (g.vertex_count() - g.arc_count() + g.face_count() != 2)
    throw Error(ErrorKind::EmbeddingConflict, "rotations do not describe a plane embedding");
}

bool satisfies(const PlanarCnf& f, const std::vector<bool>& a) {
  if (static_cast<int>(a.size()) != f.variables) return false;
  for (const auto& cl : f.clauses) {
    bool ok = false;
    for (const Literal& l : cl) ok = ok || a[l.var] == l.positive;
    if (!ok) return false;
  }
  return true;
}

std::optional<std::vector<bool>> find_assignment(const PlanarCnf& f) {
  if (f.variables > 24) throw Error(ErrorKind::BudgetTooLargeForOracle, "too many variables for exhaustive search");
  std::vector<bool> a(f.variables);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << f.variables); ++m) {
    for (int x = 0; x < f.variables; ++x) a[x] = (m >> x) & 1;
    if (satisfies(f, a)) return a;
  }
  return std::nullopt;
}

namespace {

// code of a breadth-first walk from incidence `start` at its variable; minimal over starts
// identifies the embedded formula up to orientation-preserving relabelling
std::vector<int> walk_code(const PlanarCnf& f, int start) {
  const int nv = f.variables;
  std::vector<int> num(nv + f.clauses.size(), -1), entry(num.size(), 0);
  std::vector<int> code, queue;
  auto pos_in_var = [&](int x, int inc) {
    return static_cast<int>(std::find(f.rotv[x].begin(), f.rotv[x].end(), inc) - f.rotv[x].begin());
  };
  const int x0 = f.clauses[start / 3][start % 3].var;
  num[x0] = 0;
  entry[x0] = pos_in_var(x0, start);
  queue.push_back(x0);
  int next = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    const int v = queue[qi];
    if (v < nv) {
      const auto& r = f.rotv[v];
      code.push_back(-1 - static_cast<int>(r.size()));
      for (size_t k = 0; k < r.size(); ++k) {
        const int inc = r[(entry[v] + k) % r.size()];
        const int c = nv + inc / 3;
        if (num[c] == -1) {
          num[c] = next++;
          entry[c] = inc % 3;
          queue.push_back(c);
        }
        code.push_back(num[c]);
        code.push_back(f.clauses[inc / 3][inc % 3].positive ? 1 : 0);
      }
    } else {
      const int c = v - nv;
      code.push_back(-100);
      for (int k = 0; k < 3; ++k) {
        const int s = (entry[v] + k) % 3;
        const int x = f.clauses[c][s].var;
        if (num[x] == -1) {
          num[x] = next++;
          entry[x] = pos_in_var(x, 3 * c + s);
          queue.push_back(x);
        }
        code.push_back(num[x]);
      }
    }
  }
  return code;
}

std::vector<int> canonical_code(const PlanarCnf& f) {
  std::vector<int> best;
  for (int i = 0; i < static_cast<int>(3 * f.clauses.size()); ++i) {
    auto c = walk_code(f, i);
    if (best.empty() || c < best) best = std::move(c);
  }
  return best;
}

}  // namespace

std::vector<PlanarCnf> plane_embeddings(int variables, const std::vector<std::array<Literal, 3>>& clauses) {
  if (3 * clauses.size() > 8) throw Error(ErrorKind::BudgetTooLargeForOracle, "rotation search is limited to 8 incidences");
  std::vector<PlanarCnf> out;
  std::set<std::vector<int>> codes;
  const int nc = static_cast<int>(clauses.size());
  for (int mask = 0; mask < (1 << nc); ++mask) {
    PlanarCnf f;
    f.variables = variables;
    for (int c = 0; c < nc; ++c) {
      auto cl = clauses[c];
      if ((mask >> c) & 1) std::swap(cl[1], cl[2]);
      f.clauses.push_back(cl);
    }
    f.rotv.assign(variables, {});
    std::vector<std::vector<int>> inc(variables);
    for (int x = 0; x < variables; ++x) inc[x] = incidences_of(f, x);
    std::function<void(int)> rec = [&](int x) {
      if (x == variables) {
        if (!embeds(f)) return;
        if (codes.insert(canonical_code(f)).second) out.push_back(f);
        return;
      }
      auto rest = inc[x];
      if (rest.empty()) {
        f.rotv[x].clear();
        rec(x + 1);
        return;
      }
      std::sort(rest.begin() + 1, rest.end());
      do {
        f.rotv[x] = rest;
        rec(x + 1);
      } while (std::next_permutation(rest.begin() + 1, rest.end()));
    };
    rec(0);
  }
  return out;
}

PlanarCnf parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0, nv = -1, nc = -1;
  PlanarCnf f;
  std::vector<std::vector<int>> rotv_clauses;
  std::vector<std::vector<int>> rotc;
  bool any_rot = false;
  auto fail = [&](const std::string& msg) { throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": " + msg); };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head == "c") continue;
    if (head == "p") {
      std::string fmt;
      if (!(ls >> fmt >> nv >> nc) || fmt != "cnf" || nv < 1 || nc < 1) fail("bad problem line");
      f.variables = nv;
      rotv_clauses.assign(nv, {});
      rotc.assign(nc, {});
      continue;
    }
    if (nv < 0) fail("problem line must come first");
    if (head == "rotv" || head == "rotc") {
      any_rot = true;
      int id;
      if (!(ls >> id)) fail("missing id");
      std::vector<int> rest;
      for (int t; ls >> t;) rest.push_back(t);
      if (!ls.eof()) fail("non-integer token");
      if (head == "rotv") {
        if (id < 1 || id > nv) fail("variable out of range");
        for (int c : rest)
          if (c < 1 || c > nc) fail("clause out of range");
        rotv_clauses[id - 1] = rest;
      } else {
        if (id < 1 || id > nc) fail("clause out of range");
        if (rest.size() != 3) fail("rotc needs three variables");
        rotc[id - 1] = rest;
      }
      continue;
    }
    std::vector<int> lits;
    std::istringstream cs(line);
    for (int t; cs >> t;) lits.push_back(t);
    if (!cs.eof()) fail("non-integer token");
    if (lits.empty() || lits.back() != 0) fail("clause must end with 0");
    lits.pop_back();
    if (lits.size() != 3) throw Error(ErrorKind::InvalidArity, "line " + std::to_string(lineno) + ": clause needs exactly 3 literals");
    std::array<Literal, 3> cl;
    for (int k = 0; k < 3; ++k) {
      const int v = std::abs(lits[k]);
      if (v < 1 || v > nv) fail("literal out of range");
      cl[k] = {v - 1, lits[k] > 0};
    }
    f.clauses.push_back(cl);
  }
  if (nv < 0) throw Error(ErrorKind::ParseError, "missing problem line");
  if (static_cast<int>(f.clauses.size()) != nc) throw Error(ErrorKind::ParseError, "clause count differs from the problem line");
  if (!any_rot) {
    auto all = plane_embeddings(nv, f.clauses);
    if (all.empty()) throw Error(ErrorKind::EmbeddingConflict, "formula has no plane embedding");
    return all.front();
  }
  for (int c = 0; c < nc; ++c) {
    if (rotc[c].empty()) continue;
    std::array<Literal, 3> re;
    std::array<bool, 3> used{false, false, false};
    for (int k = 0; k < 3; ++k) {
      int pick = -1;
      for (int s = 0; s < 3 && pick == -1; ++s)
        if (!used[s] && f.clauses[c][s].var == rotc[c][k] - 1) pick = s;
      if (pick == -1) throw Error(ErrorKind::EmbeddingConflict, "rotc of clause " + std::to_string(c + 1) + " does not match its literals");
      used[pick] = true;
      re[k] = f.clauses[c][pick];
    }
    f.clauses[c] = re;
  }
  f.rotv.assign(nv, {});
  for (int x = 0; x < nv; ++x) {
    std::map<int, int> taken;
    for (int c1 : rotv_clauses[x]) {
      const int c = c1 - 1;
      int k = taken[c]++, slot = -1;
      for (int s = 0; s < 3; ++s)
        if (f.clauses[c][s].var == x && k-- == 0) {
          slot = s;
          break;
        }
      if (slot == -1) throw Error(ErrorKind::EmbeddingConflict, "rotv of variable " + std::to_string(x + 1) + " names a clause too often");
      f.rotv[x].push_back(3 * c + slot);
    }
  }
  validate_cnf(f);
  return f;
}

std::string write_dimacs(const PlanarCnf& f) {
  std::ostringstream out;
  out << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
  for (const auto& cl : f.clauses) {
    for (const Literal& l : cl) out << (l.positive ? l.var + 1 : -(l.var + 1)) << ' ';
    out << "0\n";
  }
  for (int x = 0; x < f.variables; ++x) {
    out << "rotv " << x + 1;
    for (int i : f.rotv[x]) out << ' ' << i / 3 + 1;
    out << '\n';
  }
  for (size_t c = 0; c < f.clauses.size(); ++c) {
    out << "rotc " << c + 1;
    for (const Literal& l : f.clauses[c]) out << ' ' << l.var + 1;
    out << '\n';
  }
  return out.str();
}

GadgetInstance literal_gadget() {
  GadgetInstance g;
  g.graph = literal_graph();
  g.literals.push_back(literal_ports(0));
  return g;
}

GadgetInstance variable_gadget(int occurrences) {
  MapBuilder mb;
  GadgetInstance g;
  g.variables.push_back(add_variable(mb, g.literals, occurrences));
  std::vector<VertexId> map;
  g.graph = mb.finish(map);
  remap(g, map);
  return g;
}

GadgetInstance clause_gadget() {
  GadgetInstance g;
  g.graph = clause_graph();
  g.clauses.push_back(clause_ports(0));
  return g;
}

Completion literal_completion(const PlaneDigraph& d, const LiteralPorts& p, bool positive) {
  auto left = [&](VertexId u, VertexId v) { return arc_in_face(d, u, v, {p.b, p.bl, p.l, p.tl, p.t}); };
  auto right = [&](VertexId u, VertexId v) { return arc_in_face(d, u, v, {p.t, p.tr, p.r, p.br, p.b}); };
  if (positive) return {right(p.r, p.t), right(p.t, p.br), left(p.l, p.b), left(p.b, p.tl)};
  return {left(p.l, p.t), left(p.t, p.bl), right(p.r, p.b), right(p.b, p.tr)};
}

Completion variable_completion(const PlaneDigraph& d, const GadgetInstance& g, int variable, bool positive) {
  const VariablePorts& vp = g.variables.at(variable);
  const int n = static_cast<int>(vp.literals.size());
  Completion x;
  for (int i = 0; i < n; ++i) {
    for (const NewArc& a : literal_completion(d, g.literals[vp.literals[i]], positive)) x.push_back(a);
  }
  for (int i = 0; i < n; ++i) {
    const LiteralPorts& p = g.literals[vp.literals[i]];
    const LiteralPorts& q = g.literals[vp.literals[(i + 1) % n]];
    x.push_back(arc_in_face(d, p.br, p.rp, {p.br, p.r, p.rp, q.l}));
  }
  const LiteralPorts& p0 = g.literals[vp.literals[0]];
  const LiteralPorts& p1 = g.literals[vp.literals[1]];
  x.push_back(arc_in_face(d, p0.br, vp.bottom, {vp.bottom, p0.b, p0.br, p1.b}));
  return x;
}

std::vector<Completion> literal_completions_hitting(const GadgetInstance& lit, VertexId target) {
  const PlaneDigraph& d = lit.graph;
  const LiteralPorts& p = lit.literals.at(0);
  const int fl = find_face(d, {p.b, p.bl, p.l, p.tl, p.t});
  const int fr = find_face(d, {p.t, p.tr, p.r, p.br, p.b});
  const bool target_is_source = d.arc_count() > 0 && scc(d).source[scc(d).comp[target]];
  std::vector<Completion> out;
  Completion cur;
  all_completions(d, slots_in(d, {fl, fr}), 0, cur, [&](const Completion& x) {
    if (!hits_out(d, x, p.b) || !hits_out(d, x, p.l) || !hits_out(d, x, p.r)) return;
    if (target_is_source ? !hits_in(d, x, target) : !hits_out(d, x, target)) return;
    out.push_back(x);
  });
  return out;
}

std::vector<std::vector<int>> variable_maximal_partitions(const GadgetInstance& var) {
  const PlaneDigraph& d = var.graph;
  const VariablePorts& vp = var.variables.at(0);
  const int n = static_cast<int>(vp.literals.size());
  // per literal: inclusion-maximal completions of its two 5-faces hitting its sinks
  std::vector<std::vector<Completion>> per(n);
  for (int i = 0; i < n; ++i) {
    const LiteralPorts& p = var.literals[vp.literals[i]];
    const int fl = find_face(d, {p.b, p.bl, p.l, p.tl, p.t});
    const int fr = find_face(d, {p.t, p.tr, p.r, p.br, p.b});
    for (const Completion& a : inclusion_maximal(d, slots_in(d, {fl})))
      for (const Completion& b : inclusion_maximal(d, slots_in(d, {fr}))) {
        Completion x = a;
        x.insert(x.end(), b.begin(), b.end());
        if (hits_out(d, x, p.b) && hits_out(d, x, p.l) && hits_out(d, x, p.r)) per[i].push_back(x);
      }
  }
  std::set<std::vector<int>> parts;
  Completion cur;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      for (int j = 0; j < n; ++j)
        if (!hits_in(d, cur, var.literals[vp.literals[j]].br)) return;
      ArcPairs arcs = d.arc_pairs();
      for (const NewArc& a : cur) arcs.push_back(new_arc_vertices(d, a));
      parts.insert(canonical_partition(scc(d.vertex_count(), arcs)));
      return;
    }
    for (const Completion& x : per[i]) {
      const size_t keep = cur.size();
      bool ok = true;
      for (const NewArc& a : x) {
        if (!can_add_arc(d, cur, a, Mode::oriented)) {
          ok = false;
          break;
        }
        cur.push_back(a);
      }
      if (ok) rec(i + 1);
      cur.resize(keep);
    }
  };
  rec(0);
  std::vector<std::vector<int>> out;
  for (const auto& p : parts) {
    bool dominated = false;
    for (const auto& q : parts)
      if (q != p && coarser(q, p)) dominated = true;
    if (!dominated) out.push_back(p);
  }
  return out;
}

Reduction reduce(const PlanarCnf& input) {
  validate_cnf(input);
  // x and ~x in one clause would glue the shared twin r'_i = l'_{i+1} onto two vertices of the
  // same clause gadget
  for (size_t c = 0; c < input.clauses.size(); ++c)
    for (const Literal& a : input.clauses[c])
      for (const Literal& b : input.clauses[c])
        if (a.var == b.var && a.positive != b.positive)
          throw Error(ErrorKind::EmbeddingConflict, "clause " + std::to_string(c + 1) + " holds both x" +
                                                        std::to_string(a.var + 1) + " and its negation");
  Reduction r;
  std::tie(r.padded, r.padding_clauses) = pad(input);
  const PlanarCnf& f = r.padded;
  MapBuilder mb;
  GadgetInstance& g = r.gadget;
  r.literal_of_incidence.assign(3 * f.clauses.size(), -1);
  for (int x = 0; x < f.variables; ++x) {
    g.variables.push_back(add_variable(mb, g.literals, f.occurrences(x)));
    for (int i = 0; i < f.occurrences(x); ++i) r.literal_of_incidence[f.rotv[x][i]] = g.variables.back().literals[i];
  }
  for (size_t c = 0; c < f.clauses.size(); ++c) g.clauses.push_back(clause_ports(mb.add(clause_graph())));

  for (size_t c = 0; c < f.clauses.size(); ++c) {
    ClausePorts& cp = g.clauses[c];
    for (int s = 0; s < 3; ++s) {
      const LiteralPorts& lp = g.literals[r.literal_of_incidence[3 * c + s]];
      const bool pos = f.clauses[c][s].positive;
      // v sits between u and w; literal corners face the clause from below
      const VertexId v = pos ? lp.tl : lp.tr;
      mb.splice(v, mb.end_to(v, pos ? lp.l : lp.t), cp.v[s], mb.end_to(cp.v[s], cp.u[s]));
      cp.v[s] = v;
      const VertexId u = pos ? lp.tp : lp.rp;
      const int sp = (s + 2) % 3;
      mb.splice(u, mb.end_to(u, pos ? lp.t : lp.r), cp.u[s], mb.end_to(cp.u[s], cp.m_out[sp]));
      cp.u[s] = u;
      const VertexId w = pos ? lp.lp : lp.tp;
      mb.splice(w, mb.prev(mb.end_to(w, pos ? lp.l : lp.t)), cp.w[s], mb.end_to(cp.w[s], v));
      cp.w[s] = w;
    }
  }
  // arcs entering the top sources left free, between consecutive literals of a clause
  for (size_t c = 0; c < f.clauses.size(); ++c) {
    const ClausePorts& cp = g.clauses[c];
    for (int s = 0; s < 3; ++s) {
      const int t = (s + 1) % 3;
      const LiteralPorts& p = g.literals[r.literal_of_incidence[3 * c + s]];
      const LiteralPorts& q = g.literals[r.literal_of_incidence[3 * c + t]];
      const bool pp = f.clauses[c][s].positive, qp = f.clauses[c][t].positive;
      const int region = mb.face_after(mb.faces(), mb.end_to(cp.m_out[s], cp.w[s]));
      if (!pp && !qp) {
        mb.add_arc_on_face(q.rp, p.tl, region);
      } else if (pp && qp) {
        mb.add_arc_on_face(p.lp, q.tr, region);
      } else if (!pp && qp) {
        mb.add_arc_on_face(p.tp, q.tr, region);
        mb.add_arc_common_face(q.tr, p.tl);
      }
    }
  }
  std::vector<VertexId> map;
  g.graph = mb.finish(map);
  remap(g, map);
  return r;
}

Completion assignment_to_augmentation(const Reduction& r, const std::vector<bool>& assignment) {
  if (!satisfies(r.padded, assignment)) throw Error(ErrorKind::AssignmentDoesNotSatisfy, "assignment leaves a clause false");
  Completion x;
  for (int v = 0; v < r.padded.variables; ++v) {
    Completion y = variable_completion(r.gadget.graph, r.gadget, v, assignment[v]);
    x.insert(x.end(), y.begin(), y.end());
  }
  return x;
}

Completion assignment_to_augmentation(const PlanarCnf& f, const std::vector<bool>& assignment) {
  if (!satisfies(f, assignment)) throw Error(ErrorKind::AssignmentDoesNotSatisfy, "assignment leaves a clause false");
  return assignment_to_augmentation(reduce(f), assignment);
}

}  // namespace oa

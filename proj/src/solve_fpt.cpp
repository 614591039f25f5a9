#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "oa/completion_enum.hpp"
#include "oa/dijoin.hpp"
#include "oa/face_analysis.hpp"
#include "oa/solvers.hpp"
#include "oa/strongconn.hpp"

namespace oa {

std::uint64_t default_trials(int c, int q) {
  if (q <= 0) return 1;
  double t = std::pow(static_cast<double>(std::max(c, 1)), q) * std::log(20.0);
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(t - 1e-9)));
}

namespace {

std::vector<EndId> identity_ends(const PlaneDigraph& d) {
  std::vector<EndId> m(2 * d.arc_count());
  for (EndId e = 0; e < 2 * d.arc_count(); ++e) m[e] = e;
  return m;
}

VertexId terminal_vertex(const PlaneDigraph& d, const FaceAnalysis& fa, IntervalKind kind) {
  for (const Interval& t : fa.terminals)
    if (t.kind == kind) return d.face(fa.face).vertex(t.start);
  return -1;
}

Completion joined(Completion a, const Completion& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

// Arc-level legality of a union of completions on `host`, checked one arc at a time.
bool jointly_legal(const PlaneDigraph& host, const Completion& x, Mode mode) {
  Completion acc;
  for (const NewArc& a : x) {
    if (!can_add_arc(host, acc, a, mode)) return false;
    acc.push_back(a);
  }
  return true;
}

bool strong_with(const PlaneDigraph& host, const Completion& x) {
  ArcPairs arcs = host.arc_pairs();
  for (const NewArc& a : x) arcs.push_back(new_arc_vertices(host, a));
  return is_strong(host.vertex_count(), arcs);
}

struct SimplePool {
  int face = 0;
  VertexId source = 0;
  std::vector<Completion> pool;
};

struct PscaSearch {
  const PlaneDigraph& d;
  const Classification& cls;
  const PscaOptions& opt;
  std::vector<SimplePool> simple;
  std::mt19937_64 rng;
  SolveStats stats;
  Completion witness;

  PscaSearch(const PlaneDigraph& g, const Classification& c, const PscaOptions& o)
      : d(g), cls(c), opt(o), rng(o.seed) {
    for (const FaceAnalysis& fa : cls.faces) {
      if (fa.cls.kind != FaceKind::Simple) continue;
      SimplePool sp;
      sp.face = fa.face;
      sp.source = terminal_vertex(d, fa, IntervalKind::LocalSource);
      for (Completion& x : supported_completions(d, cls, fa.face, 3))
        if (!x.empty()) sp.pool.push_back(std::move(x));
      if (!sp.pool.empty()) simple.push_back(std::move(sp));
    }
  }

  // Candidates per simple face in the context D + y, kept in D's numbering and in the context's.
  struct Choice {
    int face = 0;
    VertexId source = 0;
    std::vector<Completion> in_d, in_ctx;
  };

  std::vector<Choice> choices(const PlaneDigraph& ctx, int rem) {
    std::vector<Choice> out;
    const auto same = identity_ends(d);
    for (const SimplePool& sp : simple) {
      Choice c;
      c.face = sp.face;
      c.source = sp.source;
      for (Completion& x : filter_simple_candidates(d, sp.pool, ctx)) {
        if (static_cast<int>(x.size()) > rem) continue;
        c.in_ctx.push_back(map_completion(d, ctx, x, same));
        c.in_d.push_back(std::move(x));
      }
      if (!c.in_d.empty()) out.push_back(std::move(c));
    }
    return out;
  }

  bool exhaustive(const PlaneDigraph& ctx, const std::vector<Choice>& ch, int rem, Completion& found) {
    Completion cur_d, cur_ctx;
    std::function<bool(size_t, int)> rec = [&](size_t i, int left) -> bool {
      if (i == ch.size()) {
        if (cur_d.empty()) return false;
        if (!strong_with(ctx, cur_ctx)) return false;
        found = cur_d;
        return true;
      }
      if (rec(i + 1, left)) return true;
      for (size_t j = 0; j < ch[i].in_d.size(); ++j) {
        const Completion& xc = ch[i].in_ctx[j];
        if (static_cast<int>(xc.size()) > left) continue;
        ++stats.branches;
        Completion next = cur_ctx;
        next.insert(next.end(), xc.begin(), xc.end());
        if (!jointly_legal(ctx, next, Mode::oriented)) continue;
        const size_t kd = cur_d.size(), kc = cur_ctx.size();
        cur_d.insert(cur_d.end(), ch[i].in_d[j].begin(), ch[i].in_d[j].end());
        cur_ctx = std::move(next);
        if (rec(i + 1, left - static_cast<int>(xc.size()))) return true;
        cur_d.resize(kd);
        cur_ctx.resize(kc);
      }
      return false;
    };
    return rec(0, rem);
  }

  bool monte_carlo(const PlaneDigraph& ctx, const Completion& y, const std::vector<Choice>& ch, int rem,
                   Completion& found) {
    int widest = 1;
    for (const Choice& c : ch) widest = std::max(widest, static_cast<int>(c.in_d.size()));
    const int q = std::min<int>(rem, static_cast<int>(ch.size()));
    const std::uint64_t trials = opt.trials ? opt.trials : default_trials(widest, q);
    for (std::uint64_t t = 0; t < trials; ++t) {
      ++stats.trials;
      std::vector<AllowedFace> allowed;
      std::vector<NewArc> back;  // D-numbered arcs aligned with the auxiliary candidate list
      Completion all;
      for (const Choice& c : ch) {
        std::uniform_int_distribution<size_t> pick(0, c.in_d.size() - 1);
        size_t j = pick(rng);
        allowed.push_back({c.source, c.in_ctx[j]});
        back.insert(back.end(), c.in_d[j].begin(), c.in_d[j].end());
        all.insert(all.end(), c.in_ctx[j].begin(), c.in_ctx[j].end());
      }
      // no subset of the drawn arcs helps when all of them together do not
      if (!strong_with(ctx, all)) continue;
      DijoinInstance inst = build_auxiliary(ctx, allowed, rem, Mode::oriented);
      ++stats.dijoin_calls;
      auto yj = min_dijoin_upto(inst.n, inst.arcs, rem, &stats.branches);
      if (!yj) continue;
      Completion x;
      for (int a : *yj) x.push_back(back[inst.candidate_of[a]]);
      Completion full = joined(y, x);
      if (verify_solution(d, full, Mode::oriented).ok) {
        found = x;
        return true;
      }
    }
    return false;
  }

  bool budget(int kk) {
    bool ok = false;
    for_each_alternating_branch(d, cls, kk, Mode::oriented, [&](const Completion& y) {
      ++stats.branches;
      const int rem = kk - static_cast<int>(y.size());
      PlaneDigraph ctx;
      try {
        ctx = insert_arcs(d, y, Mode::oriented);
      } catch (const Error&) {
        return true;
      }
      const ArcPairs pairs = ctx.arc_pairs();
      if (is_strong(ctx.vertex_count(), pairs)) {
        witness = y;
        ok = true;
        return false;
      }
      if (terminal_lower_bound(ctx.vertex_count(), pairs) > rem) return true;
      auto ch = choices(ctx, rem);
      if (ch.empty()) return true;
      Completion x;
      bool hit = opt.mode == PscaMode::Exhaustive ? exhaustive(ctx, ch, rem, x) : monte_carlo(ctx, y, ch, rem, x);
      if (!hit) return true;
      witness = joined(y, x);
      ok = true;
      return false;
    });
    return ok;
  }
};

}  // namespace

SolveReport solve_psca(const PlaneDigraph& d, int k, const PscaOptions& opt) {
  SolveReport r;
  r.mode = Mode::oriented;
  r.method = opt.mode == PscaMode::Exhaustive ? "fpt-exhaustive" : "fpt-montecarlo";
  r.stats.seed = opt.seed;
  const ArcPairs pairs = d.arc_pairs();
  if (is_strong(d.vertex_count(), pairs)) {
    r.yes = true;
    r.optimum = 0;
    r.exact_optimum = true;
    return r;
  }
  if (k <= 0) return r;
  Classification cls = classify_all(d);
  PscaSearch s(d, cls, opt);
  const int terminals = cls.census.terminals;
  const int lb = std::max(1, terminal_lower_bound(d.vertex_count(), pairs));
  for (int kk = lb; kk <= k; ++kk) {
    if (terminals > 2 * kk) continue;
    if (cls.census.alternating_lt > 8 * (kk - 1)) continue;
    if (s.budget(kk)) {
      r.yes = true;
      r.witness = s.witness;
      r.optimum = static_cast<int>(r.witness.size());
      r.exact_optimum = opt.mode == PscaMode::Exhaustive;
      break;
    }
  }
  r.stats.branches = s.stats.branches;
  r.stats.trials = s.stats.trials;
  r.stats.dijoin_calls = s.stats.dijoin_calls;
  if (r.yes && !verify_solution(d, r.witness, Mode::oriented).ok)
    throw Error(ErrorKind::NotASolution, "internal: PSCA witness failed verification");
  return r;
}

namespace {

// Minimum completion of one loopless acyclic part of size at most b, if any.
std::optional<Completion> solve_part(const PlaneDigraph& g, int b, SolveStats& stats) {
  const ArcPairs pairs = g.arc_pairs();
  if (is_strong(g.vertex_count(), pairs)) return Completion{};
  Classification cls = classify_all(g);
  const int terminals = cls.census.terminals;
  const int lb = std::max(1, terminal_lower_bound(g.vertex_count(), pairs));
  std::vector<const FaceAnalysis*> simple;
  for (const FaceAnalysis& fa : cls.faces)
    if (fa.cls.kind == FaceKind::Simple) simple.push_back(&fa);
  const auto same = identity_ends(g);
  for (int kk = lb; kk <= b; ++kk) {
    if (terminals > 2 * kk) continue;
    if (cls.census.alternating_lt >= 8 * kk) continue;
    std::optional<Completion> found;
    for_each_alternating_branch(g, cls, kk, Mode::directed, [&](const Completion& y) {
      ++stats.branches;
      const int rem = kk - static_cast<int>(y.size());
      PlaneDigraph ctx;
      try {
        ctx = insert_arcs(g, y, Mode::directed);
      } catch (const Error&) {
        return true;
      }
      const ArcPairs cp = ctx.arc_pairs();
      if (is_strong(ctx.vertex_count(), cp)) {
        found = y;
        return false;
      }
      if (terminal_lower_bound(ctx.vertex_count(), cp) > rem) return true;
      // one (t, s) arc per simple face, unless t already reaches s
      std::vector<AllowedFace> allowed;
      std::vector<NewArc> back;
      Completion all;
      for (const FaceAnalysis* fa : simple) {
        int tpos = -1, spos = -1;
        for (const Interval& t : fa->terminals) (t.kind == IntervalKind::LocalSink ? tpos : spos) = t.start;
        const Face& f = g.face(fa->face);
        VertexId s = f.vertex(spos), t = f.vertex(tpos);
        if (reachable_from(ctx.vertex_count(), cp, t)[s]) continue;
        NewArc na{fa->face, tpos, spos};
        Completion xc = map_completion(g, ctx, {na}, same);
        if (!can_add_arc(ctx, {}, xc[0], Mode::directed)) continue;
        allowed.push_back({s, xc});
        back.push_back(na);
        all.push_back(xc[0]);
      }
      if (allowed.empty() || !strong_with(ctx, all)) return true;
      if (static_cast<int>(all.size()) <= rem) {
        found = joined(y, back);
        return false;
      }
      DijoinInstance inst = build_auxiliary(ctx, allowed, rem, Mode::directed);
      ++stats.dijoin_calls;
      auto yj = min_dijoin_upto(inst.n, inst.arcs, rem, &stats.branches);
      if (!yj) return true;
      Completion x;
      for (int a : *yj) x.push_back(back[inst.candidate_of[a]]);
      found = joined(y, x);
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace

SolveReport solve_directed(const PlaneDigraph& d, int k) {
  SolveReport r;
  r.mode = Mode::directed;
  r.method = "fpt-directed";
  if (is_strong(d.vertex_count(), d.arc_pairs())) {
    r.yes = true;
    r.optimum = 0;
    r.exact_optimum = true;
    return r;
  }
  if (k <= 0) return r;
  CondensationResult cond = condense(d);
  LoopSplit split = split_loops(cond.condensed);
  // parts are independent: the optimum is the sum of the part optima
  std::vector<Completion> per_part;
  int left = k;
  for (const Subgraph& part : split.parts) {
    auto x = solve_part(part.graph, left, r.stats);
    if (!x) return r;
    left -= static_cast<int>(x->size());
    per_part.push_back(map_completion(part.graph, cond.condensed, *x, subgraph_end_map(part)));
  }
  Completion xc;
  for (const Completion& x : per_part) xc.insert(xc.end(), x.begin(), x.end());
  r.witness = lift_solution(d, cond, xc);
  std::sort(r.witness.begin(), r.witness.end());
  r.yes = true;
  r.optimum = static_cast<int>(r.witness.size());
  r.exact_optimum = true;
  VerifyResult v = verify_solution(d, r.witness, Mode::directed);
  if (!v.ok) throw Error(ErrorKind::NotASolution, "internal: directed witness failed verification: " + v.message);
  return r;
}

}  // namespace oa

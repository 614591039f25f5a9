// Acceptance gate: one PASS/FAIL line per criterion. Exit status is 0 when the set of failing
// criteria equals --expect-fail (empty by default).
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "oa/completion_enum.hpp"
#include "oa/dijoin.hpp"
#include "oa/enumerate.hpp"
#include "oa/face_analysis.hpp"
#include "oa/hardness_gen.hpp"
#include "oa/random_gen.hpp"
#include "oa/reconfigure.hpp"
#include "oa/solvers.hpp"
#include "oa/strongconn.hpp"
#include "oa/supports.hpp"

using namespace oa;

namespace {

// pinned thresholds
constexpr int kMaxExhaustiveVertices = 6;
constexpr int kRandomInstances = 500;
constexpr int kMaxBudget = 3;
constexpr double kTimeLimitSeconds = 15 * 60;
constexpr int kPowerRepetitions = 100;
constexpr double kPowerThreshold = 0.90;
constexpr int kPowerInstancesPerBudget = 5;
constexpr int kSupportFaces = 1000;
constexpr int kSupportMaxQ = 6;
constexpr int kDags = 1000;
constexpr int kMaxDijoinArcs = 8;
constexpr int kMaxDijoinVertices = 5;
constexpr int kMaxScenarioVertices = 7;
constexpr int kMaxScenarioPool = 8;
constexpr std::uint64_t kCorpusSeed = 2024;

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Instance {
  PlaneDigraph d;
  bool exhaustive = true;
  SolveReport brute_o, brute_d;
  int opt_o = -1, opt_d = -1;  // -1 above kMaxBudget
};

struct Line {
  bool pass = false;
  std::string detail;
};

std::string fmt(double x, int prec = 1) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(prec);
  s << x;
  return s.str();
}

int opt_of(const SolveReport& r) { return r.yes ? r.optimum : -1; }

struct Corpus {
  std::vector<Instance> items;
  double enumerate_seconds = 0;
  double brute_o_seconds = 0;
  double brute_d_seconds = 0;
};

Corpus build_corpus() {
  Corpus c;
  auto t = Clock::now();
  for (PlaneDigraph& d : small_plane_graphs(kMaxExhaustiveVertices)) {
    Instance inst;
    inst.d = std::move(d);
    c.items.push_back(std::move(inst));
  }
  std::mt19937_64 rng(kCorpusSeed);
  for (int i = 0; i < kRandomInstances; ++i) {
    RandomPlaneOptions opt;
    opt.n = 7 + i % 2;
    opt.extra_edge_prob = 0.15 * static_cast<double>(i / 2 % 4);
    opt.acyclic_bias = (i / 8) % 2 ? 0.8 : 0.0;
    Instance inst;
    inst.d = random_plane_graph(opt, rng());
    inst.exhaustive = false;
    c.items.push_back(std::move(inst));
  }
  c.enumerate_seconds = seconds_since(t);
  t = Clock::now();
  for (Instance& in : c.items) {
    in.brute_o = brute_solve(in.d, kMaxBudget, Mode::oriented);
    in.opt_o = opt_of(in.brute_o);
  }
  c.brute_o_seconds = seconds_since(t);
  t = Clock::now();
  for (Instance& in : c.items) {
    in.brute_d = brute_solve(in.d, kMaxBudget, Mode::directed);
    in.opt_d = opt_of(in.brute_d);
  }
  c.brute_d_seconds = seconds_since(t);
  return c;
}

std::string corpus_size(const Corpus& c) {
  int ex = 0;
  for (const Instance& in : c.items) ex += in.exhaustive;
  return std::to_string(ex) + " exhaustive + " + std::to_string(c.items.size() - ex) + " random";
}

// 1 and 2: exact solvers against the brute oracle for every k
Line oracle_equivalence(const Corpus& c, bool directed) {
  auto t = Clock::now();
  std::uint64_t cases = 0, bad = 0;
  for (const Instance& in : c.items) {
    const int expect = directed ? in.opt_d : in.opt_o;
    for (int k = 0; k <= kMaxBudget; ++k) {
      ++cases;
      SolveReport r = directed ? solve_directed(in.d, k) : solve_psca(in.d, k);
      const bool want = expect >= 0 && expect <= k;
      bool ok = r.yes == want && (!r.yes || r.optimum == expect);
      if (ok && r.yes) ok = verify_solution(in.d, r.witness, directed ? Mode::directed : Mode::oriented).ok;
      bad += !ok;
    }
  }
  const double secs = seconds_since(t) + (directed ? c.brute_d_seconds : c.brute_o_seconds) + c.enumerate_seconds;
  return {bad == 0 && secs < kTimeLimitSeconds,
          corpus_size(c) + ", k=0.." + std::to_string(kMaxBudget) + ": " + std::to_string(cases - bad) + "/" +
              std::to_string(cases) + " agree, " + fmt(secs) + " s (limit " + fmt(kTimeLimitSeconds, 0) + " s)"};
}

// 3: Monte-Carlo Yes answers verify everywhere; success rate on the known-Yes instances that are
// hardest for sampling (largest product of simple-face candidate counts)
Line monte_carlo(const Corpus& c) {
  std::uint64_t yes = 0, false_pos = 0, runs = 0;
  int widest = 0;
  std::vector<std::vector<std::pair<double, int>>> hard(kMaxBudget + 1);
  for (size_t i = 0; i < c.items.size(); ++i) {
    const Instance& in = c.items[i];
    for (int k = 0; k <= kMaxBudget; ++k) {
      PscaOptions o;
      o.mode = PscaMode::MonteCarlo;
      o.seed = kDefaultSeed + 131 * i + k;
      SolveReport r = solve_psca(in.d, k, o);
      ++runs;
      if (!r.yes) continue;
      ++yes;
      const bool ok = verify_solution(in.d, r.witness, Mode::oriented).ok && r.optimum <= k && in.opt_o >= 0 &&
                      in.opt_o <= k;
      false_pos += !ok;
    }
    Classification cls = classify_all(in.d);
    double product = 1;
    for (const FaceAnalysis& fa : cls.faces) {
      if (fa.cls.kind != FaceKind::Simple) continue;
      const int n = static_cast<int>(simple_face_candidates(in.d, cls, fa.face, in.d, 3).size());
      widest = std::max(widest, n);
      product *= std::max(n, 1);
    }
    if (in.opt_o >= 1) hard[in.opt_o].push_back({-product, static_cast<int>(i)});
  }
  double worst = 1;
  int tested = 0;
  for (int k = 1; k <= kMaxBudget; ++k) {
    std::sort(hard[k].begin(), hard[k].end());
    for (int j = 0; j < kPowerInstancesPerBudget && j < static_cast<int>(hard[k].size()); ++j) {
      const Instance& in = c.items[hard[k][j].second];
      int ok = 0;
      for (int rep = 0; rep < kPowerRepetitions; ++rep) {
        PscaOptions o;
        o.mode = PscaMode::MonteCarlo;
        o.seed = 0x9e3779b9ULL * (rep + 1) + k;
        SolveReport r = solve_psca(in.d, k, o);
        ok += r.yes && verify_solution(in.d, r.witness, Mode::oriented).ok;
      }
      worst = std::min(worst, static_cast<double>(ok) / kPowerRepetitions);
      ++tested;
    }
  }
  const bool pass = false_pos == 0 && worst >= kPowerThreshold && widest <= kSimpleCandidateBound;
  return {pass, std::to_string(false_pos) + " false positives in " + std::to_string(yes) + " Yes of " +
                    std::to_string(runs) + " runs; min success " + fmt(worst, 2) + " over " + std::to_string(tested) +
                    " known-Yes instances x " + std::to_string(kPowerRepetitions) + " seeds (need >= " +
                    fmt(kPowerThreshold, 2) + "); widest simple candidate list " + std::to_string(widest) +
                    " <= c_S=" + std::to_string(kSimpleCandidateBound)};
}

std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

// 4
Line counting() {
  bool tri_ok = true;
  std::string counts;
  for (int m = 4; m <= 8; ++m) {
    const auto t = enumerate_triangulations(m);
    std::set<std::vector<std::pair<int, int>>> distinct(t.begin(), t.end());
    tri_ok = tri_ok && t.size() == catalan(m - 2) && distinct.size() == t.size();
    counts += (m > 4 ? "," : "") + std::to_string(t.size());
  }
  std::mt19937_64 rng(kCorpusSeed + 4);
  int faces = 0, families = 0, violations = 0;
  while (faces < kSupportFaces) {
    RandomPlaneOptions opt;
    opt.n = 4 + static_cast<int>(rng() % 9);
    opt.extra_edge_prob = 0.15 * static_cast<double>(rng() % 5);
    opt.acyclic_bias = static_cast<double>(rng() % 2) * 0.7;
    PlaneDigraph d = random_plane_graph(opt, rng());
    Classification cls = classify_all(d);
    const FaceAnalysis& fa = cls.faces[rng() % cls.faces.size()];
    std::vector<Interval> ivs = fa.terminals;
    ivs.insert(ivs.end(), fa.dipaths.begin(), fa.dipaths.end());
    if (ivs.empty()) continue;
    ++faces;
    for (const Interval& it : ivs)
      for (int q = 1; q <= kSupportMaxQ; ++q) {
        const size_t cap = static_cast<size_t>(3) << (q - 1);
        families += 2;
        violations += left_supports(d, it, q).members.size() > cap;
        violations += right_supports(d, it, q).members.size() > cap;
      }
  }
  return {tri_ok && violations == 0, "triangulations m=4..8: " + counts + " (want 2,5,14,42,132); support families " +
                                         std::to_string(families) + " on " + std::to_string(faces) +
                                         " random faces, q<=6, " + std::to_string(violations) + " over 3*2^(q-1)"};
}

// 5
Line census(const Corpus& c) {
  int graphs = 0, identity_bad = 0;
  auto check_identity = [&](const PlaneDigraph& d) -> Classification {
    ++graphs;
    try {
      Classification cls = classify_all(d);
      if (!cls.census.identity_holds() || (cls.census.acyclic && cls.census.sum_lt != cls.census.sum_lt_angles))
        ++identity_bad;
      return cls;
    } catch (const Error&) {
      ++identity_bad;
      return {};
    }
  };
  int positive = 0, bound_bad = 0;
  for (const Instance& in : c.items) {
    Classification cls = check_identity(in.d);
    // positive instances that are not already strong
    for (int mode = 0; mode < 2; ++mode) {
      const int opt = mode == 0 ? in.opt_o : in.opt_d;
      if (opt < 1) continue;
      for (int k = opt; k <= kMaxBudget; ++k) {
        ++positive;
        bound_bad += !(cls.census.alternating_lt < 8 * k && cls.census.terminals <= 2 * k);
      }
    }
  }
  std::mt19937_64 rng(kCorpusSeed + 5);
  int dag_bad = 0;
  for (int i = 0; i < kDags; ++i) {
    RandomPlaneOptions opt;
    opt.n = 3 + static_cast<int>(rng() % 12);
    opt.extra_edge_prob = 0.1 * static_cast<double>(rng() % 8);
    opt.acyclic_bias = 1.0;
    PlaneDigraph d = random_plane_graph(opt, rng());
    Classification cls = check_identity(d);
    dag_bad += !cls.census.acyclic || !cls.census.dag_bound_holds();
  }
  return {identity_bad == 0 && dag_bad == 0 && bound_bad == 0,
          "angle identity fails on " + std::to_string(identity_bad) + "/" + std::to_string(graphs) +
              " graphs; DAG bound fails on " + std::to_string(dag_bad) + "/" + std::to_string(kDags) +
              "; terminal bounds fail on " + std::to_string(bound_bad) + "/" + std::to_string(positive) +
              " brute-positive (instance, k)"};
}

// 6
Line structure(const Corpus& c) {
  int solutions = 0, reconf_bad = 0, simple_bad = 0, max_simple = 0;
  for (const Instance& in : c.items) {
    if (in.opt_o < 1) continue;
    ++solutions;
    const Completion& x = in.brute_o.witness;
    Classification cls = classify_all(in.d);
    try {
      Completion y = to_supported(in.d, x);
      reconf_bad += !(y.size() == x.size() && verify_solution(in.d, y, Mode::oriented).ok &&
                      completion_supported(in.d, cls, y));
    } catch (const Error&) {
      ++reconf_bad;
    }
    std::map<int, int> per_face;
    for (const NewArc& a : x) ++per_face[a.face];
    for (auto [f, n] : per_face)
      if (cls.faces[f].cls.kind == FaceKind::Simple) {
        max_simple = std::max(max_simple, n);
        simple_bad += n > 3;
      }
  }
  return {reconf_bad == 0 && simple_bad == 0,
          std::to_string(solutions) + " brute-minimum solutions: " + std::to_string(reconf_bad) +
              " not reconfigured to an equal-size supported solution; largest simple-face restriction " +
              std::to_string(max_simple) + " arcs (limit 3)"};
}

// formulas with <= 2 clauses over exactly the variables 0..V-1, V <= 4, up to renaming
std::vector<std::pair<int, std::vector<std::array<Literal, 3>>>> tiny_formulas() {
  std::vector<Literal> lits;
  for (int v = 0; v < 4; ++v) lits.push_back({v, true}), lits.push_back({v, false});
  auto key = [](const Literal& l) { return 2 * l.var + (l.positive ? 0 : 1); };
  std::vector<std::array<Literal, 3>> clauses;
  for (int a = 0; a < 8; ++a)
    for (int b = a; b < 8; ++b)
      for (int c = b; c < 8; ++c) clauses.push_back({lits[a], lits[b], lits[c]});
  std::set<std::vector<std::vector<int>>> seen;
  std::vector<std::pair<int, std::vector<std::array<Literal, 3>>>> out;
  auto consider = [&](std::vector<std::array<Literal, 3>> f) {
    std::set<int> used;
    for (const auto& cl : f)
      for (const Literal& l : cl) used.insert(l.var);
    const int vars = static_cast<int>(used.size());
    if (*used.rbegin() != vars - 1) return;
    std::vector<int> perm(vars);
    for (int i = 0; i < vars; ++i) perm[i] = i;
    std::vector<std::vector<int>> best;
    do {
      std::vector<std::vector<int>> form;
      for (const auto& cl : f) {
        std::vector<int> k;
        for (const Literal& l : cl) k.push_back(key({perm[l.var], l.positive}));
        std::sort(k.begin(), k.end());
        form.push_back(k);
      }
      std::sort(form.begin(), form.end());
      if (best.empty() || form < best) best = form;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(best).second) out.push_back({vars, f});
  };
  for (size_t i = 0; i < clauses.size(); ++i) {
    consider({clauses[i]});
    for (size_t j = i; j < clauses.size(); ++j) consider({clauses[i], clauses[j]});
  }
  return out;
}

// 7
Line hardness() {
  GadgetInstance lit = literal_gadget();
  const int census_br = static_cast<int>(literal_completions_hitting(lit, lit.literals[0].br).size());
  const int census_bl = static_cast<int>(literal_completions_hitting(lit, lit.literals[0].bl).size());
  bool var_ok = true;
  for (int n : {2, 3}) var_ok = var_ok && variable_maximal_partitions(variable_gadget(n)).size() == 2;
  SccPartition cs = scc(clause_gadget().graph);
  bool clause_ok = cs.source_count() == 1 && cs.sink_count() == 3;
  for (int c = 0; c < cs.count; ++c) {
    if (cs.source[c]) clause_ok = clause_ok && cs.members[c].size() == 3;
    if (cs.sink[c]) clause_ok = clause_ok && cs.members[c].size() == 4;
  }

  int formulas = 0, embedded = 0, sat = 0, unsat = 0, disagree = 0, tautologies = 0;
  double worst_ratio = 0;
  std::string first_disagreement;
  for (const auto& [vars, clauses] : tiny_formulas()) {
    ++formulas;
    for (const PlanarCnf& f : plane_embeddings(vars, clauses)) {
      ++embedded;
      bool tautology = false;
      for (const auto& cl : f.clauses)
        for (const Literal& a : cl)
          for (const Literal& b : cl) tautology = tautology || (a.var == b.var && a.positive != b.positive);
      Reduction r;
      try {
        r = reduce(f);
      } catch (const Error& e) {
        // the construction has no gadget for x | ~x | .. and says so; anything else is a disagreement
        if (tautology && e.kind() == ErrorKind::EmbeddingConflict) {
          ++tautologies;
        } else {
          ++disagree;
          if (first_disagreement.empty()) first_disagreement = write_dimacs(f) + " " + e.what();
        }
        continue;
      }
      const PlaneDigraph& d = r.gadget.graph;
      const int size = 4 * static_cast<int>(r.padded.clauses.size());  // occurrences plus clauses
      worst_ratio = std::max(worst_ratio, static_cast<double>(d.vertex_count()) / size);
      bool agree;
      if (auto a = find_assignment(f)) {
        ++sat;
        agree = verify_solution(d, assignment_to_augmentation(r, *a), Mode::oriented).ok;
      } else {
        ++unsat;
        AugmentabilityReport rep = decide_augmentable(d);
        agree = rep.verdict == Verdict::No;
      }
      if (!agree) {
        ++disagree;
        if (first_disagreement.empty()) first_disagreement = write_dimacs(f);
      }
    }
  }
  std::replace(first_disagreement.begin(), first_disagreement.end(), '\n', ' ');
  const bool linear = worst_ratio <= kLinearityConstant;
  const bool pass = disagree == 0 && census_br == 2 && census_bl == 2 && var_ok && clause_ok && linear;
  std::string detail = std::to_string(embedded) + " embeddings of " + std::to_string(formulas) + " formulas (" +
                       std::to_string(sat) + " SAT, " + std::to_string(unsat) + " UNSAT): " +
                       std::to_string(disagree) + " disagree with augmentability, " + std::to_string(tautologies) +
                       " with a clause holding x and ~x rejected by reduce";
  if (!first_disagreement.empty()) detail += " [first: " + first_disagreement + "]";
  detail += "; literal census " + std::to_string(census_br) + "/" + std::to_string(census_bl) +
            " (want 2/2); variable partitions " + (var_ok ? "2" : "!=2") + "; clause census " +
            (clause_ok ? "1x3 source, 3x4 sinks" : "wrong") + "; |V|/(occ+m) max " + fmt(worst_ratio, 2) +
            " <= C=" + std::to_string(kLinearityConstant);
  return {pass, detail};
}

bool strong_after_reversal(int n, const ArcPairs& arcs, unsigned mask) {
  ArcPairs all = arcs;
  for (size_t a = 0; a < arcs.size(); ++a)
    if (mask >> a & 1) all.push_back({arcs[a].second, arcs[a].first});
  // forward and backward reachability from vertex 0
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<char> seen(n, 0);
    std::vector<int> st{0};
    seen[0] = 1;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (auto [x, y] : all) {
        const int from = pass ? y : x, to = pass ? x : y;
        if (from == v && !seen[to]) seen[to] = 1, st.push_back(to);
      }
    }
    if (std::count(seen.begin(), seen.end(), 1) != n) return false;
  }
  return true;
}

int subset_min_dijoin(int n, const ArcPairs& arcs, int k) {
  const int m = static_cast<int>(arcs.size());
  for (int size = 0; size <= k && size <= m; ++size)
    for (unsigned mask = 0; mask < (1u << m); ++mask)
      if (__builtin_popcount(mask) == size && strong_after_reversal(n, arcs, mask)) return size;
  return -1;
}

int subset_min_solution(const PlaneDigraph& d, const Completion& pool, int k) {
  const int m = static_cast<int>(pool.size());
  for (int size = 0; size <= k && size <= m; ++size)
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      Completion x;
      for (int a = 0; a < m; ++a)
        if (mask >> a & 1) x.push_back(pool[a]);
      if (verify_solution(d, x, Mode::oriented).ok) return size;
    }
  return -1;
}

// 8
Line dijoin(const Corpus& c) {
  std::uint64_t digraphs = 0, dj_bad = 0;
  for (int n = 1; n <= kMaxDijoinVertices; ++n) {
    ArcPairs pairs;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v) pairs.push_back({u, v});
    const int p = static_cast<int>(pairs.size());
    std::function<void(int, ArcPairs&)> rec = [&](int from, ArcPairs& cur) {
      ++digraphs;
      for (int k = 0; k <= kMaxBudget; ++k) {
        const int expect = subset_min_dijoin(n, cur, k);
        auto got = min_dijoin_upto(n, cur, k);
        bool ok = got.has_value() == (expect >= 0);
        if (ok && got) {
          unsigned mask = 0;
          for (int a : *got) mask |= 1u << a;
          ok = static_cast<int>(got->size()) == expect && strong_after_reversal(n, cur, mask);
        }
        dj_bad += !ok;
      }
      if (static_cast<int>(cur.size()) == kMaxDijoinArcs) return;
      for (int i = from; i < p; ++i) {
        cur.push_back(pairs[i]);
        rec(i + 1, cur);
        cur.pop_back();
      }
    };
    ArcPairs cur;
    rec(0, cur);
  }

  // allowed-arc scenarios: one candidate per chosen simple face, one or two faces at a time
  std::uint64_t scenarios = 0, sc_bad = 0;
  for (const Instance& in : c.items) {
    if (in.d.vertex_count() > kMaxScenarioVertices) continue;
    Classification cls = classify_all(in.d);
    std::vector<int> simple;
    std::vector<std::vector<Completion>> cands;
    std::vector<VertexId> source;
    for (const FaceAnalysis& fa : cls.faces) {
      if (fa.cls.kind != FaceKind::Simple) continue;
      simple.push_back(fa.face);
      cands.push_back(simple_face_candidates(in.d, cls, fa.face, in.d, 3));
      const Interval& s = fa.terminals[0].kind == IntervalKind::LocalSource ? fa.terminals[0] : fa.terminals[1];
      source.push_back(in.d.face(fa.face).vertex(s.start));
    }
    auto run = [&](const std::vector<AllowedFace>& allowed) {
      Completion pool;
      for (const AllowedFace& af : allowed) pool.insert(pool.end(), af.arcs.begin(), af.arcs.end());
      if (static_cast<int>(pool.size()) > kMaxScenarioPool) return;
      ++scenarios;
      for (int k = 0; k <= kMaxBudget; ++k) {
        bool ok;
        try {
          DijoinInstance inst = build_auxiliary(in.d, allowed, k, Mode::oriented);
          auto y = min_dijoin_upto(inst.n, inst.arcs, k);
          const int expect = subset_min_solution(in.d, pool, k);
          ok = y.has_value() == (expect >= 0);
          if (ok && y) {
            Completion x = extract_solution(inst, *y);
            ok = static_cast<int>(x.size()) == expect && verify_solution(in.d, x, Mode::oriented).ok;
          }
        } catch (const Error&) {
          ok = false;
        }
        sc_bad += !ok;
      }
    };
    // exhaustive over small graphs; the random 7-8 vertex part only contributes its 7-vertex graphs
    for (size_t a = 0; a < simple.size(); ++a) {
      for (const Completion& x : cands[a]) run({{source[a], x}});
      for (size_t b = a + 1; b < simple.size(); ++b)
        for (const Completion& x : cands[a])
          for (const Completion& y : cands[b]) run({{source[a], x}, {source[b], y}});
    }
  }
  return {dj_bad == 0 && sc_bad == 0,
          std::to_string(digraphs) + " digraphs (<= " + std::to_string(kMaxDijoinVertices) + " vertices, <= " +
              std::to_string(kMaxDijoinArcs) + " arcs) x k=0..3: " + std::to_string(dj_bad) +
              " mismatches; " + std::to_string(scenarios) + " allowed-arc scenarios x k=0..3: " +
              std::to_string(sc_bad) + " mismatches"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> expect_fail;
  std::vector<int> only;
  app.add_option("--expect-fail", expect_fail, "criteria known to fail; exit 0 when exactly these fail");
  app.add_option("--only", only, "run just these criteria");
  CLI11_PARSE(app, argc, argv);
  auto wanted = [&](int i) { return only.empty() || std::count(only.begin(), only.end(), i); };

  Corpus corpus;
  const bool need_corpus = wanted(1) || wanted(2) || wanted(3) || wanted(5) || wanted(6) || wanted(8);
  if (need_corpus) corpus = build_corpus();

  const std::vector<std::pair<std::string, std::function<Line()>>> criteria{
      {"oracle equivalence, PSCA", [&] { return oracle_equivalence(corpus, false); }},
      {"oracle equivalence, Directed-PSCA", [&] { return oracle_equivalence(corpus, true); }},
      {"Monte-Carlo soundness and power", [&] { return monte_carlo(corpus); }},
      {"counting checks", [&] { return counting(); }},
      {"census identities and bounds", [&] { return census(corpus); }},
      {"reconfiguration and simple-face restrictions", [&] { return structure(corpus); }},
      {"hardness reduction", [&] { return hardness(); }},
      {"dijoin correctness", [&] { return dijoin(corpus); }},
  };
  std::set<int> failed;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!wanted(id)) continue;
    const auto t = Clock::now();
    Line l = criteria[i].second();
    if (!l.pass) failed.insert(id);
    std::cout << (l.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << criteria[i].first << "): " << l.detail
              << " [" << fmt(seconds_since(t)) << " s]" << std::endl;
  }
  std::set<int> expected;
  for (int i : expect_fail)
    if (wanted(i)) expected.insert(i);
  return failed == expected ? 0 : 1;
}

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "oa/plane_graph.hpp"

namespace oa {

struct SolveStats {
  std::uint64_t branches = 0;
  std::uint64_t dijoin_calls = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

struct SolveReport {
  bool yes = false;
  int optimum = -1;  // size of the witness when yes; minimum when `exact_optimum`
  bool exact_optimum = false;
  Completion witness;
  Mode mode = Mode::oriented;
  std::string method;
  SolveStats stats;
};

struct VerifyResult {
  bool ok = false;
  std::optional<ErrorKind> error;  // set when insertion failed
  std::string message;
};

// insert_arcs in `mode`, then strong connectivity of D+X.
VerifyResult verify_solution(const PlaneDigraph& d, const Completion& x, Mode mode);

struct OracleLimits {
  int max_vertices = 12;
  int max_budget = 5;
};

// Exact minimum over all completions of size <= k, by iterative deepening with a terminal-covering branch.
// `mode` is oriented or directed. Throws BudgetTooLargeForOracle beyond `limits`.
SolveReport brute_solve(const PlaneDigraph& d, int k, Mode mode, const OracleLimits& limits = {});

enum class PscaMode { Exhaustive, MonteCarlo };

// Largest number of candidates of one simple face seen on a random calibration corpus; the
// acceptance corpus stays below it. Default trial counts use the largest candidate count of the
// branch at hand instead.
inline constexpr int kSimpleCandidateBound = 215;
inline constexpr std::uint64_t kDefaultSeed = 0x5eed2024ULL;

struct PscaOptions {
  PscaMode mode = PscaMode::Exhaustive;
  std::uint64_t trials = 0;  // per branch; 0 picks ceil(c^q ln 20), c the branch's widest candidate list
  std::uint64_t seed = kDefaultSeed;
};

// ceil(c^q * ln 20): trials giving success probability >= 0.95 when each of q faces has <= c candidates.
std::uint64_t default_trials(int c, int q);

// Plane oriented D. Exhaustive answers are exact; Monte-Carlo Yes answers are verified, No may err.
SolveReport solve_psca(const PlaneDigraph& d, int k, const PscaOptions& opt = {});

// Plane digraph D; exact.
SolveReport solve_directed(const PlaneDigraph& d, int k);

// Every candidate new arc (face, tail position, head position) legal in `mode` on its own.
std::vector<NewArc> candidate_arcs(const PlaneDigraph& d, Mode mode);

// Lower bound max(#source components, #sink components) on the arcs still needed.
int terminal_lower_bound(int n, const std::vector<std::pair<int, int>>& arcs);

enum class Verdict { Yes, No, Unknown };

struct AugmentabilityReport {
  Verdict verdict = Verdict::Unknown;
  Completion witness;  // a strong completion when Yes
  std::uint64_t nodes = 0;
};

// Whether any completion (no size bound, mode=oriented) makes D strong. Exact branch and bound
// on the arcs covering one terminal component at a time; Unknown once `node_limit` nodes are spent.
AugmentabilityReport decide_augmentable(const PlaneDigraph& d, std::uint64_t node_limit = 2'000'000);

}  // namespace oa

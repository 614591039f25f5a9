#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "oa/face_analysis.hpp"
#include "oa/plane_graph.hpp"

namespace oa {

// Triangulations of a convex m-gon with vertices 0..m-1, each as its m-3 diagonals (i<j), sorted.
std::vector<std::vector<std::pair<int, int>>> enumerate_triangulations(int m);

// Whether `a` can join the completion `x` of D in `mode`: distinct end vertices, no crossing with
// arcs of x in the same face, no parallel arc with D or x, and in oriented mode no digon.
bool can_add_arc(const PlaneDigraph& d, const Completion& x, const NewArc& a, Mode mode);

// Every supported completion of `face` with at most `ell` arcs, legal in `mode`, as sorted arc
// lists. Strong faces only get the empty completion.
std::vector<Completion> supported_completions(const PlaneDigraph& d, const Classification& cls, int face, int ell,
                                              Mode mode = Mode::oriented);

// Supported completions of a simple face with 1..3 arcs that pass the minimality filters of
// simple_face_candidates on D itself and strictly coarsen the strong components of D[V(F)].
// Throws NotSimpleFace.
std::vector<Completion> minimal_simple_completions(const PlaneDigraph& d, const Classification& cls, int face);

// Supported completions of the simple face `face` of D with 1..max_arcs arcs that are insertable
// in `context` (D plus arcs elsewhere; D's arc ids are kept) and minimal there: no arc inside one
// strong component of `context`, at most one arc per pair of its components, and no arc whose tail
// reaches its head without it. Returned in D's face numbering. Throws NotSimpleFace.
std::vector<Completion> simple_face_candidates(const PlaneDigraph& d, const Classification& cls, int face,
                                               const PlaneDigraph& context, int max_arcs);

// The context filter of simple_face_candidates applied to a precomputed pool of completions of D.
std::vector<Completion> filter_simple_candidates(const PlaneDigraph& d, const std::vector<Completion>& pool,
                                                 const PlaneDigraph& context);

// Calls `visit` with each joint completion built from one supported completion per alternating
// face, total size <= k, jointly legal in `mode`. Stops early when `visit` returns false.
// Returns the number of branches visited.
std::uint64_t for_each_alternating_branch(const PlaneDigraph& d, const Classification& cls, int k, Mode mode,
                                          const std::function<bool(const Completion&)>& visit);

// Directed mode: every completion of `face` whose arcs join local-terminal angles, pairwise
// non-crossing, each pair decorated absent / forward / backward / digon, at most `budget` arcs.
// Arcs (u,v) with v already reachable from u in D are left out.
std::vector<Completion> directed_supported_completions(const PlaneDigraph& d, const Classification& cls, int face,
                                                       int budget);

}  // namespace oa

#pragma once

#include <utility>
#include <vector>

#include "oa/plane_graph.hpp"

namespace oa {

using ArcPairs = std::vector<std::pair<int, int>>;

struct SccPartition {
  std::vector<int> comp;                   // component id per vertex
  int count = 0;
  std::vector<std::vector<int>> members;   // vertices per component, ascending
  std::vector<std::pair<int, int>> dag;    // distinct arcs between components
  std::vector<bool> source, sink;          // terminal flags; all false when count <= 1

  bool strong() const { return count <= 1; }
  int terminal_count() const;
  int source_count() const;
  int sink_count() const;
};

SccPartition scc(int n, const ArcPairs& arcs);
SccPartition scc(const PlaneDigraph& d);
bool is_strong(int n, const ArcPairs& arcs);

// Reachability from `from` in the given digraph.
std::vector<char> reachable_from(int n, const ArcPairs& arcs, int from);

struct CondensationResult {
  PlaneDigraph condensed;                 // mode=multi; loops and multi-arcs kept
  std::vector<VertexId> vertex_map;       // original vertex -> condensed vertex
  std::vector<ArcId> arc_to_original;     // condensed arc -> original arc
  std::vector<ArcId> contraction_log;     // contracted original arcs, in order
};

CondensationResult condense(const PlaneDigraph& d);

// Maps a solution of the condensed graph back onto D. Each endpoint at a merged vertex
// lands on the original vertex whose corner the condensed corner came from, which is
// u when the arc is drawn in a face of F_u(D) and v otherwise.
Completion lift_solution(const PlaneDigraph& original, const CondensationResult& cond, const Completion& xc);

// Loop splitting: parts are loopless; the minimum augmentation cost of the input equals
// the sum of the part costs. Each part's maps point at the input graph.
struct LoopSplit {
  std::vector<Subgraph> parts;
};

LoopSplit split_loops(const PlaneDigraph& d);

// End map from a subgraph to its parent (end ids keep their tail/head role).
std::vector<EndId> subgraph_end_map(const Subgraph& s);

}  // namespace oa

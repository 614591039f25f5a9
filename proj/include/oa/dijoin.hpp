#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oa/plane_graph.hpp"
#include "oa/strongconn.hpp"

namespace oa {

// D + reversed(Y) is strong. Throws UnknownArc for ids outside the arc list.
bool is_dijoin(int n, const ArcPairs& arcs, const std::vector<int>& y);

// A minimum dijoin when its size is at most k. `branches` counts search nodes when given.
std::optional<std::vector<int>> min_dijoin_upto(int n, const ArcPairs& arcs, int k,
                                                std::uint64_t* branches = nullptr);

// Allowed arcs of one simple face plus the vertex the gadget paths start from.
struct AllowedFace {
  VertexId source = 0;
  Completion arcs;
};

struct DijoinInstance {
  int n = 0;
  int original_vertices = 0;
  int k = 0;
  ArcPairs arcs;
  std::vector<char> gadget;        // per arc: 1 for the (x, u) arc of a gadget
  std::vector<int> candidate_of;   // per arc: index into `candidates`, -1 otherwise
  std::vector<NewArc> candidates;  // allowed arcs, in face order
  std::vector<int> gadget_vertex;  // per candidate: its x vertex
};

// (k+1)-subdivision of D plus one gadget per allowed arc (u,v): the arc (x,u), a directed path of
// length k+1 from the face's source vertex to x, and one from x to v. Throws NotACandidate when an
// allowed completion cannot be inserted into D in `mode`.
DijoinInstance build_auxiliary(const PlaneDigraph& d, const std::vector<AllowedFace>& allowed, int k, Mode mode);

// Completion arcs whose gadget arc lies in Y. Throws NonGadgetArcInY for any other arc.
Completion extract_solution(const DijoinInstance& inst, const std::vector<int>& y);

}  // namespace oa

#pragma once

#include <vector>

#include "oa/plane_graph.hpp"

namespace oa {

// Rotation code from the lexicographically smallest root end; equal codes mean the two connected
// plane digraphs are isomorphic by an orientation-preserving map.
std::vector<int> canonical_code(const PlaneDigraph& d);

// Every connected plane oriented graph on 1..max_n vertices, one per orientation-preserving
// isomorphism class of the embedding. Grown from the single vertex by pendant arcs and face chords.
std::vector<PlaneDigraph> small_plane_graphs(int max_n);

}  // namespace oa

#pragma once

#include <cstdint>

#include "oa/plane_graph.hpp"

namespace oa {

struct RandomPlaneOptions {
  int n = 6;
  double extra_edge_prob = 0.5;  // chance to keep each non-tree edge of a greedy triangulation
  bool connected = true;
  Mode mode = Mode::oriented;
  double acyclic_bias = 0.0;  // probability of orienting an edge from lower to higher random rank
};

// Random straight-line plane graph with a random orientation; reproducible from `seed`.
PlaneDigraph random_plane_graph(const RandomPlaneOptions& opt, std::uint64_t seed);

}  // namespace oa

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oa/face_analysis.hpp"
#include "oa/plane_graph.hpp"

namespace oa {

enum class Side { Left, Right };

struct SupportFamily {
  Interval interval;
  Side side = Side::Left;
  int q = 0;
  // each member: interval offsets (0 = first angle of the interval), ascending
  std::vector<std::vector<int>> members;
};

struct SupportStats {
  std::uint64_t adjacency_queries = 0;
};

// Unique common neighbour in V(F) of the vertices at boundary positions pos_a and pos_b of
// `face`, adjacency taken in D irrespective of orientation. Throws MultipleCommonNeighbours.
std::optional<VertexId> common_neighbour(const PlaneDigraph& d, int face, int pos_a, int pos_b,
                                         SupportStats* stats = nullptr);

SupportFamily left_supports(const PlaneDigraph& d, const Interval& interval, int q, SupportStats* stats = nullptr);
SupportFamily right_supports(const PlaneDigraph& d, const Interval& interval, int q, SupportStats* stats = nullptr);

// Whether the used offsets of an interval lie in B^L ∪ B^R for some left and right q-supports,
// q being the number of used offsets.
bool supported_on(const PlaneDigraph& d, const Interval& interval, const std::vector<int>& used_offsets);

// Offsets of `interval` that occur in some left or right q-support for q <= qmax.
std::vector<int> support_reach(const PlaneDigraph& d, const Interval& interval, int qmax);

// Every local terminal and dipath of the face carries its endpoints on a support.
bool face_completion_supported(const PlaneDigraph& d, const FaceAnalysis& fa, const Completion& x_face);

// All faces; arcs of x are grouped by their host face.
bool completion_supported(const PlaneDigraph& d, const Classification& cls, const Completion& x);

}  // namespace oa

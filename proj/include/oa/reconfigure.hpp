#pragma once

#include <vector>

#include "oa/face_analysis.hpp"
#include "oa/plane_graph.hpp"
#include "oa/supports.hpp"

namespace oa {

// One end of an arc of a multicompletion, by index into the completion.
struct EndpointRef {
  int arc = 0;
  bool head = false;
  bool operator==(const EndpointRef&) const = default;
};

// A multicompletion is stored as a Completion whose arcs may be loops, parallel to each other or
// form digons among themselves. Arcs never cross and never double an arc of D.
bool is_multicompletion(const PlaneDigraph& d, const Completion& x);

// Whether D+X is strongly connected, X read as a multiset of vertex pairs.
bool strong_with_multi(const PlaneDigraph& d, const Completion& x);

// Endpoints of x lying on `interval`, left to right. Endpoints sharing an angle are ordered by
// their chords, the one hugging the boundary on the left first.
std::vector<EndpointRef> interval_endpoints(const PlaneDigraph& d, const Interval& interval, const Completion& x);

struct ShiftResult {
  Completion x;
  bool moved = false;
  int from = -1;  // interval offsets
  int to = -1;
};

// Moves the endpoint to the extreme legal angle strictly before it (Left) or after it (Right),
// never past the neighbouring endpoint of the interval. A position is legal when its vertex is not
// adjacent in D to the other end of the arc; landing on that end itself leaves a loop.
// Throws EndpointNotFound.
ShiftResult shift(const PlaneDigraph& d, const Interval& interval, const Completion& x, EndpointRef e, Side dir);

struct GatherResult {
  Completion x;
  bool rightwards = true;  // endpoints at i moved onto j; otherwise those at j moved onto i
};

// Offsets i < j with no endpoint strictly between. When `only` is non-empty, just those endpoints
// take part. Throws GatherBlocked when neither direction succeeds.
GatherResult gather(const PlaneDigraph& d, const Interval& interval, const Completion& x, int i, int j,
                    const std::vector<EndpointRef>& only = {});

// Number of endpoints in the maximal prefix (suffix) that cannot be shifted left (right).
int left_stack_size(const PlaneDigraph& d, const Interval& interval, const Completion& x);
int right_stack_size(const PlaneDigraph& d, const Interval& interval, const Completion& x);

// Drops arcs, last first, while D+X stays strong.
Completion prune_minimal(const PlaneDigraph& d, const Completion& x);

struct ReconfigureStats {
  int shifts = 0;
  int gathers = 0;
  int pruned = 0;
  int fallbacks = 0;  // middle sets placed by scanning the dipath instead of gathering
};

// A supported solution with at most |X| arcs. Throws NotASolution when X is not a solution.
Completion to_supported(const PlaneDigraph& d, const Completion& x, ReconfigureStats* stats = nullptr);

}  // namespace oa

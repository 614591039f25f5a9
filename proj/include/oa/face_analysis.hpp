#pragma once

#include <vector>

#include "oa/plane_graph.hpp"
#include "oa/strongconn.hpp"

namespace oa {

enum class IntervalKind { StrongInterval, LocalSource, LocalSink, IntervalDipath };
const char* interval_kind_name(IntervalKind k);

// A clockwise run of boundary positions [start, end] of one face (cyclic, inclusive).
struct Interval {
  int face = 0;
  int start = 0;
  int end = 0;
  int length = 0;
  IntervalKind kind = IntervalKind::StrongInterval;

  std::vector<int> positions(int face_size) const;
  bool contains(int pos, int face_size) const;
  // index of pos inside the interval, -1 when outside
  int offset(int pos, int face_size) const;
};

enum class FaceKind { Strong, Simple, Alternating };
const char* face_kind_name(FaceKind k);

struct FaceClass {
  FaceKind kind = FaceKind::Strong;
  int lt = 0;
};

struct FaceAnalysis {
  int face = 0;
  std::vector<Interval> strong;     // tiling by strong intervals
  std::vector<Interval> terminals;  // local terminals in clockwise order
  std::vector<Interval> dipaths;    // non-empty interval dipaths in clockwise order
  FaceClass cls;
};

std::vector<Interval> strong_intervals(const PlaneDigraph& d, const SccPartition& p, int face);
// (local sources, local sinks)
std::pair<std::vector<Interval>, std::vector<Interval>> local_terminals(const PlaneDigraph& d, const SccPartition& p,
                                                                        int face);
std::vector<Interval> interval_dipaths(const PlaneDigraph& d, const SccPartition& p, int face);
FaceAnalysis analyze_face(const PlaneDigraph& d, const SccPartition& p, int face);

struct Census {
  int two_arcs = 0;          // 2|A|
  int sum_lt = 0;            // sum over faces of lt(F)
  int sum_lt_angles = 0;     // angles lying inside local terminals
  int sum_nonlocal = 0;      // angles outside local terminals, summed over vertices
  int terminals = 0;         // |T(D)|
  int sum_lt_minus_2 = 0;    // sum over faces of lt(F) - 2
  int alternating_lt = 0;    // sum over alternating faces of lt(F)
  bool acyclic = false;
  // sum_lt_angles + sum_nonlocal == two_arcs; on acyclic graphs sum_lt == sum_lt_angles
  bool identity_holds() const { return sum_lt_angles + sum_nonlocal == two_arcs; }
  // plane DAG bound sum(lt-2) <= 2|T| - 4
  bool dag_bound_holds() const { return !acyclic || sum_lt_minus_2 <= 2 * terminals - 4; }
  // alternating bound sum_AF lt <= 4|T| - 8 whenever |T| >= 2
  bool alternating_bound_holds() const { return terminals < 2 || alternating_lt <= 4 * terminals - 8; }
};

struct Classification {
  SccPartition scc;
  std::vector<FaceAnalysis> faces;
  Census census;
  std::vector<int> nonlocal;  // per vertex
};

// Throws CensusMismatch if the angle identity fails.
Classification classify_all(const PlaneDigraph& d);

}  // namespace oa

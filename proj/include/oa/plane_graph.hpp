#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oa/errors.hpp"

namespace oa {

enum class Mode { oriented, directed, multi };

const char* mode_name(Mode m);
Mode parse_mode(const std::string& s);

using VertexId = int;
using ArcId = int;
// Arc-end ids: 2*a is the tail end of arc a, 2*a+1 its head end.
using EndId = int;

inline ArcId end_arc(EndId e) { return e >> 1; }
inline bool end_is_tail(EndId e) { return (e & 1) == 0; }
inline EndId twin(EndId e) { return e ^ 1; }
inline EndId tail_end(ArcId a) { return 2 * a; }
inline EndId head_end(ArcId a) { return 2 * a + 1; }

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;
  bool operator==(const Arc&) const = default;
};

struct Angle {
  int face = 0;
  int position = 0;
  VertexId vertex = 0;
  ArcId preceding = 0;
  ArcId following = 0;
};

struct Face {
  int id = 0;
  std::vector<Angle> boundary;
  // darts[i] leaves boundary[i].vertex along boundary[i].following; it also names the corner.
  std::vector<EndId> darts;
  bool outer = false;
  int size() const { return static_cast<int>(boundary.size()); }
  VertexId vertex(int pos) const { return boundary[pos].vertex; }
  // true when the boundary arc from position pos to pos+1 is directed that way
  bool forward(int pos) const { return end_is_tail(darts[pos]); }
};

struct NewArc {
  int face = 0;
  int tail = 0;  // boundary position of the tail angle
  int head = 0;  // boundary position of the head angle
  bool operator==(const NewArc&) const = default;
  auto operator<=>(const NewArc&) const = default;
};

using Completion = std::vector<NewArc>;

class PlaneDigraph {
 public:
  PlaneDigraph() = default;

  // Throws DuplicateArcEnd or ModeViolation. Disconnected inputs are accepted and flagged.
  static PlaneDigraph build(int n, std::vector<Arc> arcs, std::vector<std::vector<EndId>> rotation,
                            Mode mode);

  int vertex_count() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(ArcId a) const { return arcs_[a]; }
  const std::vector<EndId>& rotation(VertexId v) const { return rotation_[v]; }
  const std::vector<std::vector<EndId>>& rotations() const { return rotation_; }
  Mode mode() const { return mode_; }
  bool connected() const { return connected_; }

  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int f) const { return faces_[f]; }
  int face_count() const { return static_cast<int>(faces_.size()); }

  VertexId end_vertex(EndId e) const { return end_is_tail(e) ? arcs_[end_arc(e)].tail : arcs_[end_arc(e)].head; }
  EndId rot_next(EndId e) const;
  EndId rot_prev(EndId e) const;

  // The corner just before end e in the rotation at its vertex, as (face, position).
  std::pair<int, int> corner_of(EndId e) const { return corner_[e]; }
  EndId corner_end(int face, int pos) const { return faces_[face].darts[pos]; }

  const Angle& angle(int face, int pos) const { return faces_[face].boundary[pos]; }

  bool has_arc(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return has_arc(u, v) || has_arc(v, u); }

  // First violation of `mode` among arcs with id >= first_checked paired with any arc.
  std::optional<std::string> mode_violation(Mode mode, ArcId first_checked = 0) const;

  std::vector<std::pair<VertexId, VertexId>> arc_pairs() const;

 private:
  friend PlaneDigraph insert_arcs(const PlaneDigraph& d, const Completion& x, Mode mode);
  void trace_faces();
  void compute_connectivity();

  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<EndId>> rotation_;
  std::vector<int> rot_index_;  // per end: index inside its vertex rotation
  Mode mode_ = Mode::oriented;
  bool connected_ = true;
  std::vector<Face> faces_;
  std::vector<std::pair<int, int>> corner_;
  std::vector<std::vector<VertexId>> out_nbrs_;  // sorted, with multiplicity
};

// Vertex-level endpoints of a completion on D.
std::pair<VertexId, VertexId> new_arc_vertices(const PlaneDigraph& d, const NewArc& a);

// Whether two chords of one face interleave on its cyclic boundary.
bool chords_cross(int a, int b, int c, int d);

// D + X with rotations updated; new arcs get ids arc_count()+i. Validation of the
// new arcs follows `mode`; the result carries the looser of `mode` and D's own mode.
PlaneDigraph insert_arcs(const PlaneDigraph& d, const Completion& x, Mode mode);
inline PlaneDigraph insert_arcs(const PlaneDigraph& d, const Completion& x) { return insert_arcs(d, x, d.mode()); }

// Subgraph keeping arcs with keep[a] true; vertices are renumbered when `vertex_keep` is given.
struct Subgraph {
  PlaneDigraph graph;
  std::vector<ArcId> arc_to_parent;
  std::vector<VertexId> vertex_to_parent;
};
Subgraph arc_subgraph(const PlaneDigraph& d, const std::vector<bool>& keep_arc,
                      const std::vector<bool>& keep_vertex, Mode mode);

std::vector<std::vector<Angle>> angle_table(const PlaneDigraph& d);

// Rotation system of a straight-line drawing: ends sorted clockwise by direction.
PlaneDigraph build_from_positions(int n, const std::vector<Arc>& arcs, const std::vector<std::pair<double, double>>& xy,
                                  Mode mode);

// Translate a completion between two graphs whose corners are named by arc-ends:
// `end_map` sends an end id of `from` to an end id of `to`.
Completion map_completion(const PlaneDigraph& from, const PlaneDigraph& to, const Completion& x,
                          const std::vector<EndId>& end_map);

}  // namespace oa

#include "oa/plane_graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <tuple>

namespace oa {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DuplicateArcEnd: return "DuplicateArcEnd";
    case ErrorKind::ModeViolation: return "ModeViolation";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::CrossingArcs: return "CrossingArcs";
    case ErrorKind::StaleAngle: return "StaleAngle";
    case ErrorKind::NotASolution: return "NotASolution";
    case ErrorKind::CensusMismatch: return "CensusMismatch";
    case ErrorKind::MultipleCommonNeighbours: return "MultipleCommonNeighbours";
    case ErrorKind::NotSimpleFace: return "NotSimpleFace";
    case ErrorKind::EndpointNotFound: return "EndpointNotFound";
    case ErrorKind::GatherBlocked: return "GatherBlocked";
    case ErrorKind::UnknownArc: return "UnknownArc";
    case ErrorKind::NotACandidate: return "NotACandidate";
    case ErrorKind::NonGadgetArcInY: return "NonGadgetArcInY";
    case ErrorKind::BudgetTooLargeForOracle: return "BudgetTooLargeForOracle";
    case ErrorKind::InvalidArity: return "InvalidArity";
    case ErrorKind::EmbeddingConflict: return "EmbeddingConflict";
    case ErrorKind::AssignmentDoesNotSatisfy: return "AssignmentDoesNotSatisfy";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InfeasibleParameters: return "InfeasibleParameters";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Unknown";
}

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::oriented: return "oriented";
    case Mode::directed: return "directed";
    case Mode::multi: return "multi";
  }
  return "?";
}

Mode parse_mode(const std::string& s) {
  if (s == "oriented") return Mode::oriented;
  if (s == "directed") return Mode::directed;
  if (s == "multi") return Mode::multi;
  throw Error(ErrorKind::UsageError, "unknown mode '" + s + "'");
}

PlaneDigraph PlaneDigraph::build(int n, std::vector<Arc> arcs, std::vector<std::vector<EndId>> rotation,
                                 Mode mode) {
  PlaneDigraph d;
  d.n_ = n;
  d.arcs_ = std::move(arcs);
  d.rotation_ = std::move(rotation);
  d.mode_ = mode;
  const int m = d.arc_count();
  if (static_cast<int>(d.rotation_.size()) != n) d.rotation_.resize(n);
  for (const Arc& a : d.arcs_) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
      throw Error(ErrorKind::ModeViolation, "arc endpoint out of range");
  }
  d.rot_index_.assign(2 * m, -1);
  for (int v = 0; v < n; ++v) {
    const auto& rot = d.rotation_[v];
    for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
      EndId e = rot[i];
      if (e < 0 || e >= 2 * m)
        throw Error(ErrorKind::DuplicateArcEnd, "unknown arc-end " + std::to_string(e) + " at vertex " + std::to_string(v));
      if (d.rot_index_[e] != -1)
        throw Error(ErrorKind::DuplicateArcEnd, "arc-end of arc " + std::to_string(end_arc(e)) + " listed twice");
      if (d.end_vertex(e) != v)
        throw Error(ErrorKind::DuplicateArcEnd, "arc-end of arc " + std::to_string(end_arc(e)) + " listed at wrong vertex " + std::to_string(v));
      d.rot_index_[e] = i;
    }
  }
  for (EndId e = 0; e < 2 * m; ++e)
    if (d.rot_index_[e] == -1)
      throw Error(ErrorKind::DuplicateArcEnd, "arc-end of arc " + std::to_string(end_arc(e)) + " missing from rotations");
  d.out_nbrs_.assign(n, {});
  for (const Arc& a : d.arcs_) d.out_nbrs_[a.tail].push_back(a.head);
  for (auto& v : d.out_nbrs_) std::sort(v.begin(), v.end());
  if (auto bad = d.mode_violation(mode)) throw Error(ErrorKind::ModeViolation, *bad);
  d.trace_faces();
  d.compute_connectivity();
  return d;
}

EndId PlaneDigraph::rot_next(EndId e) const {
  const auto& rot = rotation_[end_vertex(e)];
  int i = rot_index_[e] + 1;
  return rot[i == static_cast<int>(rot.size()) ? 0 : i];
}

EndId PlaneDigraph::rot_prev(EndId e) const {
  const auto& rot = rotation_[end_vertex(e)];
  int i = rot_index_[e];
  return rot[i == 0 ? rot.size() - 1 : i - 1];
}

bool PlaneDigraph::has_arc(VertexId u, VertexId v) const {
  const auto& o = out_nbrs_[u];
  return std::binary_search(o.begin(), o.end(), v);
}

void PlaneDigraph::trace_faces() {
  const int m = arc_count();
  faces_.clear();
  corner_.assign(2 * m, {-1, -1});
  for (EndId start = 0; start < 2 * m; ++start) {
    if (corner_[start].first != -1) continue;
    Face f;
    f.id = static_cast<int>(faces_.size());
    EndId d = start;
    do {
      corner_[d] = {f.id, static_cast<int>(f.darts.size())};
      f.darts.push_back(d);
      d = rot_next(twin(d));
    } while (d != start);
    const int len = static_cast<int>(f.darts.size());
    for (int i = 0; i < len; ++i) {
      Angle a;
      a.face = f.id;
      a.position = i;
      a.vertex = end_vertex(f.darts[i]);
      a.following = end_arc(f.darts[i]);
      a.preceding = end_arc(f.darts[(i + len - 1) % len]);
      f.boundary.push_back(a);
    }
    faces_.push_back(std::move(f));
  }
  if (m == 0 && n_ > 0) {
    Face f;
    f.id = 0;
    faces_.push_back(f);
  }
  int outer = 0;
  if (m > 0) {
    for (int v = 0; v < n_; ++v)
      if (!rotation_[v].empty()) {
        outer = corner_[rotation_[v][0]].first;
        break;
      }
  }
  if (!faces_.empty()) faces_[outer].outer = true;
}

void PlaneDigraph::compute_connectivity() {
  if (n_ == 0) {
    connected_ = true;
    return;
  }
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = n_;
  for (const Arc& a : arcs_) {
    int x = find(a.tail), y = find(a.head);
    if (x != y) {
      parent[x] = y;
      --comps;
    }
  }
  connected_ = comps == 1;
}

std::optional<std::string> PlaneDigraph::mode_violation(Mode mode, ArcId first_checked) const {
  if (mode == Mode::multi) return std::nullopt;
  const int m = arc_count();
  for (ArcId a = first_checked; a < m; ++a)
    if (arcs_[a].tail == arcs_[a].head) return "loop on arc " + std::to_string(a);
  // (lo, hi, forward, id)
  std::vector<std::tuple<int, int, int, int>> keyed;
  keyed.reserve(m);
  for (ArcId a = 0; a < m; ++a) {
    int u = arcs_[a].tail, v = arcs_[a].head;
    if (u == v) continue;
    keyed.emplace_back(std::min(u, v), std::max(u, v), u < v ? 1 : 0, a);
  }
  std::sort(keyed.begin(), keyed.end());
  for (size_t i = 0; i < keyed.size();) {
    size_t j = i;
    while (j < keyed.size() && std::get<0>(keyed[j]) == std::get<0>(keyed[i]) &&
           std::get<1>(keyed[j]) == std::get<1>(keyed[i]))
      ++j;
    for (size_t x = i; x < j; ++x)
      for (size_t y = x + 1; y < j; ++y) {
        int ax = std::get<3>(keyed[x]), ay = std::get<3>(keyed[y]);
        if (ax < first_checked && ay < first_checked) continue;
        bool same_dir = std::get<2>(keyed[x]) == std::get<2>(keyed[y]);
        if (same_dir)
          return "parallel arcs " + std::to_string(ax) + " and " + std::to_string(ay);
        if (mode == Mode::oriented)
          return "digon between arcs " + std::to_string(ax) + " and " + std::to_string(ay);
      }
    i = j;
  }
  return std::nullopt;
}

std::vector<std::pair<VertexId, VertexId>> PlaneDigraph::arc_pairs() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(arcs_.size());
  for (const Arc& a : arcs_) out.emplace_back(a.tail, a.head);
  return out;
}

std::pair<VertexId, VertexId> new_arc_vertices(const PlaneDigraph& d, const NewArc& a) {
  const Face& f = d.face(a.face);
  return {f.vertex(a.tail), f.vertex(a.head)};
}

bool chords_cross(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  if (a == c || a == d || b == c || b == d) return false;
  bool c_in = a < c && c < b;
  bool d_in = a < d && d < b;
  return c_in != d_in;
}

namespace {
Mode looser(Mode a, Mode b) {
  auto rank = [](Mode m) { return m == Mode::oriented ? 0 : m == Mode::directed ? 1 : 2; };
  return rank(a) >= rank(b) ? a : b;
}
}  // namespace

PlaneDigraph insert_arcs(const PlaneDigraph& d, const Completion& x, Mode mode) {
  const int m = d.arc_count();
  for (const NewArc& a : x) {
    if (a.face < 0 || a.face >= d.face_count())
      throw Error(ErrorKind::StaleAngle, "face " + std::to_string(a.face) + " does not exist");
    int len = d.face(a.face).size();
    if (a.tail < 0 || a.tail >= len || a.head < 0 || a.head >= len)
      throw Error(ErrorKind::StaleAngle, "angle position out of range in face " + std::to_string(a.face));
  }
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i + 1; j < x.size(); ++j)
      if (x[i].face == x[j].face && chords_cross(x[i].tail, x[i].head, x[j].tail, x[j].head))
        throw Error(ErrorKind::CrossingArcs, "new arcs " + std::to_string(i) + " and " + std::to_string(j) +
                                                 " interleave in face " + std::to_string(x[i].face));
  std::vector<Arc> arcs = d.arcs();
  for (const NewArc& a : x) {
    auto [u, v] = new_arc_vertices(d, a);
    arcs.push_back({u, v});
  }
  // per corner (named by its following end): new ends with their nesting keys
  struct Pending {
    int key;
    int tie;
    int sub;
    EndId end;
  };
  std::map<EndId, std::vector<Pending>> at;
  for (size_t i = 0; i < x.size(); ++i) {
    const NewArc& a = x[i];
    const int len = d.face(a.face).size();
    const ArcId id = m + static_cast<int>(i);
    auto add = [&](int here, int there, EndId end, int sub) {
      int key = ((here - there) % len + len) % len;
      int tie = (here < there || here == there) ? static_cast<int>(i) : -static_cast<int>(i);
      at[d.corner_end(a.face, here)].push_back({key, tie, sub, end});
    };
    add(a.tail, a.head, tail_end(id), 0);
    add(a.head, a.tail, head_end(id), 1);
  }
  std::vector<std::vector<EndId>> rot(d.vertex_count());
  for (int v = 0; v < d.vertex_count(); ++v) {
    for (EndId e : d.rotation(v)) {
      auto it = at.find(e);
      if (it != at.end()) {
        auto list = it->second;
        std::sort(list.begin(), list.end(), [](const Pending& p, const Pending& q) {
          return std::tie(p.key, p.tie, p.sub) < std::tie(q.key, q.tie, q.sub);
        });
        for (const Pending& p : list) rot[v].push_back(p.end);
      }
      rot[v].push_back(e);
    }
  }
  // a vertex without arcs has a single empty corner; only possible when D has no arcs
  if (m == 0 && !x.empty())
    throw Error(ErrorKind::StaleAngle, "graph without arcs has no angles");
  PlaneDigraph out = PlaneDigraph::build(d.vertex_count(), std::move(arcs), std::move(rot), Mode::multi);
  if (auto bad = out.mode_violation(mode, m)) throw Error(ErrorKind::ModeViolation, *bad);
  out.mode_ = looser(mode, d.mode());
  return out;
}

Subgraph arc_subgraph(const PlaneDigraph& d, const std::vector<bool>& keep_arc,
                      const std::vector<bool>& keep_vertex, Mode mode) {
  Subgraph s;
  std::vector<int> vnew(d.vertex_count(), -1);
  for (int v = 0; v < d.vertex_count(); ++v)
    if (keep_vertex[v]) {
      vnew[v] = static_cast<int>(s.vertex_to_parent.size());
      s.vertex_to_parent.push_back(v);
    }
  std::vector<int> anew(d.arc_count(), -1);
  std::vector<Arc> arcs;
  for (ArcId a = 0; a < d.arc_count(); ++a)
    if (keep_arc[a]) {
      const Arc& ar = d.arc(a);
      if (vnew[ar.tail] < 0 || vnew[ar.head] < 0)
        throw Error(ErrorKind::ModeViolation, "kept arc leaves the kept vertex set");
      anew[a] = static_cast<int>(arcs.size());
      arcs.push_back({vnew[ar.tail], vnew[ar.head]});
      s.arc_to_parent.push_back(a);
    }
  std::vector<std::vector<EndId>> rot(s.vertex_to_parent.size());
  for (size_t v = 0; v < s.vertex_to_parent.size(); ++v)
    for (EndId e : d.rotation(s.vertex_to_parent[v]))
      if (anew[end_arc(e)] >= 0) rot[v].push_back(2 * anew[end_arc(e)] + (e & 1));
  s.graph = PlaneDigraph::build(static_cast<int>(s.vertex_to_parent.size()), std::move(arcs), std::move(rot), mode);
  return s;
}

std::vector<std::vector<Angle>> angle_table(const PlaneDigraph& d) {
  std::vector<std::vector<Angle>> t;
  t.reserve(d.face_count());
  for (const Face& f : d.faces()) t.push_back(f.boundary);
  return t;
}

PlaneDigraph build_from_positions(int n, const std::vector<Arc>& arcs, const std::vector<std::pair<double, double>>& xy,
                                  Mode mode) {
  std::vector<std::vector<std::pair<double, EndId>>> dirs(n);
  for (ArcId a = 0; a < static_cast<int>(arcs.size()); ++a) {
    auto [ux, uy] = xy[arcs[a].tail];
    auto [vx, vy] = xy[arcs[a].head];
    dirs[arcs[a].tail].push_back({std::atan2(vy - uy, vx - ux), tail_end(a)});
    dirs[arcs[a].head].push_back({std::atan2(uy - vy, ux - vx), head_end(a)});
  }
  std::vector<std::vector<EndId>> rot(n);
  for (int v = 0; v < n; ++v) {
    std::sort(dirs[v].begin(), dirs[v].end(), [](const auto& p, const auto& q) { return p.first > q.first; });
    for (auto& [ang, e] : dirs[v]) rot[v].push_back(e);
  }
  return PlaneDigraph::build(n, arcs, std::move(rot), mode);
}

Completion map_completion(const PlaneDigraph& from, const PlaneDigraph& to, const Completion& x,
                          const std::vector<EndId>& end_map) {
  Completion out;
  out.reserve(x.size());
  for (const NewArc& a : x) {
    auto [ft, pt] = to.corner_of(end_map[from.corner_end(a.face, a.tail)]);
    auto [fh, ph] = to.corner_of(end_map[from.corner_end(a.face, a.head)]);
    if (ft != fh) throw Error(ErrorKind::StaleAngle, "mapped endpoints land in different faces");
    out.push_back({ft, pt, ph});
  }
  return out;
}

}  // namespace oa

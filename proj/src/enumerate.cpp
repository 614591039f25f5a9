#include "oa/enumerate.hpp"

#include <set>

namespace oa {

namespace {

std::vector<int> code_from(const PlaneDigraph& d, EndId root) {
  const int n = d.vertex_count();
  std::vector<int> label(n, -1);
  std::vector<EndId> entry(n, -1);
  std::vector<VertexId> queue{d.end_vertex(root)};
  label[queue[0]] = 0;
  entry[queue[0]] = root;
  std::vector<int> code;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    const VertexId v = queue[qi];
    const auto& rot = d.rotation(v);
    code.push_back(-1 - static_cast<int>(rot.size()));
    EndId e = entry[v];
    for (size_t k = 0; k < rot.size(); ++k, e = d.rot_next(e)) {
      const VertexId w = d.end_vertex(twin(e));
      if (label[w] < 0) {
        label[w] = static_cast<int>(queue.size());
        entry[w] = twin(e);
        queue.push_back(w);
      }
      code.push_back(2 * label[w] + (end_is_tail(e) ? 1 : 0));
    }
  }
  return code;
}

}  // namespace

std::vector<int> canonical_code(const PlaneDigraph& d) {
  if (d.arc_count() == 0) return {d.vertex_count()};
  std::vector<int> best;
  for (EndId e = 0; e < 2 * d.arc_count(); ++e) {
    auto c = code_from(d, e);
    if (best.empty() || c < best) best = std::move(c);
  }
  return best;
}

std::vector<PlaneDigraph> small_plane_graphs(int max_n) {
  std::vector<PlaneDigraph> out;
  if (max_n < 1) return out;
  std::set<std::vector<int>> seen;
  std::vector<PlaneDigraph> level{PlaneDigraph::build(1, {}, {{}}, Mode::oriented)};
  seen.insert(canonical_code(level[0]));
  auto keep = [&](PlaneDigraph g, std::vector<PlaneDigraph>& into) {
    if (seen.insert(canonical_code(g)).second) into.push_back(std::move(g));
  };
  // graphs with the same vertex count are closed under chords; a new vertex comes in as a pendant
  for (int n = 1; n <= max_n; ++n) {
    for (size_t i = 0; i < level.size(); ++i) {
      const PlaneDigraph d = level[i];
      for (int f = 0; f < d.face_count(); ++f) {
        const Face& face = d.face(f);
        for (int p = 0; p < face.size(); ++p)
          for (int q = 0; q < face.size(); ++q) {
            const VertexId u = face.vertex(p), v = face.vertex(q);
            if (u == v || d.adjacent(u, v)) continue;
            keep(insert_arcs(d, {{f, p, q}}, Mode::oriented), level);
          }
      }
    }
    std::vector<PlaneDigraph> next;
    if (n < max_n) {
      for (const PlaneDigraph& d : level) {
        const int m = d.arc_count();
        for (VertexId v = 0; v < n; ++v) {
          const auto& rot = d.rotation(v);
          const size_t slots = std::max<size_t>(rot.size(), 1);
          for (size_t at = 0; at < slots; ++at)
            for (int dir = 0; dir < 2; ++dir) {
              std::vector<Arc> arcs = d.arcs();
              arcs.push_back(dir == 0 ? Arc{v, n} : Arc{n, v});
              auto rots = d.rotations();
              const EndId here = dir == 0 ? tail_end(m) : head_end(m);
              rots[v].insert(rots[v].begin() + static_cast<long>(at), here);
              rots.push_back({twin(here)});
              keep(PlaneDigraph::build(n + 1, arcs, rots, Mode::oriented), next);
            }
        }
      }
    }
    for (auto& g : level) out.push_back(std::move(g));
    level = std::move(next);
  }
  return out;
}

}  // namespace oa

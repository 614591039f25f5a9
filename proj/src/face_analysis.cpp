#include "oa/face_analysis.hpp"

namespace oa {

const char* interval_kind_name(IntervalKind k) {
  switch (k) {
    case IntervalKind::StrongInterval: return "strong";
    case IntervalKind::LocalSource: return "source";
    case IntervalKind::LocalSink: return "sink";
    case IntervalKind::IntervalDipath: return "dipath";
  }
  return "?";
}

const char* face_kind_name(FaceKind k) {
  switch (k) {
    case FaceKind::Strong: return "strong";
    case FaceKind::Simple: return "simple";
    case FaceKind::Alternating: return "alternating";
  }
  return "?";
}

std::vector<int> Interval::positions(int face_size) const {
  std::vector<int> out;
  out.reserve(length);
  for (int i = 0; i < length; ++i) out.push_back((start + i) % face_size);
  return out;
}

int Interval::offset(int pos, int face_size) const {
  int off = ((pos - start) % face_size + face_size) % face_size;
  return off < length ? off : -1;
}

bool Interval::contains(int pos, int face_size) const { return offset(pos, face_size) >= 0; }

std::vector<Interval> strong_intervals(const PlaneDigraph& d, const SccPartition& p, int face) {
  const Face& f = d.face(face);
  const int len = f.size();
  std::vector<Interval> out;
  if (len == 0) return out;
  int cut = -1;
  for (int i = 0; i < len; ++i)
    if (p.comp[f.vertex((i + len - 1) % len)] != p.comp[f.vertex(i)]) {
      cut = i;
      break;
    }
  if (cut < 0) {
    out.push_back({face, 0, len - 1, len, IntervalKind::StrongInterval});
    return out;
  }
  int i = cut;
  int covered = 0;
  while (covered < len) {
    int c = p.comp[f.vertex(i)];
    int l = 1;
    while (l < len - covered && p.comp[f.vertex((i + l) % len)] == c) ++l;
    out.push_back({face, i, (i + l - 1) % len, l, IntervalKind::StrongInterval});
    covered += l;
    i = (i + l) % len;
  }
  return out;
}

namespace {

// Classifies each strong interval of a non-strong face; returns kinds aligned with `si`.
std::vector<IntervalKind> terminal_kinds(const Face& f, const std::vector<Interval>& si) {
  const int len = f.size();
  std::vector<IntervalKind> kinds;
  for (const Interval& it : si) {
    if (it.length == len) {
      kinds.push_back(IntervalKind::StrongInterval);
      continue;
    }
    bool pre_in = f.forward((it.start + len - 1) % len);  // arc from the previous angle points into I
    bool post_out = f.forward(it.end);
    if (!pre_in && post_out)
      kinds.push_back(IntervalKind::LocalSource);
    else if (pre_in && !post_out)
      kinds.push_back(IntervalKind::LocalSink);
    else
      kinds.push_back(IntervalKind::StrongInterval);
  }
  return kinds;
}

}  // namespace

std::pair<std::vector<Interval>, std::vector<Interval>> local_terminals(const PlaneDigraph& d, const SccPartition& p,
                                                                        int face) {
  FaceAnalysis a = analyze_face(d, p, face);
  std::pair<std::vector<Interval>, std::vector<Interval>> out;
  for (const Interval& t : a.terminals)
    (t.kind == IntervalKind::LocalSource ? out.first : out.second).push_back(t);
  return out;
}

std::vector<Interval> interval_dipaths(const PlaneDigraph& d, const SccPartition& p, int face) {
  return analyze_face(d, p, face).dipaths;
}

FaceAnalysis analyze_face(const PlaneDigraph& d, const SccPartition& p, int face) {
  FaceAnalysis a;
  a.face = face;
  const Face& f = d.face(face);
  const int len = f.size();
  a.strong = strong_intervals(d, p, face);
  auto kinds = terminal_kinds(f, a.strong);
  for (size_t i = 0; i < a.strong.size(); ++i)
    if (kinds[i] != IntervalKind::StrongInterval) {
      Interval t = a.strong[i];
      t.kind = kinds[i];
      a.terminals.push_back(t);
    }
  // rotate so that terminals are listed clockwise starting from the smallest start position
  const int lt = static_cast<int>(a.terminals.size());
  for (int i = 0; i < lt; ++i) {
    const Interval& t = a.terminals[i];
    const Interval& nx = a.terminals[(i + 1) % lt];
    int from = (t.end + 1) % len;
    int gap = ((nx.start - from) % len + len) % len;
    if (lt == 1) gap = len - t.length;
    if (gap > 0) a.dipaths.push_back({face, from, (from + gap - 1) % len, gap, IntervalKind::IntervalDipath});
  }
  a.cls.lt = lt;
  a.cls.kind = lt == 0 ? FaceKind::Strong : lt == 2 ? FaceKind::Simple : FaceKind::Alternating;
  return a;
}

Classification classify_all(const PlaneDigraph& d) {
  Classification c;
  c.scc = scc(d);
  c.nonlocal.assign(d.vertex_count(), 0);
  Census& s = c.census;
  s.two_arcs = 2 * d.arc_count();
  s.terminals = c.scc.terminal_count();
  s.acyclic = true;
  for (const Arc& a : d.arcs())
    if (c.scc.comp[a.tail] == c.scc.comp[a.head]) s.acyclic = false;
  for (int f = 0; f < d.face_count(); ++f) {
    FaceAnalysis a = analyze_face(d, c.scc, f);
    const int len = d.face(f).size();
    std::vector<char> in_terminal(len, 0);
    for (const Interval& t : a.terminals)
      for (int pos : t.positions(len)) in_terminal[pos] = 1;
    for (int pos = 0; pos < len; ++pos) {
      if (in_terminal[pos])
        ++s.sum_lt_angles;
      else
        ++c.nonlocal[d.face(f).vertex(pos)];
    }
    s.sum_lt += a.cls.lt;
    s.sum_lt_minus_2 += a.cls.lt - 2;
    if (a.cls.kind == FaceKind::Alternating) s.alternating_lt += a.cls.lt;
    c.faces.push_back(std::move(a));
  }
  for (int v : c.nonlocal) s.sum_nonlocal += v;
  if (!s.identity_holds())
    throw Error(ErrorKind::CensusMismatch, "local-terminal angles plus non-local angles differ from 2|A|");
  if (s.acyclic && s.sum_lt != s.sum_lt_angles)
    throw Error(ErrorKind::CensusMismatch, "a local terminal of an acyclic graph spans several angles");
  return c;
}

}  // namespace oa

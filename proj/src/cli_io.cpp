#include "oa/cli_io.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

namespace oa {

std::string write_pog(const PlaneDigraph& d) {
  std::ostringstream out;
  out << "pog " << mode_name(d.mode()) << ' ' << d.vertex_count() << ' ' << d.arc_count() << '\n';
  for (ArcId a = 0; a < d.arc_count(); ++a) out << "a " << a << ' ' << d.arc(a).tail << ' ' << d.arc(a).head << '\n';
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    out << "r " << v;
    for (EndId e : d.rotation(v)) out << ' ' << end_arc(e) << (end_is_tail(e) ? '+' : '-');
    out << '\n';
  }
  return out.str();
}

namespace {

struct LineReader {
  int line = 0;
  std::string text;
  std::vector<std::pair<std::string, int>> tokens;  // token, column (1-based)

  [[noreturn]] void fail(int column, const std::string& msg) const {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
  }

  void split() {
    tokens.clear();
    size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i >= text.size()) break;
      size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      tokens.emplace_back(text.substr(i, j - i), static_cast<int>(i) + 1);
      i = j;
    }
  }

  int integer(size_t k, const char* what) const {
    if (k >= tokens.size()) fail(static_cast<int>(text.size()) + 1, std::string("missing ") + what);
    const auto& [tok, col] = tokens[k];
    size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok.empty()) fail(col, std::string("expected ") + what + ", got '" + tok + "'");
    return static_cast<int>(v);
  }
};

}  // namespace

PlaneDigraph parse_pog(const std::string& text) {
  std::istringstream in(text);
  LineReader lr;
  int n = -1, m = -1, next_arc = 0, next_vertex = 0;
  Mode mode = Mode::oriented;
  std::vector<Arc> arcs;
  std::vector<std::vector<EndId>> rot;
  std::vector<int> end_line;
  while (std::getline(in, lr.text)) {
    ++lr.line;
    lr.split();
    if (lr.tokens.empty() || lr.tokens[0].first[0] == '#') continue;
    const std::string& kw = lr.tokens[0].first;
    if (n < 0) {
      if (kw != "pog") lr.fail(lr.tokens[0].second, "expected header 'pog <mode> <n> <m>'");
      if (lr.tokens.size() != 4) lr.fail(1, "header needs mode, vertex count and arc count");
      try {
        mode = parse_mode(lr.tokens[1].first);
      } catch (const Error&) {
        lr.fail(lr.tokens[1].second, "unknown mode '" + lr.tokens[1].first + "'");
      }
      n = lr.integer(2, "vertex count");
      m = lr.integer(3, "arc count");
      if (n < 0 || m < 0) lr.fail(1, "negative count");
      arcs.reserve(m);
      rot.assign(n, {});
      end_line.assign(2 * static_cast<size_t>(m), 0);
      continue;
    }
    if (kw == "a") {
      if (lr.tokens.size() != 4) lr.fail(1, "arc line is 'a <id> <tail> <head>'");
      const int id = lr.integer(1, "arc id");
      if (id != next_arc) lr.fail(lr.tokens[1].second, "arcs must be listed in id order, expected " + std::to_string(next_arc));
      if (id >= m) lr.fail(lr.tokens[1].second, "more arcs than the header announced");
      const int t = lr.integer(2, "tail"), h = lr.integer(3, "head");
      if (t < 0 || t >= n) lr.fail(lr.tokens[2].second, "tail out of range");
      if (h < 0 || h >= n) lr.fail(lr.tokens[3].second, "head out of range");
      arcs.push_back({t, h});
      ++next_arc;
    } else if (kw == "r") {
      if (next_arc != m) lr.fail(1, "rotation lines must follow all arc lines");
      const int v = lr.integer(1, "vertex id");
      if (v != next_vertex) lr.fail(lr.tokens[1].second, "rotations must be listed in vertex order, expected " + std::to_string(next_vertex));
      if (v >= n) lr.fail(lr.tokens[1].second, "more rotations than vertices");
      for (size_t k = 2; k < lr.tokens.size(); ++k) {
        const auto& [tok, col] = lr.tokens[k];
        const char sign = tok.back();
        if (tok.size() < 2 || (sign != '+' && sign != '-')) lr.fail(col, "arc-end must be '<arc>+' or '<arc>-'");
        int a = -1;
        try {
          size_t used = 0;
          a = std::stoi(tok.substr(0, tok.size() - 1), &used);
          if (used != tok.size() - 1) a = -1;
        } catch (const std::exception&) {
          a = -1;
        }
        if (a < 0 || a >= m) lr.fail(col, "unknown arc in '" + tok + "'");
        const EndId e = sign == '+' ? tail_end(a) : head_end(a);
        const VertexId owner = sign == '+' ? arcs[a].tail : arcs[a].head;
        if (owner != v) lr.fail(col, "arc-end " + tok + " belongs to vertex " + std::to_string(owner));
        if (end_line[e]) lr.fail(col, "duplicate arc-end " + tok + " (first on line " + std::to_string(end_line[e]) + ")");
        end_line[e] = lr.line;
        rot[v].push_back(e);
      }
      ++next_vertex;
    } else {
      lr.fail(lr.tokens[0].second, "unknown record '" + kw + "'");
    }
  }
  ++lr.line;
  if (n < 0) lr.fail(1, "missing header");
  if (next_arc != m) lr.fail(1, "expected " + std::to_string(m) + " arcs, found " + std::to_string(next_arc));
  if (next_vertex != n) lr.fail(1, "expected " + std::to_string(n) + " rotations, found " + std::to_string(next_vertex));
  for (EndId e = 0; e < 2 * m; ++e)
    if (!end_line[e]) lr.fail(1, "arc-end " + std::to_string(end_arc(e)) + (end_is_tail(e) ? "+" : "-") + " missing from the rotations");
  return PlaneDigraph::build(n, std::move(arcs), std::move(rot), mode);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::UsageError, "cannot write " + path);
  out << text;
}

PlaneDigraph gen_random(int n, int m, std::uint64_t seed, Mode mode) {
  if (mode == Mode::multi) throw Error(ErrorKind::InfeasibleParameters, "random graphs are oriented or directed");
  if (n < 1) throw Error(ErrorKind::InfeasibleParameters, "need at least one vertex");
  int simple_max = n <= 2 ? n - 1 : 3 * n - 6;
  const int max_arcs = mode == Mode::oriented ? simple_max : (n == 2 ? 2 : 2 * simple_max);
  if (m < n - 1 || m > max_arcs)
    throw Error(ErrorKind::InfeasibleParameters, "m=" + std::to_string(m) + " outside [" + std::to_string(n - 1) + ", " +
                                                     std::to_string(max_arcs) + "] for n=" + std::to_string(n));
  std::mt19937_64 rng(seed);
  // greedy chord insertion can corner itself below the maximum; retry with a fresh tree
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Arc> arcs;
    std::vector<std::vector<EndId>> rot(n);
    for (int v = 1; v < n; ++v) {
      const int p = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
      const ArcId a = v - 1;
      const bool down = rng() & 1;
      arcs.push_back(down ? Arc{p, v} : Arc{v, p});
      const EndId at_p = down ? tail_end(a) : head_end(a);
      const EndId at_v = down ? head_end(a) : tail_end(a);
      const size_t pos = rng() % (rot[p].size() + 1);
      rot[p].insert(rot[p].begin() + static_cast<long>(pos), at_p);
      rot[v].push_back(at_v);
    }
    PlaneDigraph d = PlaneDigraph::build(n, std::move(arcs), std::move(rot), mode);
    while (d.arc_count() < m) {
      auto cand = candidate_arcs(d, mode);
      if (cand.empty()) break;
      d = insert_arcs(d, {cand[rng() % cand.size()]}, mode);
    }
    if (d.arc_count() == m) return d;
  }
  throw Error(ErrorKind::InfeasibleParameters, "no plane graph reached m arcs");
}

std::string export_dot(const PlaneDigraph& d, const Completion& x) {
  std::ostringstream out;
  out << "digraph D {\n";
  out << "  // " << mode_name(d.mode()) << ", " << d.vertex_count() << " vertices, " << d.arc_count() << " arcs, "
      << d.face_count() << " faces\n";
  for (const Face& f : d.faces()) {
    out << "  // face " << f.id << (f.outer ? " (outer)" : "") << ":";
    for (int p = 0; p < f.size(); ++p) out << ' ' << f.vertex(p);
    out << '\n';
  }
  for (VertexId v = 0; v < d.vertex_count(); ++v) out << "  " << v << ";\n";
  for (ArcId a = 0; a < d.arc_count(); ++a) out << "  " << d.arc(a).tail << " -> " << d.arc(a).head << ";\n";
  for (const NewArc& a : x) {
    auto [u, v] = new_arc_vertices(d, a);
    out << "  " << u << " -> " << v << " [color=blue, style=dashed, label=\"f" << a.face << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json completion_to_json(const PlaneDigraph& d, const Completion& x) {
  nlohmann::json arr = nlohmann::json::array();
  for (const NewArc& a : x) {
    const Face& f = d.face(a.face);
    arr.push_back({{"face", a.face},
                   {"tail", {{"vertex", f.vertex(a.tail)}, {"position", a.tail}}},
                   {"head", {{"vertex", f.vertex(a.head)}, {"position", a.head}}}});
  }
  return arr;
}

Completion completion_from_json(const PlaneDigraph& d, const nlohmann::json& j) {
  const nlohmann::json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("witness")) throw Error(ErrorKind::ParseError, "object without a \"witness\" array");
    arr = &j.at("witness");
  }
  if (!arr->is_array()) throw Error(ErrorKind::ParseError, "witness must be an array");
  Completion x;
  for (size_t i = 0; i < arr->size(); ++i) {
    const auto& e = (*arr)[i];
    const std::string where = "witness[" + std::to_string(i) + "]";
    try {
      NewArc a{e.at("face").get<int>(), e.at("tail").at("position").get<int>(), e.at("head").at("position").get<int>()};
      if (a.face < 0 || a.face >= d.face_count()) throw Error(ErrorKind::StaleAngle, where + ": no face " + std::to_string(a.face));
      const Face& f = d.face(a.face);
      for (const char* side : {"tail", "head"}) {
        const int pos = e.at(side).at("position").get<int>();
        if (pos < 0 || pos >= f.size())
          throw Error(ErrorKind::StaleAngle, where + ": position " + std::to_string(pos) + " outside face " + std::to_string(a.face));
        if (e.at(side).contains("vertex") && e.at(side).at("vertex").get<int>() != f.vertex(pos))
          throw Error(ErrorKind::StaleAngle, where + ": vertex does not match face " + std::to_string(a.face) + " position " +
                                                 std::to_string(pos));
      }
      x.push_back(a);
    } catch (const nlohmann::json::exception& ex) {
      throw Error(ErrorKind::ParseError, where + ": " + ex.what());
    }
  }
  return x;
}

nlohmann::json report_to_json(const PlaneDigraph& d, const SolveReport& r, int k) {
  nlohmann::json j;
  j["answer"] = r.yes ? "yes" : "no";
  j["k"] = k;
  j["mode"] = mode_name(r.mode);
  j["method"] = r.method;
  j["optimum"] = r.yes ? nlohmann::json(r.optimum) : nlohmann::json(nullptr);
  j["exact_optimum"] = r.exact_optimum;
  j["witness"] = completion_to_json(d, r.witness);
  j["stats"] = {{"branches", r.stats.branches},
                {"dijoin_calls", r.stats.dijoin_calls},
                {"trials", r.stats.trials},
                {"seed", r.stats.seed}};
  return j;
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* s = std::getenv("ORIENT_AUGMENT_SEED");
  if (!s || !*s) return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 0);
  return (end && *end == '\0') ? v : fallback;
}

}  // namespace oa

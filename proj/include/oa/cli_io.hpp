#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "oa/plane_graph.hpp"
#include "oa/solvers.hpp"

namespace oa {

// ".pog": header "pog <mode> <n> <m>", then "a <id> <tail> <head>" per arc in id order and
// "r <v> <end...>" per vertex listing ends clockwise as "<arc>+" (tail) or "<arc>-" (head).
// Blank lines and lines starting with '#' are skipped. write_pog output is canonical.
std::string write_pog(const PlaneDigraph& d);
// Throws ParseError ("line L, column C: ...") or forwards ModeViolation.
PlaneDigraph parse_pog(const std::string& text);

std::string read_text_file(const std::string& path);  // throws ParseError when unreadable
void write_text_file(const std::string& path, const std::string& text);

// Random plane tree on n vertices, then random legal face chords until m arcs.
// Oriented mode needs n-1 <= m <= max(n-1, 3n-6); directed mode also admits digon chords.
// Throws InfeasibleParameters.
PlaneDigraph gen_random(int n, int m, std::uint64_t seed, Mode mode = Mode::oriented);

// Deterministic DOT; completion arcs drawn dashed and blue, faces listed as comments.
std::string export_dot(const PlaneDigraph& d, const Completion& x = {});

// Arcs as {face, tail:{vertex,position}, head:{vertex,position}}.
nlohmann::json completion_to_json(const PlaneDigraph& d, const Completion& x);
// Accepts an array or an object with a "witness" array. Throws ParseError on shape errors and
// StaleAngle when a vertex does not sit at the given position of the face.
Completion completion_from_json(const PlaneDigraph& d, const nlohmann::json& j);

nlohmann::json report_to_json(const PlaneDigraph& d, const SolveReport& r, int k);

// ORIENT_AUGMENT_SEED when set and numeric, otherwise `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback = kDefaultSeed);

}  // namespace oa

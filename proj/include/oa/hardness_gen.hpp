#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "oa/plane_graph.hpp"

namespace oa {

struct Literal {
  int var = 0;
  bool positive = true;
  bool operator==(const Literal&) const = default;
};

// A 3-CNF with a fixed plane embedding of its incidence graph. Incidence 3*c+s is slot s of
// clause c; slots are listed clockwise around the clause and rotv[x] lists the incidences of x
// clockwise around x. A variable may occur several times in one clause.
struct PlanarCnf {
  int variables = 0;
  std::vector<std::array<Literal, 3>> clauses;
  std::vector<std::vector<int>> rotv;

  int occurrences(int x) const { return static_cast<int>(rotv[x].size()); }
};

// Incidence graph (variables first, then clauses) with the given rotations, mode=multi.
PlaneDigraph incidence_graph(const PlanarCnf& f);

// Throws InvalidArity or EmbeddingConflict (rotations inconsistent, not plane, or disconnected).
void validate_cnf(const PlanarCnf& f);

bool satisfies(const PlanarCnf& f, const std::vector<bool>& assignment);
std::optional<std::vector<bool>> find_assignment(const PlanarCnf& f);

// All plane embeddings of the clause list, one per orientation-preserving isomorphism class.
// Limited to formulas with at most 8 incidences.
std::vector<PlanarCnf> plane_embeddings(int variables, const std::vector<std::array<Literal, 3>>& clauses);

// Extended DIMACS: "p cnf V C", clause lines ending in 0, then "rotv <var> <clause...>" and
// "rotc <clause> <var...>" (1-based). The k-th mention of clause c in rotv x is the k-th slot of
// c holding x. Without rotation lines the formula must be small enough for plane_embeddings.
PlanarCnf parse_dimacs(const std::string& text);
std::string write_dimacs(const PlanarCnf& f);

struct LiteralPorts {
  VertexId b, bl, l, tl, t, tr, r, br;  // octagon, clockwise from the bottom sink
  VertexId bp, lp, tp, rp;              // twins of b, l, t, r
};

struct ClausePorts {
  // slot s: v is the central triangle vertex, u and w its outer out-neighbours with u on the
  // side of slot s-1; m_in[s] is the common out-neighbour of v[s] and v[s+1] and m_out[s] the
  // outer vertex of the directed 4-cycle between w[s] and u[s+1].
  std::array<VertexId, 3> v, u, w, m_in, m_out;
};

struct VariablePorts {
  std::vector<int> literals;  // indices into GadgetInstance::literals, clockwise
  VertexId bottom = 0;        // the shared twin b'
};

struct GadgetInstance {
  PlaneDigraph graph;
  std::vector<LiteralPorts> literals;
  std::vector<VariablePorts> variables;
  std::vector<ClausePorts> clauses;
};

GadgetInstance literal_gadget();
GadgetInstance variable_gadget(int occurrences);  // throws InvalidArity below 2
GadgetInstance clause_gadget();

// The two named completions inside the two 5-faces of one literal.
Completion literal_completion(const PlaneDigraph& d, const LiteralPorts& p, bool positive);

// Literal completions around one variable plus the arcs closing the faces next to b' and r'.
Completion variable_completion(const PlaneDigraph& d, const GadgetInstance& g, int variable, bool positive);

// Completions inside the two 5-faces of a literal that hit its sinks b, l, r and hit `target`.
std::vector<Completion> literal_completions_hitting(const GadgetInstance& lit, VertexId target);

// Strong-component partitions (component id per vertex, canonical) of the maximal valid
// completions of a variable gadget restricted to its literal 5-faces: every sink b, l, r and
// every bottom source br must be hit.
std::vector<std::vector<int>> variable_maximal_partitions(const GadgetInstance& var);

struct Reduction {
  GadgetInstance gadget;
  PlanarCnf padded;
  int padding_clauses = 0;
  std::vector<int> literal_of_incidence;  // incidence of `padded` -> literal index
};

// |V(reduce(f))| <= kLinearityConstant * (occurrences + clauses) of the padded formula.
inline constexpr int kLinearityConstant = 10;

// Throws EmbeddingConflict (also for a clause holding a variable in both polarities) or InvalidArity.
Reduction reduce(const PlanarCnf& f);

// Throws AssignmentDoesNotSatisfy.
Completion assignment_to_augmentation(const Reduction& r, const std::vector<bool>& assignment);
Completion assignment_to_augmentation(const PlanarCnf& f, const std::vector<bool>& assignment);

}  // namespace oa

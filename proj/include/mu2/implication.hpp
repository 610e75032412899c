#pragma once

#include <map>
#include <vector>

#include "mu2/formula.hpp"
#include "mu2/graphs.hpp"

namespace mu2 {

// Implication digraph of a 2-CNF without the empty clause: vertices are the
// literals of F, a binary clause {x,y} contributes the arcs (-x,y) and
// (-y,x), a unit clause {x} contributes (-x,x).
Digraph build_idg(const ClauseSet& f);

// Underlying graph of the implication digraph.
Graph build_ig(const ClauseSet& f);

// Implication multigraph: dgtomg of the implication digraph of F minus the
// empty clause; if the empty clause is present, an extra vertex carrying a
// loop of multiplicity 1 is added.
Multigraph build_img(const ClauseSet& f);

// Vertex id used for the empty-clause vertex in build_img (never a literal).
inline constexpr int bottom_vertex = 0;

// 2-SAT via strongly connected components: unsatisfiable iff the empty
// clause is present or some component contains a literal and its complement.
bool is_satisfiable(const ClauseSet& f);

// Minimal unsatisfiability: unsatisfiable, and satisfiable after removing
// any single clause.
bool is_mu(const ClauseSet& f);

// DP-reduction (variable elimination): replaces all clauses containing v by
// their non-tautological resolvents on v.
ClauseSet dp_reduce(const ClauseSet& f, int v);

struct ReductionStep {
  int var = 0;
  ClauseSet removed;  // the clauses on var that were replaced
  ClauseSet added;    // their resolvents
};

struct Reduction {
  ClauseSet start;
  std::vector<ReductionStep> steps;
  ClauseSet result;
};

// Eliminates degree-2 variables (one positive and one negative occurrence)
// until none remain, smallest variable first.  The result is independent of
// the elimination order; for deficiency 1 it is {{}} (the empty clause).
ClauseSet one_singular_fixpoint(const ClauseSet& f);

// Same elimination, but a unit clause that arises as the resolvent of two
// binary clauses is barred from later steps.  Mirrors multigraph smoothing,
// where such a merge doubles the edge between the unit literal and its
// complement instead of producing a unit arc.
ClauseSet one_singular_reduct_no_contraction(const ClauseSet& f);

// Full singular DP-reduction to a nonsingular clause-set: first all degree-2
// variables, then degree-3 variables, smallest first, recording every step.
// For deficiency k >= 2 the result is isomorphic to bpt(k); for deficiency 1
// it is {{}}.
Reduction singular_dp_to_nonsingular(const ClauseSet& f);

// A skew-symmetry is a fixed-point-free involution s on the vertices with
// (a,b) in E implying (s(b),s(a)) in E; literal complementation is the
// natural one on implication digraphs.
using SkewSymmetry = std::map<int, int>;

SkewSymmetry natural_skew(const ClauseSet& f);
bool is_skew_symmetry(const Digraph& g, const SkewSymmetry& s);
void check_skew_symmetry(const Digraph& g, const SkewSymmetry& s);

// No arc from any vertex to its image; such a pair would decode to a unit
// clause.
bool is_unit_free(const Digraph& g, const SkewSymmetry& s);

// Reads the unique clause-set with implication digraph (g,s) after
// relabelling vertices as literals: s-orbits become variables 1..n in order
// of their larger vertex id, which takes the positive polarity.  On an
// implication digraph with the natural skew this reproduces the formula.
ClauseSet clause_set_of(const Digraph& g, const SkewSymmetry& s);

}  // namespace mu2

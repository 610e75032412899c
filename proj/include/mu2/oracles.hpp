#pragma once

#include <map>
#include <vector>

#include "mu2/formula.hpp"
#include "mu2/graphs.hpp"

// Small self-contained checkers used to validate the main algorithms in
// tests.  They share no code with the library routes they cross-check.
namespace mu2::oracle {

// Truth-table satisfiability; at most 24 variables.
bool brute_sat(const ClauseSet& f);

// Satisfiability by variable elimination.
bool dp_sat(const ClauseSet& f);

// Minimal unsatisfiability by definition: unsatisfiable, and every
// one-clause-smaller subset satisfiable.
bool brute_mu(const ClauseSet& f);

// All literal maps carrying f exactly onto g; at most 7 variables.
std::vector<std::map<int, int>> clause_isomorphisms(const ClauseSet& f,
                                                    const ClauseSet& g);

// All vertex bijections carrying the arcs of g exactly onto those of h;
// at most 16 vertices.
std::vector<std::map<int, int>> digraph_isomorphisms(const Digraph& g,
                                                     const Digraph& h);

// All fixed-point-free involutions s of the vertices with (v,w) an arc
// exactly when (s(w),s(v)) is; at most 14 vertices.
std::vector<std::map<int, int>> skew_symmetries(const Digraph& g);

}  // namespace mu2::oracle

#pragma once

#include <vector>

#include "mu2/formula.hpp"

namespace mu2 {

// The nonsingular formula of deficiency k >= 2 (unique up to renaming): all
// four sign patterns around a cycle of k variables.
ClauseSet bpt(int k);

// Replaces the binary clause {x,y} by {v,x},{-v,y} for a fresh variable v.
// The literal order picks which replacement clause carries +v.
ClauseSet extend_1singular(const ClauseSet& f, int x, int y, int v);

// Replaces the two clauses {x,a},{x,b} holding literal x (which must occur
// exactly twice, as must -x) by {y,x},{-y,a},{-y,b}; y is a literal of a
// fresh variable.
ClauseSet extend_2singular(const ClauseSet& f, int x, int y);

// All isomorphism classes with deficiency k >= 2 and exactly n variables,
// as sorted canonical formulas.  Default range caps guard against runaway
// inputs; force lifts them.
std::vector<ClauseSet> enumerate_2mu(int k, int n, bool force = false);
long count_2mu(int k, int n, bool force = false);

// Deficiency 1: the standard family formulas with exactly n variables
// (n == 0 gives the empty-clause formula), and their closed count.
std::vector<ClauseSet> enumerate_d1(int n);
long count_d1(int n);

// Deficiency-1 formulas grown from the seed shapes by edge subdivision,
// one canonical representative per isomorphism class reached.
std::vector<ClauseSet> generate_d1_rules(int n);

// One extension step.  two_singular: x is the split literal, y the fresh
// literal.  Otherwise x, y are the replaced clause's literals (x takes +v)
// and v the fresh variable.
struct GenerationStep {
  bool two_singular = false;
  int x = 0;
  int y = 0;
  int v = 0;
};

// Extension history from the nonsingular reduct; all two_singular steps
// precede the rest, and replay reproduces the formula exactly.
struct GenerationTrace {
  int k = 0;
  ClauseSet base;
  std::vector<GenerationStep> steps;
};

GenerationTrace trace_of(const ClauseSet& f);
ClauseSet replay(const GenerationTrace& t);

}  // namespace mu2

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mu2/formula.hpp"
#include "mu2/graphs.hpp"
#include "mu2/implication.hpp"

namespace mu2 {

enum class D1Kind { bottom, u2, u1, u0 };

// Family descriptor for deficiency-1 formulas.  u1 carries (n, i); u0
// carries (n, x, y) with x == y for the symmetric form.  The witness is a
// literal map renaming the classified formula onto build_ufamily of this
// descriptor.
struct D1Class {
  D1Kind kind = D1Kind::bottom;
  int n = 0;
  int i = 0;
  int x = 0;
  int y = 0;
  std::map<int, int> witness;
};

// Parameter equality; witnesses are ignored.
bool same_class(const D1Class& a, const D1Class& b);

// Standard formulas over variables 1..n: the chain {-j, j+1} for j < n plus
// the family closers.  Degenerate parameters are accepted and collapse: u1
// with i = n gives u2, u0 with x = 1 gives u1, u0 with y = n drops to a
// unit, matching the family identities.
ClauseSet build_ufamily(const D1Class& c);

// Dispatches on the unit-clause count and the implication-digraph degree
// signature, then reads the parameters off the junction-to-junction runs.
D1Class classify_d1(const ClauseSet& f);

bool are_isomorphic(const ClauseSet& f, const ClauseSet& g);

/// Canonical representative of the isomorphism class: the standard family
// formula for deficiency 1, the formula read back off the standardized
// double cycle otherwise.
ClauseSet canon(const ClauseSet& f);

// At most one exists on a weak double cycle.
std::optional<SkewSymmetry> unique_unit_free_skew(const Digraph& g);

struct AutomorphismGroup {
  std::vector<std::map<int, int>> elements;  // literal maps, identity included
  long order() const { return static_cast<long>(elements.size()); }
};

AutomorphismGroup automorphism_group(const ClauseSet& f);

// Rotation-and-reflection class of the overlap size pattern at half period
// (the pattern repeats antipodally); defined for deficiency >= 2.
std::string homeo_fingerprint(const ClauseSet& f);

struct Classification {
  int deficiency = 0;
  std::optional<D1Class> d1;            // deficiency == 1
  std::optional<std::string> bracelet;  // deficiency >= 2
  long aut_order = 0;
  ClauseSet canonical;
};

Classification classify(const ClauseSet& f);

}  // namespace mu2

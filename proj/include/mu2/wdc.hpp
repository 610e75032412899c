#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mu2/graphs.hpp"

namespace mu2 {

// One small cycle of a weak double cycle, in ring order.  The cycle's full
// vertex sequence is: previous overlap, section_a, overlap_next, section_b.
// overlap_next is the directed path shared with the next small cycle;
// section_a runs from the previous overlap to overlap_next, section_b back
// (both store interior vertices only and may be empty).
struct WdcCycle {
  std::vector<int> overlap_next;
  std::vector<int> section_a;
  std::vector<int> section_b;
};

// An m-weak-double-cycle: a ring of m small directed cycles, neighbors
// overlapping in a directed path.  Ring start and direction are arbitrary.
struct WdcStructure {
  int m = 0;
  std::vector<WdcCycle> cycles;

  const std::vector<int>& overlap(int i) const {
    return cycles[((i % m) + m) % m].overlap_next;
  }
  std::vector<int> cycle_vertices(int i) const;  // prev overlap + a + overlap + b
};

// Replaces x by fresh vertices u,v and the arc (u,v); arcs into x enter u,
// arcs out of x leave v.
Digraph split_vertex(const Digraph& g, int x, int u, int v);

// Replaces the arc (x,y) by (x,v),(v,y) for a fresh vertex v.
Digraph split_arc(const Digraph& g, Arc a, int v);

// Structure extraction; empty when g is not a weak double cycle.  Small
// cycles are found among all cycles by their nonlinear-vertex signature (at
// most 4 nonlinear, at most 2 of degree 4); when that filter is ambiguous,
// every choice of the two big cycles is tried against full validation.
std::optional<WdcStructure> recognize_wdc(const Digraph& g);

// Vertices are the cycles of g (indexed in enumeration order); edge
// multiplicities count shared vertices, loops carry the cycle's size.
Multigraph cycle_multigraph(const Digraph& g);

// All digraph isomorphisms g -> h, found by running the 2m dihedral ring
// maps and extending them along overlaps and sections; every candidate is
// verified arc-for-arc before being returned.
std::vector<std::map<int, int>> wdc_isomorphisms(const Digraph& g,
                                                 const Digraph& h);

// Reconstructs a digraph d with dgtomg(d) = m, unique up to isomorphism,
// by direction propagation; doubled edges become antiparallel pairs.
Digraph orient_multigraph(const Multigraph& m);

// Reconstructs a weak double cycle from its underlying graph: decides which
// threads to double back into antiparallel pairs, then orients.
Digraph graph_to_wdc(const Graph& h);

// Overlap sizes of a nonlinear structure as bits: 1-vertex overlap -> '0',
// 2-vertex overlap -> '1'.
std::string bracelet_of(const WdcStructure& s);

// Lexicographic minimum over all rotations and reflections.
std::string bracelet_canon(const std::string& bits);

// All equivalence classes of length-m binary strings under rotation and
// reflection, as sorted canonical representatives.
std::vector<std::string> enumerate_bracelets(int m);

// Per-cycle lengths (overlap, section_a, section_b); together with the ring
// they determine a weak double cycle up to isomorphism.
using WdcShape = std::vector<std::array<int, 3>>;

WdcShape shape_of(const WdcStructure& s);

// Standardized digraph with vertices 1..N realizing the shape.
Digraph build_wdc(const WdcShape& shape);

}  // namespace mu2

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mu2/error.hpp"

namespace mu2 {

using Arc = std::pair<int, int>;
using Edge = std::pair<int, int>;  // stored with first <= second

// Finite digraph without loops or parallel arcs; antiparallel pairs allowed.
// Vertex ids are arbitrary ints.
class Digraph {
public:
  Digraph() = default;
  Digraph(const std::vector<int>& vertices, const std::vector<Arc>& arcs);

  const std::vector<int>& vertices() const { return verts_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool has_vertex(int v) const;
  bool has_arc(int a, int b) const;
  const std::vector<int>& out(int v) const;
  const std::vector<int>& in(int v) const;
  int out_degree(int v) const { return static_cast<int>(out(v).size()); }
  int in_degree(int v) const { return static_cast<int>(in(v).size()); }
  int degree(int v) const { return in_degree(v) + out_degree(v); }
  Digraph transposed() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.verts_ == b.verts_ && a.arcs_ == b.arcs_;
  }

private:
  std::vector<int> verts_;  // sorted
  std::vector<Arc> arcs_;   // sorted
  std::map<int, std::vector<int>> out_, in_;
};

// Finite graph without loops or parallel edges.
class Graph {
public:
  Graph() = default;
  Graph(const std::vector<int>& vertices, const std::vector<Edge>& edges);

  const std::vector<int>& vertices() const { return verts_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_vertex(int v) const;
  bool has_edge(int a, int b) const;
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.verts_ == b.verts_ && a.edges_ == b.edges_;
  }

private:
  std::vector<int> verts_;
  std::vector<Edge> edges_;  // normalized first <= second, sorted
  std::map<int, std::vector<int>> adj_;
};

// Multigraph: multiplicity function on 1- and 2-element vertex subsets.
// A key {v,v} is a loop.  Degree sums multiplicities over all neighbors,
// counting a loop's multiplicity once.
class Multigraph {
public:
  Multigraph() = default;
  Multigraph(const std::vector<int>& vertices,
             const std::map<Edge, int>& multiplicity);

  const std::vector<int>& vertices() const { return verts_; }
  const std::map<Edge, int>& multiplicity() const { return mult_; }
  bool has_vertex(int v) const;
  int mult(int a, int b) const;  // 0 if absent
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;  // sorted, may include v itself
  bool has_loop(int v) const { return mult(v, v) > 0; }
  int edge_count() const;  // total multiplicity

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.verts_ == b.verts_ && a.mult_ == b.mult_;
  }

private:
  std::vector<int> verts_;
  std::map<Edge, int> mult_;  // keys normalized first <= second, values >= 1
};

// Conversions between the three kinds.
Digraph gtodg(const Graph& g);       // each edge becomes an antiparallel pair
Graph dgtog(const Digraph& g);       // contracts antiparallel pairs
Multigraph gtomg(const Graph& g);    // characteristic multiplicity
Graph mgtog(const Multigraph& m);    // forgets multiplicities, drops loops
Multigraph dgtomg(const Digraph& g); // one multiplicity unit per arc

// Degree-2 vertices (for digraphs: in-degree 1 and out-degree 1).
std::vector<int> linear_vertices(const Digraph& g);
std::vector<int> linear_vertices(const Multigraph& m);

// Repeatedly removes a linear vertex v without a loop at v, joining its two
// neighbors.  When several vertices qualify, the earliest in `order` is
// taken; the default order is numeric.  An isolated cycle collapses to a
// loop at its last vertex in the order.
Multigraph smooth(const Multigraph& m);
Multigraph smooth(const Multigraph& m, const std::vector<int>& order);

// Multigraph isomorphism by backtracking; guarded by a vertex-count cap.
std::optional<std::map<int, int>> multigraph_isomorphism(const Multigraph& a,
                                                         const Multigraph& b,
                                                         int cap = 64);

bool homeomorphic(const Multigraph& a, const Multigraph& b);

struct Cycle {
  std::vector<int> verts;  // in arc order, rotated so the smallest id is first
  std::size_t length() const { return verts.size(); }
  bool contains(int v) const;
};

// Overridable guard for cycle enumeration (the CLI installs MU2_CYCLE_CAP
// here).  cycle_cap_for returns the override, or 10*|V| when unset.
void set_cycle_cap_override(long cap);  // 0 clears
long cycle_cap_for(const Digraph& g);

// All distinct directed cycles (length >= 2).  Requires every vertex to have
// degree <= 4.  Throws a cap error when more than `cap` cycles exist (cap 0
// means cycle_cap_for(g)).
std::vector<Cycle> enumerate_cycles(const Digraph& g, long cap = 0);

bool strongly_connected(const Digraph& g);
bool connected(const Multigraph& m);
bool connected(const Graph& g);

// Strongly connected components; vertices with equal values share a component.
std::map<int, int> strong_components(const Digraph& g);

// DOT renderings; multigraph multiplicities appear as parallel edges.
std::string to_dot(const Digraph& g, const std::string& name = "g");
std::string to_dot(const Graph& g, const std::string& name = "g");
std::string to_dot(const Multigraph& m, const std::string& name = "g");

}  // namespace mu2

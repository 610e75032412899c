#include "mu2/implication.hpp"

#include <algorithm>
#include <set>

namespace mu2 {

namespace {

void check_2cnf(const ClauseSet& f) {
  for (const Clause& c : f.clauses())
    if (c.size() > 2)
      fail(ErrorKind::invalid, "clause of length > 2");
}

void check_no_bottom(const ClauseSet& f) {
  if (f.has_empty_clause())
    fail(ErrorKind::invalid, "empty clause present");
}

}  // namespace

Digraph build_idg(const ClauseSet& f) {
  check_2cnf(f);
  check_no_bottom(f);
  std::vector<Arc> arcs;
  for (const Clause& c : f.clauses()) {
    if (c.unit()) {
      int x = c.lits()[0];
      arcs.push_back({-x, x});
    } else {
      int x = c.lits()[0], y = c.lits()[1];
      arcs.push_back({-x, y});
      arcs.push_back({-y, x});
    }
  }
  return Digraph(f.literals(), arcs);
}

Graph build_ig(const ClauseSet& f) { return dgtog(build_idg(f)); }

Multigraph build_img(const ClauseSet& f) {
  check_2cnf(f);
  ClauseSet core = f.without(Clause{});
  Multigraph m = dgtomg(build_idg(core));
  if (!f.has_empty_clause()) return m;
  std::vector<int> verts = m.vertices();
  verts.push_back(bottom_vertex);
  std::map<Edge, int> mult = m.multiplicity();
  mult[{bottom_vertex, bottom_vertex}] = 1;
  return Multigraph(verts, mult);
}

bool is_satisfiable(const ClauseSet& f) {
  check_2cnf(f);
  if (f.has_empty_clause()) return false;
  if (f.empty()) return true;
  std::map<int, int> comp = strong_components(build_idg(f));
  for (int v : f.variables())
    if (comp.at(v) == comp.at(-v)) return false;
  return true;
}

bool is_mu(const ClauseSet& f) {
  if (is_satisfiable(f)) return false;
  for (const Clause& c : f.clauses())
    if (!is_satisfiable(f.without(c))) return false;
  return true;
}

ClauseSet dp_reduce(const ClauseSet& f, int v) {
  v = var_of(v);
  std::vector<Clause> pos, neg, rest;
  for (const Clause& c : f.clauses()) {
    if (c.contains(v)) pos.push_back(c);
    else if (c.contains(-v)) neg.push_back(c);
    else rest.push_back(c);
  }
  if (pos.empty() && neg.empty())
    fail(ErrorKind::invalid, "variable " + std::to_string(v) + " not in clause-set");

  for (const Clause& c : pos) {
    for (const Clause& d : neg) {
      std::vector<int> lits;
      for (int x : c.lits())
        if (x != v) lits.push_back(x);
      bool tautological = false;
      for (int x : d.lits()) {
        if (x == -v) continue;
        if (std::find(lits.begin(), lits.end(), -x) != lits.end())
          tautological = true;
        else
          lits.push_back(x);
      }
      if (!tautological) rest.push_back(Clause(lits));
    }
  }
  return ClauseSet(rest);
}

namespace {

// Smallest variable with one positive and one negative occurrence that is
// not blocked; 0 if none.
int pick_1singular(const ClauseSet& f, const std::set<int>& blocked) {
  DegreeReport r = stats(f);
  for (int v : f.variables())
    if (r.ldeg.at(v) == 1 && r.ldeg.at(-v) == 1 && !blocked.count(v)) return v;
  return 0;
}

}  // namespace

ClauseSet one_singular_fixpoint(const ClauseSet& f) {
  if (!is_mu(f)) fail(ErrorKind::not_mu, "input is not minimally unsatisfiable");
  ClauseSet g = f;
  for (int v; (v = pick_1singular(g, {})) != 0;) g = dp_reduce(g, v);
  return g;
}

ClauseSet one_singular_reduct_no_contraction(const ClauseSet& f) {
  if (!is_mu(f)) fail(ErrorKind::not_mu, "input is not minimally unsatisfiable");
  ClauseSet g = f;
  std::set<int> blocked;
  for (int v; (v = pick_1singular(g, blocked)) != 0;) {
    ClauseSet next = dp_reduce(g, v);
    // A unit resolvent of two binary parents corresponds to a doubled edge in
    // the multigraph, not a unit arc; bar its variable from later steps.
    for (const Clause& c : next.clauses()) {
      if (!c.unit() || g.contains(c)) continue;
      if (g.contains(Clause{v, c.lits()[0]}) && g.contains(Clause{-v, c.lits()[0]}))
        blocked.insert(var_of(c.lits()[0]));
    }
    g = next;
  }
  return g;
}

Reduction singular_dp_to_nonsingular(const ClauseSet& f) {
  if (!is_mu(f)) fail(ErrorKind::not_mu, "input is not minimally unsatisfiable");
  Reduction red;
  red.start = f;
  ClauseSet g = f;

  auto record = [&](int v) {
    ReductionStep step;
    step.var = v;
    std::vector<Clause> removed;
    for (const Clause& c : g.clauses())
      if (c.contains(v) || c.contains(-v)) removed.push_back(c);
    step.removed = ClauseSet(removed);
    ClauseSet next = dp_reduce(g, v);
    std::vector<Clause> added;
    for (const Clause& c : next.clauses())
      if (!g.contains(c)) added.push_back(c);
    step.added = ClauseSet(added);
    red.steps.push_back(step);
    g = next;
  };

  for (int v; (v = pick_1singular(g, {})) != 0;) record(v);

  // Degree-3 variables next; degree-2 variables must not reappear.
  for (;;) {
    DegreeReport r = stats(g);
    int pick = 0;
    for (int v : g.variables()) {
      int d = r.vdeg.at(v);
      if (d < 3) fail(ErrorKind::logic, "degree-2 variable reappeared");
      if (d == 3 && pick == 0) pick = v;
    }
    if (pick == 0) break;
    record(pick);
  }
  red.result = g;
  return red;
}

SkewSymmetry natural_skew(const ClauseSet& f) {
  check_no_bottom(f);
  SkewSymmetry s;
  for (int x : f.literals()) s[x] = -x;
  return s;
}

namespace {

const char* skew_violation(const Digraph& g, const SkewSymmetry& s) {
  if (s.size() != g.vertices().size()) return "map does not cover the vertex set";
  for (int v : g.vertices()) {
    auto it = s.find(v);
    if (it == s.end()) return "map does not cover the vertex set";
    int w = it->second;
    if (!g.has_vertex(w)) return "image outside the vertex set";
    if (w == v) return "fixed point";
    auto back = s.find(w);
    if (back == s.end() || back->second != v) return "not an involution";
  }
  for (const Arc& a : g.arcs())
    if (!g.has_arc(s.at(a.second), s.at(a.first))) return "arc image missing";
  return nullptr;
}

}  // namespace

bool is_skew_symmetry(const Digraph& g, const SkewSymmetry& s) {
  return skew_violation(g, s) == nullptr;
}

void check_skew_symmetry(const Digraph& g, const SkewSymmetry& s) {
  if (const char* why = skew_violation(g, s))
    fail(ErrorKind::invalid, std::string("not a skew-symmetry: ") + why);
}

bool is_unit_free(const Digraph& g, const SkewSymmetry& s) {
  check_skew_symmetry(g, s);
  for (int v : g.vertices())
    if (g.has_arc(v, s.at(v))) return false;
  return true;
}

ClauseSet clause_set_of(const Digraph& g, const SkewSymmetry& s) {
  check_skew_symmetry(g, s);
  for (int v : g.vertices())
    if (g.degree(v) == 0)
      fail(ErrorKind::invalid, "isolated vertex cannot carry a literal");

  std::vector<std::pair<int, int>> orbits;  // (larger, smaller) vertex id
  std::map<int, int> lit;
  for (int v : g.vertices()) {
    if (lit.count(v)) continue;
    int w = s.at(v);
    orbits.push_back({std::max(v, w), std::min(v, w)});
    lit[v] = lit[w] = 0;
  }
  std::sort(orbits.begin(), orbits.end());
  int next = 0;
  for (const auto& [hi, lo] : orbits) {
    ++next;
    lit[hi] = next;
    lit[lo] = -next;
  }

  std::vector<Clause> clauses;
  for (const Arc& a : g.arcs()) {
    int x = -lit.at(a.first), y = lit.at(a.second);
    clauses.push_back(x == y ? Clause{y} : Clause{x, y});
  }
  return ClauseSet(clauses);
}

}  // namespace mu2

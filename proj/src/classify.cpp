#include "mu2/classify.hpp"

#include <algorithm>
#include <set>

#include "mu2/error.hpp"
#include "mu2/wdc.hpp"

namespace mu2 {

bool same_class(const D1Class& a, const D1Class& b) {
  return a.kind == b.kind && a.n == b.n && a.i == b.i && a.x == b.x &&
         a.y == b.y;
}

ClauseSet build_ufamily(const D1Class& c) {
  if (c.kind == D1Kind::bottom) {
    if (c.n != 0) fail(ErrorKind::invalid, "bottom has no variables");
    return ClauseSet{Clause{}};
  }
  if (c.n < 1) fail(ErrorKind::invalid, "family needs at least one variable");
  std::vector<Clause> clauses;
  for (int j = 1; j < c.n; ++j) clauses.push_back(Clause{-j, j + 1});
  switch (c.kind) {
    case D1Kind::u2:
      clauses.push_back(Clause{1});
      clauses.push_back(Clause{-c.n});
      break;
    case D1Kind::u1:
      if (c.i < 1 || c.i > c.n)
        fail(ErrorKind::invalid, "u1 parameter out of range");
      clauses.push_back(Clause{1});
      clauses.push_back(Clause{-c.n, -c.i});
      break;
    case D1Kind::u0:
      if (c.x < 1 || c.x > c.y || c.y > c.n)
        fail(ErrorKind::invalid, "u0 parameters out of range");
      clauses.push_back(Clause{1, c.x});
      clauses.push_back(Clause{-c.n, -c.y});
      break;
    default:
      fail(ErrorKind::invalid, "unknown family");
  }
  return ClauseSet(clauses);
}

namespace {

// Follows sole out-arcs from `start` through degree-2 vertices; returns
// [start, ..., first vertex of degree != 2].
std::vector<int> run_from(const Digraph& g, int start) {
  std::vector<int> seq{start};
  int cur = start;
  std::size_t guard = g.vertices().size() + 2;
  while (g.degree(cur) == 2 && --guard) {
    cur = g.out(cur)[0];
    seq.push_back(cur);
  }
  return seq;
}

// Partial variable assignment onto target literals; false on conflict.
bool assign(std::map<int, int>& var_map, int lit, int target) {
  if (lit < 0) {
    lit = -lit;
    target = -target;
  }
  auto [it, fresh] = var_map.insert({lit, target});
  return fresh || it->second == target;
}

bool assign_seq(std::map<int, int>& var_map, const std::vector<int>& lits,
                const std::vector<int>& targets) {
  if (lits.size() != targets.size()) return false;
  for (std::size_t t = 0; t < lits.size(); ++t)
    if (!assign(var_map, lits[t], targets[t])) return false;
  return true;
}

std::vector<int> interior(const std::vector<int>& run) {
  return std::vector<int>(run.begin(), run.end() - 1);
}

struct D1Witnesses {
  D1Class cls;
  std::vector<std::map<int, int>> maps;  // all literal-map witnesses
};

void try_candidate(const ClauseSet& f, const ClauseSet& target,
                   const std::map<int, int>& var_map,
                   std::set<std::map<int, int>>& found) {
  if (static_cast<int>(var_map.size()) != f.n()) return;
  std::map<int, int> lm;
  for (const auto& [v, t] : var_map) {
    lm[v] = t;
    lm[-v] = -t;
  }
  if (rename(f, lm) == target) found.insert(lm);
}

std::vector<int> range_up(int from, int to) {  // from, from+1, ..., to
  std::vector<int> out;
  for (int v = from; v <= to; ++v) out.push_back(v);
  return out;
}

std::vector<int> range_down_neg(int from, int to) {  // -from, ..., -to
  std::vector<int> out;
  for (int v = from; v >= to; --v) out.push_back(-v);
  return out;
}

D1Witnesses witnesses_u2(const ClauseSet& f, const Digraph& g) {
  int n = f.n();
  D1Class cls{D1Kind::u2, n, 0, 0, 0, {}};
  ClauseSet target = build_ufamily(cls);
  std::set<std::map<int, int>> found;
  for (const Clause& c : f.clauses()) {
    if (!c.unit()) continue;
    int u = c.lits()[0];
    std::vector<int> seq{u};
    int cur = u;
    bool ok = true;
    for (int t = 1; t < 2 * n; ++t) {
      if (g.out_degree(cur) != 1) {
        ok = false;
        break;
      }
      cur = g.out(cur)[0];
      seq.push_back(cur);
    }
    if (!ok || g.out_degree(cur) != 1 || g.out(cur)[0] != u) continue;
    std::map<int, int> vm;
    ok = true;
    for (int t = 0; t < 2 * n && ok; ++t)
      ok = assign(vm, seq[t], t < n ? t + 1 : -(2 * n - t));
    if (ok) try_candidate(f, target, vm, found);
  }
  return {cls, {found.begin(), found.end()}};
}

D1Witnesses witnesses_u1(const ClauseSet& f, const Digraph& g) {
  int n = f.n();
  int p = 0, q = 0;  // out-degree-2 and in-degree-2 junctions
  for (int v : g.vertices()) {
    if (g.degree(v) != 3) continue;
    if (g.out_degree(v) == 2) p = v;
    if (g.in_degree(v) == 2) q = v;
  }
  if (!p || !q || p == q)
    fail(ErrorKind::logic, "junction layout outside the classification");
  std::vector<int> shared{q};
  {
    std::vector<int> rest = run_from(g, g.out(q)[0]);
    shared.insert(shared.end(), rest.begin(), rest.end());
  }
  if (shared.back() != p || shared.size() % 2 != 0)
    fail(ErrorKind::logic, "shared path outside the classification");
  int i = static_cast<int>(shared.size()) / 2;
  D1Class cls{D1Kind::u1, n, i, 0, 0, {}};
  ClauseSet target = build_ufamily(cls);
  std::vector<int> shared_targets;
  for (int t = 0; t < 2 * i; ++t)
    shared_targets.push_back(t < i ? -(i - t) : t - i + 1);
  std::vector<std::vector<int>> branches;
  for (int o : g.out(p)) branches.push_back(run_from(g, o));
  std::set<std::map<int, int>> found;
  for (int pick : {0, 1}) {
    const std::vector<int>& ba = branches[pick];
    const std::vector<int>& bb = branches[1 - pick];
    if (ba.back() != q || bb.back() != q) continue;
    if (static_cast<int>(ba.size()) != n - i + 1) continue;
    std::map<int, int> vm;
    if (!assign_seq(vm, shared, shared_targets)) continue;
    if (!assign_seq(vm, interior(ba), range_up(i + 1, n))) continue;
    if (!assign_seq(vm, interior(bb), range_down_neg(n, i + 1))) continue;
    try_candidate(f, target, vm, found);
  }
  if (found.empty())
    fail(ErrorKind::logic, "no witness onto the standard family");
  return {cls, {found.begin(), found.end()}};
}

D1Witnesses witnesses_u0_sym(const ClauseSet& f, const Digraph& g) {
  int n = f.n();
  std::vector<int> hubs;
  for (int v : g.vertices())
    if (g.degree(v) == 4) hubs.push_back(v);
  if (hubs.size() != 2)
    fail(ErrorKind::logic, "junction layout outside the classification");
  std::set<std::map<int, int>> found;
  D1Class cls{};
  bool have_cls = false;
  ClauseSet target;
  for (int role : {0, 1}) {
    int qv = hubs[role], pv = hubs[1 - role];
    std::vector<std::vector<int>> shorts, longs;
    for (int o : g.out(qv)) shorts.push_back(run_from(g, o));
    for (int o : g.out(pv)) longs.push_back(run_from(g, o));
    if (shorts[0].back() != pv || shorts[1].back() != pv) continue;
    if (longs[0].back() != qv || longs[1].back() != qv) continue;
    if (shorts[0].size() != shorts[1].size()) continue;
    if (longs[0].size() != longs[1].size()) continue;
    int i = static_cast<int>(shorts[0].size());
    if (2 * i > n + 1) continue;  // keep the standard parameter range
    if (static_cast<int>(longs[0].size()) != n - i + 1) continue;
    D1Class here{D1Kind::u0, n, 0, i, i, {}};
    if (!have_cls) {
      cls = here;
      target = build_ufamily(cls);
      have_cls = true;
    } else if (!same_class(cls, here)) {
      continue;
    }
    for (int sa : {0, 1}) {
      for (int la : {0, 1}) {
        std::map<int, int> vm;
        if (!assign(vm, qv, -i) || !assign(vm, pv, i)) continue;
        if (!assign_seq(vm, interior(shorts[sa]), range_down_neg(i - 1, 1)))
          continue;
        if (!assign_seq(vm, interior(shorts[1 - sa]), range_up(1, i - 1)))
          continue;
        if (!assign_seq(vm, interior(longs[la]), range_up(i + 1, n))) continue;
        if (!assign_seq(vm, interior(longs[1 - la]),
                        range_down_neg(n, i + 1)))
          continue;
        try_candidate(f, target, vm, found);
      }
    }
  }
  if (!have_cls || found.empty())
    fail(ErrorKind::logic, "no witness onto the standard family");
  return {cls, {found.begin(), found.end()}};
}

D1Witnesses witnesses_u0_gen(const ClauseSet& f, const Digraph& g) {
  int n = f.n();
  std::vector<int> sources, sinks;
  for (int v : g.vertices()) {
    if (g.degree(v) != 3) continue;
    if (g.out_degree(v) == 2) sources.push_back(v);
    if (g.in_degree(v) == 2) sinks.push_back(v);
  }
  if (sources.size() != 2 || sinks.size() != 2)
    fail(ErrorKind::logic, "junction layout outside the classification");

  // each source's two runs must land on one sink (a parallel pair)
  std::map<int, std::vector<std::vector<int>>> pair_runs;
  std::map<int, int> pair_sink;
  for (int s : sources) {
    for (int o : g.out(s)) pair_runs[s].push_back(run_from(g, o));
    int e0 = pair_runs[s][0].back(), e1 = pair_runs[s][1].back();
    if (e0 != e1 || std::find(sinks.begin(), sinks.end(), e0) == sinks.end())
      fail(ErrorKind::logic, "parallel pair layout outside the classification");
    if (pair_runs[s][0].size() != pair_runs[s][1].size())
      fail(ErrorKind::logic, "parallel pair lengths differ");
    pair_sink[s] = e0;
  }
  if (pair_sink[sources[0]] == pair_sink[sources[1]])
    fail(ErrorKind::logic, "parallel pairs share a sink");
  // connectors run from each pair's sink to the other source
  std::map<int, std::vector<int>> connector;
  for (int s : sources) {
    int e = pair_sink[s];
    std::vector<int> run{e};
    std::vector<int> rest = run_from(g, g.out(e)[0]);
    run.insert(run.end(), rest.begin(), rest.end());
    connector[s] = run;
  }

  std::set<std::map<int, int>> found;
  D1Class cls{};
  bool have_cls = false;
  ClauseSet target;
  for (int role : {0, 1}) {
    int sx = sources[role], sy = sources[1 - role];
    int ex = pair_sink[sx], ey = pair_sink[sy];
    if (connector[sx].back() != sy || connector[sy].back() != sx) continue;
    int x = static_cast<int>(pair_runs[sx][0].size());
    int y = n - static_cast<int>(pair_runs[sy][0].size()) + 1;
    if (!(2 <= x && x < y && y <= n - 1 && x + y <= n + 1)) continue;
    D1Class here{D1Kind::u0, n, 0, x, y, {}};
    if (!have_cls) {
      cls = here;
      target = build_ufamily(cls);
      have_cls = true;
    } else if (!same_class(cls, here)) {
      continue;
    }
    std::vector<int> conn_x = connector[sx];  // x .. y in the standard form
    std::vector<int> conn_y = connector[sy];  // -y .. -x
    for (int xa : {0, 1}) {
      for (int ya : {0, 1}) {
        std::map<int, int> vm;
        if (!assign(vm, sx, -x) || !assign(vm, ex, x)) continue;
        if (!assign(vm, sy, y) || !assign(vm, ey, -y)) continue;
        if (!assign_seq(vm, interior(pair_runs[sx][xa]),
                        range_down_neg(x - 1, 1)))
          continue;
        if (!assign_seq(vm, interior(pair_runs[sx][1 - xa]),
                        range_up(1, x - 1)))
          continue;
        if (!assign_seq(vm, interior(pair_runs[sy][ya]),
                        range_up(y + 1, n)))
          continue;
        if (!assign_seq(vm, interior(pair_runs[sy][1 - ya]),
                        range_down_neg(n, y + 1)))
          continue;
        std::vector<int> cx(conn_x.begin() + 1, conn_x.end() - 1);
        std::vector<int> cy(conn_y.begin() + 1, conn_y.end() - 1);
        if (!assign_seq(vm, cx, range_up(x + 1, y - 1))) continue;
        if (!assign_seq(vm, cy, range_down_neg(y - 1, x + 1))) continue;
        try_candidate(f, target, vm, found);
      }
    }
  }
  if (!have_cls || found.empty())
    fail(ErrorKind::logic, "no witness onto the standard family");
  return {cls, {found.begin(), found.end()}};
}

// f: verified minimally unsatisfiable, deficiency 1, no empty clause.
D1Witnesses d1_witnesses(const ClauseSet& f) {
  Digraph g = build_idg(f);
  int units = 0;
  for (const Clause& c : f.clauses())
    if (c.unit()) ++units;
  int d3 = 0, d4 = 0;
  for (int v : g.vertices()) {
    int d = g.degree(v);
    if (d == 3) ++d3;
    if (d == 4) ++d4;
    if (d > 4) fail(ErrorKind::logic, "degree above 4 in a deficiency-1 digraph");
  }
  D1Witnesses w;
  if (units == 2 && d3 == 0 && d4 == 0)
    w = witnesses_u2(f, g);
  else if (units == 1 && d3 == 2 && d4 == 0)
    w = witnesses_u1(f, g);
  else if (units == 0 && d3 == 0 && d4 == 2)
    w = witnesses_u0_sym(f, g);
  else if (units == 0 && d3 == 4 && d4 == 0)
    w = witnesses_u0_gen(f, g);
  else
    fail(ErrorKind::logic, "degree signature outside the classification");
  if (w.maps.empty())
    fail(ErrorKind::logic, "no witness onto the standard family");
  return w;
}

void require_mu(const ClauseSet& f) {
  if (!is_mu(f))
    fail(ErrorKind::not_mu, "formula is not minimally unsatisfiable");
}

WdcStructure require_wdc(const ClauseSet& f, const Digraph& g) {
  auto s = recognize_wdc(g);
  if (!s)
    fail(ErrorKind::logic,
         "implication digraph did not decompose into a double cycle");
  if (s->m != 2 * f.deficiency())
    fail(ErrorKind::logic, "small cycle count is not twice the deficiency");
  return *s;
}

WdcShape canonical_shape(const WdcStructure& s) {
  int m = s.m;
  auto md = [m](int v) { return ((v % m) + m) % m; };
  WdcShape base = shape_of(s);
  WdcShape best = base;
  for (int r = 0; r < m; ++r) {
    WdcShape rot(m), refl(m);
    for (int c = 0; c < m; ++c) {
      rot[c] = base[md(c + r)];
      refl[c] = {base[md(r - c - 1)][0], base[md(r - c)][2],
                 base[md(r - c)][1]};
    }
    best = std::min(best, rot);
    best = std::min(best, refl);
  }
  return best;
}

}  // namespace

D1Class classify_d1(const ClauseSet& f) {
  require_mu(f);
  if (f.deficiency() != 1) fail(ErrorKind::invalid, "deficiency is not 1");
  if (f.has_empty_clause()) return D1Class{D1Kind::bottom, 0, 0, 0, 0, {}};
  D1Witnesses w = d1_witnesses(f);
  D1Class out = w.cls;
  out.witness = w.maps.front();
  return out;
}

std::optional<SkewSymmetry> unique_unit_free_skew(const Digraph& g) {
  std::vector<SkewSymmetry> found;
  for (const auto& f : wdc_isomorphisms(g, g.transposed())) {
    bool ok = true;
    for (const auto& [v, w] : f) {
      if (v == w || f.at(w) != v || g.has_arc(v, w)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    check_skew_symmetry(g, f);
    found.push_back(f);
  }
  if (found.size() > 1)
    fail(ErrorKind::logic,
         "multiple unit-free skew-symmetries on one double cycle");
  if (found.empty()) return std::nullopt;
  return found.front();
}

bool are_isomorphic(const ClauseSet& f, const ClauseSet& g) {
  require_mu(f);
  require_mu(g);
  if (f.deficiency() != g.deficiency()) return false;
  if (f.deficiency() == 1) return same_class(classify_d1(f), classify_d1(g));
  Digraph gf = build_idg(f);
  Digraph gg = build_idg(g);
  require_wdc(f, gf);
  require_wdc(g, gg);
  return !wdc_isomorphisms(gf, gg).empty();
}

ClauseSet canon(const ClauseSet& f) {
  require_mu(f);
  if (f.deficiency() == 1) return build_ufamily(classify_d1(f));
  Digraph g = build_idg(f);
  WdcStructure s = require_wdc(f, g);
  Digraph std_g = build_wdc(canonical_shape(s));
  auto skew = unique_unit_free_skew(std_g);
  if (!skew)
    fail(ErrorKind::logic, "standardized double cycle has no unit-free skew");
  return clause_set_of(std_g, *skew);
}

AutomorphismGroup automorphism_group(const ClauseSet& f) {
  require_mu(f);
  std::vector<std::map<int, int>> elems;
  if (f.deficiency() == 1) {
    if (f.has_empty_clause()) {
      elems.push_back({});
    } else {
      D1Witnesses w = d1_witnesses(f);
      std::map<int, int> inv0;
      for (const auto& [a, b] : w.maps.front()) inv0[b] = a;
      for (const auto& wj : w.maps) {
        std::map<int, int> comp;
        for (const auto& [a, b] : wj) comp[a] = inv0.at(b);
        elems.push_back(comp);
      }
    }
  } else {
    Digraph g = build_idg(f);
    require_wdc(f, g);
    elems = wdc_isomorphisms(g, g);
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  // group sanity: closed under composition
  std::set<std::map<int, int>> all(elems.begin(), elems.end());
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      std::map<int, int> comp;
      for (const auto& [v, w] : b) comp[v] = a.at(w);
      if (!all.count(comp))
        fail(ErrorKind::logic, "automorphisms are not closed under composition");
    }
  }
  return {elems};
}

std::string homeo_fingerprint(const ClauseSet& f) {
  require_mu(f);
  int k = f.deficiency();
  if (k < 2)
    fail(ErrorKind::invalid, "fingerprint needs deficiency at least 2");
  WdcStructure s = require_wdc(f, build_idg(f));
  std::string bits;
  for (const WdcCycle& c : s.cycles)
    bits.push_back(c.overlap_next.size() >= 2 ? '1' : '0');
  for (int i = 0; i < k; ++i)
    if (bits[i] != bits[i + k])
      fail(ErrorKind::logic, "overlap pattern is not antipodal");
  return bracelet_canon(bits.substr(0, k));
}

Classification classify(const ClauseSet& f) {
  require_mu(f);
  Classification out;
  out.deficiency = f.deficiency();
  out.canonical = canon(f);
  out.aut_order = automorphism_group(f).order();
  if (out.deficiency == 1)
    out.d1 = classify_d1(f);
  else
    out.bracelet = homeo_fingerprint(f);
  return out;
}

}  // namespace mu2

#include "mu2/wdc.hpp"

#include <algorithm>
#include <set>

#include "mu2/error.hpp"

namespace mu2 {

namespace {

void append_all(std::vector<int>& out, const std::vector<int>& part) {
  out.insert(out.end(), part.begin(), part.end());
}

}  // namespace

std::vector<int> WdcStructure::cycle_vertices(int i) const {
  std::vector<int> out;
  append_all(out, overlap(i - 1));
  append_all(out, cycles[((i % m) + m) % m].section_a);
  append_all(out, overlap(i));
  append_all(out, cycles[((i % m) + m) % m].section_b);
  return out;
}

Digraph split_vertex(const Digraph& g, int x, int u, int v) {
  if (!g.has_vertex(x)) fail(ErrorKind::invalid, "split vertex not present");
  if (u == v || g.has_vertex(u) || g.has_vertex(v))
    fail(ErrorKind::invalid, "replacement vertices must be fresh and distinct");
  std::vector<int> verts{u, v};
  for (int w : g.vertices())
    if (w != x) verts.push_back(w);
  std::vector<Arc> arcs{{u, v}};
  for (const Arc& a : g.arcs()) {
    if (a.first == x)
      arcs.push_back({v, a.second});
    else if (a.second == x)
      arcs.push_back({a.first, u});
    else
      arcs.push_back(a);
  }
  return Digraph(verts, arcs);
}

Digraph split_arc(const Digraph& g, Arc a, int v) {
  if (!g.has_arc(a.first, a.second))
    fail(ErrorKind::invalid, "split arc not present");
  if (g.has_vertex(v))
    fail(ErrorKind::invalid, "replacement vertex must be fresh");
  std::vector<int> verts = g.vertices();
  verts.push_back(v);
  std::vector<Arc> arcs{{a.first, v}, {v, a.second}};
  for (const Arc& b : g.arcs())
    if (b != a) arcs.push_back(b);
  return Digraph(verts, arcs);
}

namespace {

// Positions of verts inside the cyclic sequence cyc, provided they occupy a
// contiguous proper run; returned in cyc order.
std::optional<std::vector<int>> contiguous_run(const std::vector<int>& cyc,
                                               const std::set<int>& verts) {
  int n = static_cast<int>(cyc.size());
  int k = static_cast<int>(verts.size());
  if (k == 0 || k >= n) return std::nullopt;
  int start = -1;
  for (int i = 0; i < n; ++i) {
    if (verts.count(cyc[i]) && !verts.count(cyc[(i + n - 1) % n])) {
      if (start >= 0) return std::nullopt;  // two separate runs
      start = i;
    }
  }
  if (start < 0) return std::nullopt;
  std::vector<int> run;
  for (int j = 0; j < k; ++j) {
    int v = cyc[(start + j) % n];
    if (!verts.count(v)) return std::nullopt;
    run.push_back(v);
  }
  return run;
}

std::optional<WdcStructure> extract_structure(const Digraph& g,
                                              const std::vector<Cycle>& smalls) {
  int m = static_cast<int>(smalls.size());
  if (m < 3) return std::nullopt;

  std::map<int, std::vector<int>> owner;
  for (int i = 0; i < m; ++i)
    for (int v : smalls[i].verts) owner[v].push_back(i);
  for (int v : g.vertices()) {
    auto it = owner.find(v);
    if (it == owner.end() || it->second.size() > 2) return std::nullopt;
  }

  std::vector<std::set<int>> adj(m);
  for (const auto& [v, own] : owner)
    if (own.size() == 2) {
      adj[own[0]].insert(own[1]);
      adj[own[1]].insert(own[0]);
    }
  for (int i = 0; i < m; ++i)
    if (adj[i].size() != 2) return std::nullopt;

  // walk the ring of small cycles
  std::vector<int> ring{0};
  std::vector<char> used(m, 0);
  used[0] = 1;
  int prev = -1, cur = 0;
  for (int step = 1; step < m; ++step) {
    int next = -1;
    for (int cand : adj[cur])
      if (cand != prev) {
        next = cand;
        break;
      }
    if (next < 0 || used[next]) return std::nullopt;
    used[next] = 1;
    ring.push_back(next);
    prev = cur;
    cur = next;
  }
  if (!adj[cur].count(0)) return std::nullopt;

  // overlaps between consecutive ring members, as directed paths
  std::vector<std::vector<int>> overlaps(m);
  for (int i = 0; i < m; ++i) {
    const Cycle& a = smalls[ring[i]];
    const Cycle& b = smalls[ring[(i + 1) % m]];
    std::set<int> shared;
    std::set<int> bv(b.verts.begin(), b.verts.end());
    for (int v : a.verts)
      if (bv.count(v)) shared.insert(v);
    if (shared.empty()) return std::nullopt;
    auto run_a = contiguous_run(a.verts, shared);
    auto run_b = contiguous_run(b.verts, shared);
    if (!run_a || !run_b || *run_a != *run_b) return std::nullopt;
    overlaps[i] = *run_a;
  }

  // split each small cycle into prev overlap, a, overlap, b
  WdcStructure s;
  s.m = m;
  s.cycles.resize(m);
  for (int i = 0; i < m; ++i) {
    const std::vector<int>& cyc = smalls[ring[i]].verts;
    int n = static_cast<int>(cyc.size());
    const std::vector<int>& oprev = overlaps[(i + m - 1) % m];
    const std::vector<int>& ocur = overlaps[i];
    std::set<int> in_prev(oprev.begin(), oprev.end());
    std::set<int> in_cur(ocur.begin(), ocur.end());
    for (int v : oprev)
      if (in_cur.count(v)) return std::nullopt;
    int pos = -1;
    for (int j = 0; j < n; ++j)
      if (cyc[j] == oprev.back()) pos = j;
    if (pos < 0) return std::nullopt;
    std::vector<int> sec_a, sec_b;
    int j = (pos + 1) % n;
    while (cyc[j] != ocur.front()) {
      if (in_prev.count(cyc[j]) || in_cur.count(cyc[j])) return std::nullopt;
      sec_a.push_back(cyc[j]);
      j = (j + 1) % n;
    }
    int qos = -1;
    for (int t = 0; t < n; ++t)
      if (cyc[t] == ocur.back()) qos = t;
    j = (qos + 1) % n;
    while (cyc[j] != oprev.front()) {
      if (in_prev.count(cyc[j]) || in_cur.count(cyc[j])) return std::nullopt;
      sec_b.push_back(cyc[j]);
      j = (j + 1) % n;
    }
    if (static_cast<int>(oprev.size() + sec_a.size() + ocur.size() +
                         sec_b.size()) != n)
      return std::nullopt;
    s.cycles[i].overlap_next = ocur;
    s.cycles[i].section_a = sec_a;
    s.cycles[i].section_b = sec_b;
  }
  return s;
}

void add_path_arcs(std::set<Arc>& arcs, const std::vector<int>& path) {
  for (size_t j = 0; j + 1 < path.size(); ++j)
    arcs.insert({path[j], path[j + 1]});
}

void add_chain_arcs(std::set<Arc>& arcs, int from,
                    const std::vector<int>& interior, int to) {
  int cur = from;
  for (int v : interior) {
    arcs.insert({cur, v});
    cur = v;
  }
  arcs.insert({cur, to});
}

bool validate_structure(const Digraph& g, const WdcStructure& s) {
  std::set<int> seen;
  for (const WdcCycle& c : s.cycles) {
    for (int v : c.overlap_next)
      if (!seen.insert(v).second) return false;
    for (int v : c.section_a)
      if (!seen.insert(v).second) return false;
    for (int v : c.section_b)
      if (!seen.insert(v).second) return false;
  }
  const std::vector<int>& verts = g.vertices();
  if (seen.size() != verts.size() ||
      !std::equal(seen.begin(), seen.end(), verts.begin()))
    return false;

  std::set<Arc> arcs;
  for (int i = 0; i < s.m; ++i) {
    const std::vector<int>& oprev = s.overlap(i - 1);
    const std::vector<int>& ocur = s.overlap(i);
    add_path_arcs(arcs, ocur);
    add_chain_arcs(arcs, oprev.back(), s.cycles[i].section_a, ocur.front());
    add_chain_arcs(arcs, ocur.back(), s.cycles[i].section_b, oprev.front());
  }
  const std::vector<Arc>& ga = g.arcs();
  return arcs.size() == ga.size() &&
         std::equal(arcs.begin(), arcs.end(), ga.begin());
}

bool small_cycle_shaped(const Digraph& g, const Cycle& c) {
  int nonlinear = 0, deg4 = 0;
  for (int v : c.verts) {
    int d = g.degree(v);
    if (d >= 3) ++nonlinear;
    if (d == 4) ++deg4;
  }
  return nonlinear <= 4 && deg4 <= 2;
}

}  // namespace

std::optional<WdcStructure> recognize_wdc(const Digraph& g) {
  if (g.vertices().size() < 3) return std::nullopt;
  for (int v : g.vertices()) {
    if (g.in_degree(v) < 1 || g.out_degree(v) < 1) return std::nullopt;
    if (g.degree(v) > 4) return std::nullopt;
  }
  if (!strongly_connected(g)) return std::nullopt;

  std::vector<Cycle> cycles = enumerate_cycles(g);
  int t = static_cast<int>(cycles.size());
  if (t < 5) return std::nullopt;
  int m = t - 2;

  std::vector<char> pass(t, 0);
  for (int i = 0; i < t; ++i) pass[i] = small_cycle_shaped(g, cycles[i]);

  for (int bi = 0; bi < t; ++bi) {
    for (int bj = bi + 1; bj < t; ++bj) {
      bool ok = true;
      std::vector<Cycle> smalls;
      smalls.reserve(m);
      for (int i = 0; i < t; ++i) {
        if (i == bi || i == bj) continue;
        if (!pass[i]) {
          ok = false;
          break;
        }
        smalls.push_back(cycles[i]);
      }
      if (!ok) continue;
      auto s = extract_structure(g, smalls);
      if (s && validate_structure(g, *s)) return s;
    }
  }
  return std::nullopt;
}

Multigraph cycle_multigraph(const Digraph& g) {
  std::vector<Cycle> cycles = enumerate_cycles(g);
  int t = static_cast<int>(cycles.size());
  std::vector<int> verts;
  std::map<Edge, int> mult;
  std::vector<std::set<int>> vs(t);
  for (int i = 0; i < t; ++i) {
    verts.push_back(i);
    vs[i] = std::set<int>(cycles[i].verts.begin(), cycles[i].verts.end());
    mult[{i, i}] = static_cast<int>(vs[i].size());
  }
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      int shared = 0;
      for (int v : vs[i])
        if (vs[j].count(v)) ++shared;
      if (shared > 0) mult[{i, j}] = shared;
    }
  return Multigraph(verts, mult);
}

namespace {

// Maps path p onto q head-to-head, recording assignments in f.
bool map_path(std::map<int, int>& f, const std::vector<int>& p,
              const std::vector<int>& q) {
  if (p.size() != q.size()) return false;
  for (size_t j = 0; j < p.size(); ++j) {
    auto [it, fresh] = f.insert({p[j], q[j]});
    if (!fresh && it->second != q[j]) return false;
  }
  return true;
}

bool verify_arc_map(const Digraph& g, const Digraph& h,
                    const std::map<int, int>& f) {
  if (f.size() != g.vertices().size()) return false;
  if (g.arcs().size() != h.arcs().size()) return false;
  std::set<int> image;
  for (const auto& [v, w] : f)
    if (!image.insert(w).second) return false;
  for (const Arc& a : g.arcs())
    if (!h.has_arc(f.at(a.first), f.at(a.second))) return false;
  return true;
}

}  // namespace

std::vector<std::map<int, int>> wdc_isomorphisms(const Digraph& g,
                                                 const Digraph& h) {
  auto sg = recognize_wdc(g);
  auto sh = recognize_wdc(h);
  if (!sg || !sh) fail(ErrorKind::invalid, "not a weak double cycle");
  std::vector<std::map<int, int>> out;
  if (sg->m != sh->m) return out;
  int m = sg->m;
  auto md = [m](int x) { return ((x % m) + m) % m; };

  for (int r = 0; r < m; ++r) {
    for (int d : {1, -1}) {
      std::map<int, int> f;
      bool ok = true;
      for (int i = 0; i < m && ok; ++i) {
        if (d == 1) {
          int j = md(i + r);
          ok = map_path(f, sg->cycles[i].overlap_next,
                        sh->cycles[j].overlap_next) &&
               map_path(f, sg->cycles[i].section_a, sh->cycles[j].section_a) &&
               map_path(f, sg->cycles[i].section_b, sh->cycles[j].section_b);
        } else {
          // reflections swap the section roles and reindex overlaps
          ok = map_path(f, sg->cycles[i].overlap_next,
                        sh->cycles[md(r - i - 1)].overlap_next) &&
               map_path(f, sg->cycles[i].section_a,
                        sh->cycles[md(r - i)].section_b) &&
               map_path(f, sg->cycles[i].section_b,
                        sh->cycles[md(r - i)].section_a);
        }
      }
      if (ok && verify_arc_map(g, h, f)) out.push_back(std::move(f));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

struct OrientState {
  std::vector<Edge> free_edges;       // multiplicity-1 edges awaiting direction
  std::vector<int> dir;               // 0 unset, 1 first->second, 2 second->first
  std::map<int, int> in_count, out_count, unset_count;
};

bool orient_feasible(const OrientState& st, int v) {
  int i = st.in_count.at(v), o = st.out_count.at(v), u = st.unset_count.at(v);
  if (i > 2 || o > 2) return false;
  if (i + u < 1 || o + u < 1) return false;
  return true;
}

// Applies all forced directions; false on contradiction.
bool propagate(OrientState& st) {
  bool change = true;
  while (change) {
    change = false;
    for (size_t e = 0; e < st.free_edges.size(); ++e) {
      if (st.dir[e]) continue;
      auto [a, b] = st.free_edges[e];
      // forced out of a (or into a)?
      int forced = 0;
      if (st.in_count[a] == 2 || st.out_count[b] == 2) forced = 1;
      if (st.out_count[a] == 2 || st.in_count[b] == 2) {
        if (forced) return false;
        forced = 2;
      }
      if (st.in_count[a] + st.unset_count[a] == 1 && st.in_count[a] == 0) {
        if (forced == 1) return false;
        forced = 2;
      }
      if (st.out_count[a] + st.unset_count[a] == 1 && st.out_count[a] == 0) {
        if (forced == 2) return false;
        forced = 1;
      }
      if (st.in_count[b] + st.unset_count[b] == 1 && st.in_count[b] == 0) {
        if (forced == 2) return false;
        forced = 1;
      }
      if (st.out_count[b] + st.unset_count[b] == 1 && st.out_count[b] == 0) {
        if (forced == 1) return false;
        forced = 2;
      }
      if (!forced) continue;
      st.dir[e] = forced;
      int from = forced == 1 ? a : b;
      int to = forced == 1 ? b : a;
      ++st.out_count[from];
      ++st.in_count[to];
      --st.unset_count[a];
      --st.unset_count[b];
      if (!orient_feasible(st, a) || !orient_feasible(st, b)) return false;
      change = true;
    }
  }
  return true;
}

std::optional<Digraph> orient_search(const Multigraph& m, OrientState st,
                                     const std::vector<Arc>& fixed) {
  if (!propagate(st)) return std::nullopt;
  int pick = -1;
  for (size_t e = 0; e < st.free_edges.size(); ++e)
    if (!st.dir[e]) {
      pick = static_cast<int>(e);
      break;
    }
  if (pick < 0) {
    std::vector<Arc> arcs = fixed;
    for (size_t e = 0; e < st.free_edges.size(); ++e) {
      auto [a, b] = st.free_edges[e];
      arcs.push_back(st.dir[e] == 1 ? Arc{a, b} : Arc{b, a});
    }
    Digraph dg(m.vertices(), arcs);
    if (recognize_wdc(dg)) return dg;
    return std::nullopt;
  }
  for (int choice : {1, 2}) {
    OrientState next = st;
    auto [a, b] = next.free_edges[pick];
    next.dir[pick] = choice;
    int from = choice == 1 ? a : b;
    int to = choice == 1 ? b : a;
    ++next.out_count[from];
    ++next.in_count[to];
    --next.unset_count[a];
    --next.unset_count[b];
    if (!orient_feasible(next, a) || !orient_feasible(next, b)) continue;
    auto got = orient_search(m, std::move(next), fixed);
    if (got) return got;
  }
  return std::nullopt;
}

}  // namespace

Digraph orient_multigraph(const Multigraph& m) {
  if (m.vertices().size() < 3)
    fail(ErrorKind::invalid, "too small to orient as a weak double cycle");
  if (!connected(m))
    fail(ErrorKind::invalid, "multigraph is not connected");
  OrientState st;
  std::vector<Arc> fixed;
  for (int v : m.vertices()) {
    int d = m.degree(v);
    if (d < 2 || d > 4)
      fail(ErrorKind::invalid, "vertex degree outside 2..4");
    st.in_count[v] = st.out_count[v] = st.unset_count[v] = 0;
  }
  for (const auto& [e, k] : m.multiplicity()) {
    if (e.first == e.second)
      fail(ErrorKind::invalid, "loops cannot be oriented");
    if (k > 2) fail(ErrorKind::invalid, "edge multiplicity above 2");
    if (k == 2) {
      // doubled edges come from antiparallel arc pairs
      fixed.push_back(Arc(e.first, e.second));
      fixed.push_back(Arc(e.second, e.first));
      ++st.in_count[e.first];
      ++st.out_count[e.first];
      ++st.in_count[e.second];
      ++st.out_count[e.second];
    } else {
      st.free_edges.push_back(e);
      ++st.unset_count[e.first];
      ++st.unset_count[e.second];
    }
  }
  st.dir.assign(st.free_edges.size(), 0);
  for (int v : m.vertices())
    if (!orient_feasible(st, v))
      fail(ErrorKind::invalid, "not orientable as a weak double cycle");
  auto got = orient_search(m, std::move(st), fixed);
  if (!got) fail(ErrorKind::invalid, "not orientable as a weak double cycle");
  return *got;
}

namespace {

struct Thread {
  std::vector<int> verts;  // junction, interiors, junction
  std::vector<Edge> edges;
};

Edge mk_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::optional<Digraph> try_doubling(const Graph& h,
                                    const std::vector<Thread>& threads,
                                    const std::vector<char>& doubled) {
  std::map<Edge, int> mult;
  for (int v : h.vertices())
    for (int w : h.neighbors(v))
      if (v < w) mult[{v, w}] = 1;
  for (size_t t = 0; t < threads.size(); ++t)
    if (doubled[t])
      for (const Edge& e : threads[t].edges) mult[e] = 2;
  try {
    return orient_multigraph(Multigraph(h.vertices(), mult));
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::invalid) return std::nullopt;
    throw;
  }
}

std::optional<Digraph> doubling_search(const Graph& h,
                                       const std::vector<Thread>& threads,
                                       std::vector<char>& doubled,
                                       std::map<int, int>& extra, size_t idx) {
  if (idx == threads.size()) return try_doubling(h, threads, doubled);
  // leave single
  doubled[idx] = 0;
  if (auto got = doubling_search(h, threads, doubled, extra, idx + 1))
    return got;
  // double, within junction degree capacity
  int a = threads[idx].verts.front();
  int b = threads[idx].verts.back();
  if (h.degree(a) + extra[a] + 1 <= 4 &&
      h.degree(b) + extra[b] + (a == b ? 2 : 1) <= 4) {
    doubled[idx] = 1;
    extra[a] += 1;
    extra[b] += 1;
    auto got = doubling_search(h, threads, doubled, extra, idx + 1);
    extra[a] -= 1;
    extra[b] -= 1;
    doubled[idx] = 0;
    if (got) return got;
  }
  return std::nullopt;
}

}  // namespace

Digraph graph_to_wdc(const Graph& h) {
  if (h.vertices().size() < 3)
    fail(ErrorKind::invalid, "too small to be an underlying graph");
  if (!connected(h))
    fail(ErrorKind::invalid, "underlying graph is not connected");
  for (int v : h.vertices())
    if (h.degree(v) < 2 || h.degree(v) > 4)
      fail(ErrorKind::invalid, "vertex degree outside 2..4");

  std::vector<int> junctions;
  for (int v : h.vertices())
    if (h.degree(v) >= 3) junctions.push_back(v);

  if (junctions.empty()) {
    // a plain cycle; all edges came from antiparallel pairs
    std::map<Edge, int> mult;
    for (int v : h.vertices())
      for (int w : h.neighbors(v))
        if (v < w) mult[{v, w}] = 2;
    return orient_multigraph(Multigraph(h.vertices(), mult));
  }

  // threads: maximal degree-2 chains between junctions
  std::vector<Thread> threads;
  std::set<Edge> claimed;
  for (int j : junctions) {
    for (int w : h.neighbors(j)) {
      if (claimed.count(mk_edge(j, w))) continue;
      Thread t;
      t.verts = {j};
      int prev = j, cur = w;
      claimed.insert(mk_edge(j, w));
      t.edges.push_back(mk_edge(j, w));
      while (h.degree(cur) == 2) {
        t.verts.push_back(cur);
        int next = -1;
        for (int x : h.neighbors(cur))
          if (x != prev) next = x;
        if (next < 0) fail(ErrorKind::invalid, "dead-end chain");
        claimed.insert(mk_edge(cur, next));
        t.edges.push_back(mk_edge(cur, next));
        prev = cur;
        cur = next;
      }
      t.verts.push_back(cur);
      threads.push_back(std::move(t));
    }
  }

  std::vector<char> doubled(threads.size(), 0);
  std::map<int, int> extra;
  for (int j : junctions) extra[j] = 0;
  auto got = doubling_search(h, threads, doubled, extra, 0);
  if (!got)
    fail(ErrorKind::invalid,
         "not the underlying graph of a weak double cycle");
  return *got;
}

std::string bracelet_of(const WdcStructure& s) {
  std::string bits;
  for (const WdcCycle& c : s.cycles) {
    if (!c.section_a.empty() || !c.section_b.empty() ||
        c.overlap_next.size() > 2)
      fail(ErrorKind::invalid, "linear vertices present");
    bits.push_back(c.overlap_next.size() == 2 ? '1' : '0');
  }
  return bits;
}

std::string bracelet_canon(const std::string& bits) {
  int n = static_cast<int>(bits.size());
  if (n == 0) return bits;
  std::string best = bits;
  std::string rev(bits.rbegin(), bits.rend());
  for (int r = 0; r < n; ++r) {
    best = std::min(best, bits.substr(r) + bits.substr(0, r));
    best = std::min(best, rev.substr(r) + rev.substr(0, r));
  }
  return best;
}

std::vector<std::string> enumerate_bracelets(int m) {
  if (m < 1) fail(ErrorKind::invalid, "bracelet length must be positive");
  if (m > 20) fail(ErrorKind::cap, "bracelet length cap exceeded");
  std::set<std::string> reps;
  for (long mask = 0; mask < (1L << m); ++mask) {
    std::string bits(m, '0');
    for (int i = 0; i < m; ++i)
      if (mask & (1L << i)) bits[i] = '1';
    reps.insert(bracelet_canon(bits));
  }
  return std::vector<std::string>(reps.begin(), reps.end());
}

WdcShape shape_of(const WdcStructure& s) {
  WdcShape shape;
  for (const WdcCycle& c : s.cycles)
    shape.push_back({static_cast<int>(c.overlap_next.size()),
                     static_cast<int>(c.section_a.size()),
                     static_cast<int>(c.section_b.size())});
  return shape;
}

Digraph build_wdc(const WdcShape& shape) {
  int m = static_cast<int>(shape.size());
  if (m < 3) fail(ErrorKind::invalid, "need at least 3 small cycles");
  for (const auto& [o, a, b] : shape)
    if (o < 1 || a < 0 || b < 0)
      fail(ErrorKind::invalid, "overlap must have at least one vertex");

  std::vector<std::vector<int>> ov(m), sa(m), sb(m);
  int next = 1;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < shape[i][0]; ++j) ov[i].push_back(next++);
    for (int j = 0; j < shape[i][1]; ++j) sa[i].push_back(next++);
    for (int j = 0; j < shape[i][2]; ++j) sb[i].push_back(next++);
  }

  std::vector<int> verts;
  for (int v = 1; v < next; ++v) verts.push_back(v);
  std::set<Arc> arcs;
  for (int i = 0; i < m; ++i) {
    const std::vector<int>& oprev = ov[(i + m - 1) % m];
    add_path_arcs(arcs, ov[i]);
    add_chain_arcs(arcs, oprev.back(), sa[i], ov[i].front());
    add_chain_arcs(arcs, ov[i].back(), sb[i], oprev.front());
  }
  return Digraph(verts, std::vector<Arc>(arcs.begin(), arcs.end()));
}

}  // namespace mu2

#include "mu2/graphs.hpp"

#include <algorithm>
#include <atomic>
#include <set>

namespace mu2 {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

const std::vector<int>& empty_vec() {
  static const std::vector<int> e;
  return e;
}

}  // namespace

Digraph::Digraph(const std::vector<int>& vertices, const std::vector<Arc>& arcs)
    : verts_(sorted_unique(vertices)) {
  std::set<Arc> uniq;
  for (const Arc& a : arcs) {
    if (a.first == a.second)
      fail(ErrorKind::invalid, "loop arc at vertex " + std::to_string(a.first));
    if (!std::binary_search(verts_.begin(), verts_.end(), a.first) ||
        !std::binary_search(verts_.begin(), verts_.end(), a.second))
      fail(ErrorKind::invalid, "arc endpoint is not a vertex");
    uniq.insert(a);
  }
  arcs_.assign(uniq.begin(), uniq.end());
  for (const Arc& a : arcs_) {
    out_[a.first].push_back(a.second);
    in_[a.second].push_back(a.first);
  }
  for (auto& [v, ws] : out_) std::sort(ws.begin(), ws.end());
  for (auto& [v, ws] : in_) std::sort(ws.begin(), ws.end());
}

bool Digraph::has_vertex(int v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Digraph::has_arc(int a, int b) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{a, b});
}

const std::vector<int>& Digraph::out(int v) const {
  auto it = out_.find(v);
  return it == out_.end() ? empty_vec() : it->second;
}

const std::vector<int>& Digraph::in(int v) const {
  auto it = in_.find(v);
  return it == in_.end() ? empty_vec() : it->second;
}

Digraph Digraph::transposed() const {
  std::vector<Arc> rev;
  for (const Arc& a : arcs_) rev.push_back({a.second, a.first});
  return Digraph(verts_, rev);
}

Graph::Graph(const std::vector<int>& vertices, const std::vector<Edge>& edges)
    : verts_(sorted_unique(vertices)) {
  std::set<Edge> uniq;
  for (Edge e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first == e.second)
      fail(ErrorKind::invalid, "loop edge at vertex " + std::to_string(e.first));
    if (!std::binary_search(verts_.begin(), verts_.end(), e.first) ||
        !std::binary_search(verts_.begin(), verts_.end(), e.second))
      fail(ErrorKind::invalid, "edge endpoint is not a vertex");
    uniq.insert(e);
  }
  edges_.assign(uniq.begin(), uniq.end());
  for (const Edge& e : edges_) {
    adj_[e.first].push_back(e.second);
    adj_[e.second].push_back(e.first);
  }
  for (auto& [v, ws] : adj_) std::sort(ws.begin(), ws.end());
}

bool Graph::has_vertex(int v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Graph::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

const std::vector<int>& Graph::neighbors(int v) const {
  auto it = adj_.find(v);
  return it == adj_.end() ? empty_vec() : it->second;
}

Multigraph::Multigraph(const std::vector<int>& vertices,
                       const std::map<Edge, int>& multiplicity)
    : verts_(sorted_unique(vertices)) {
  for (const auto& [key, k] : multiplicity) {
    if (k < 0) fail(ErrorKind::invalid, "negative multiplicity");
    if (k == 0) continue;
    Edge e = key.first <= key.second ? key : Edge{key.second, key.first};
    if (!std::binary_search(verts_.begin(), verts_.end(), e.first) ||
        !std::binary_search(verts_.begin(), verts_.end(), e.second))
      fail(ErrorKind::invalid, "edge endpoint is not a vertex");
    mult_[e] += k;
  }
}

bool Multigraph::has_vertex(int v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

int Multigraph::mult(int a, int b) const {
  if (a > b) std::swap(a, b);
  auto it = mult_.find({a, b});
  return it == mult_.end() ? 0 : it->second;
}

int Multigraph::degree(int v) const {
  int d = 0;
  for (const auto& [e, k] : mult_)
    if (e.first == v || e.second == v) d += k;  // a loop counts once
  return d;
}

std::vector<int> Multigraph::neighbors(int v) const {
  std::vector<int> ns;
  for (const auto& [e, k] : mult_) {
    if (e.first == v) ns.push_back(e.second);
    else if (e.second == v) ns.push_back(e.first);
  }
  return sorted_unique(ns);
}

int Multigraph::edge_count() const {
  int total = 0;
  for (const auto& [e, k] : mult_) total += k;
  return total;
}

Digraph gtodg(const Graph& g) {
  std::vector<Arc> arcs;
  for (const Edge& e : g.edges()) {
    arcs.push_back({e.first, e.second});
    arcs.push_back({e.second, e.first});
  }
  return Digraph(g.vertices(), arcs);
}

Graph dgtog(const Digraph& g) {
  std::vector<Edge> edges;
  for (const Arc& a : g.arcs())
    edges.push_back({std::min(a.first, a.second), std::max(a.first, a.second)});
  return Graph(g.vertices(), edges);
}

Multigraph gtomg(const Graph& g) {
  std::map<Edge, int> m;
  for (const Edge& e : g.edges()) m[e] = 1;
  return Multigraph(g.vertices(), m);
}

Graph mgtog(const Multigraph& m) {
  std::vector<Edge> edges;
  for (const auto& [e, k] : m.multiplicity())
    if (e.first != e.second) edges.push_back(e);
  return Graph(m.vertices(), edges);
}

Multigraph dgtomg(const Digraph& g) {
  std::map<Edge, int> m;
  for (const Arc& a : g.arcs())
    ++m[{std::min(a.first, a.second), std::max(a.first, a.second)}];
  return Multigraph(g.vertices(), m);
}

std::vector<int> linear_vertices(const Digraph& g) {
  std::vector<int> out;
  for (int v : g.vertices())
    if (g.in_degree(v) == 1 && g.out_degree(v) == 1) out.push_back(v);
  return out;
}

std::vector<int> linear_vertices(const Multigraph& m) {
  std::vector<int> out;
  for (int v : m.vertices())
    if (m.degree(v) == 2) out.push_back(v);
  return out;
}

Multigraph smooth(const Multigraph& m) {
  return smooth(m, m.vertices());
}

Multigraph smooth(const Multigraph& m, const std::vector<int>& order) {
  for (int v : m.vertices())
    if (std::find(order.begin(), order.end(), v) == order.end())
      fail(ErrorKind::invalid, "smoothing order misses vertex " + std::to_string(v));

  std::vector<int> verts = m.vertices();
  std::map<Edge, int> mult = m.multiplicity();

  auto deg = [&](int v) {
    int d = 0;
    for (const auto& [e, k] : mult)
      if (e.first == v || e.second == v) d += k;
    return d;
  };
  auto smoothable = [&](int v) {
    if (deg(v) != 2) return false;
    auto it = mult.find({v, v});
    return it == mult.end() || it->second == 0;
  };

  for (;;) {
    int pick = 0;
    bool found = false;
    for (int v : order) {
      if (std::find(verts.begin(), verts.end(), v) != verts.end() && smoothable(v)) {
        pick = v;
        found = true;
        break;
      }
    }
    if (!found) break;

    // The two incident edge units at pick (possibly the same neighbor twice).
    std::vector<int> ends;
    for (const auto& [e, k] : mult) {
      if (e.first != pick && e.second != pick) continue;
      int w = e.first == pick ? e.second : e.first;
      for (int i = 0; i < k; ++i) ends.push_back(w);
    }
    if (ends.size() != 2) fail(ErrorKind::logic, "smoothing degree bookkeeping");

    for (auto it = mult.begin(); it != mult.end();) {
      if (it->first.first == pick || it->first.second == pick)
        it = mult.erase(it);
      else
        ++it;
    }
    verts.erase(std::remove(verts.begin(), verts.end(), pick), verts.end());
    Edge joined{std::min(ends[0], ends[1]), std::max(ends[0], ends[1])};
    ++mult[joined];
  }
  return Multigraph(verts, mult);
}

bool Cycle::contains(int v) const {
  return std::find(verts.begin(), verts.end(), v) != verts.end();
}

namespace {
std::atomic<long> g_cycle_cap_override{0};
}

void set_cycle_cap_override(long cap) { g_cycle_cap_override.store(cap); }

long cycle_cap_for(const Digraph& g) {
  long ov = g_cycle_cap_override.load();
  if (ov > 0) return ov;
  return 10L * static_cast<long>(g.vertices().size());
}

std::vector<Cycle> enumerate_cycles(const Digraph& g, long cap) {
  if (cap <= 0) cap = cycle_cap_for(g);
  for (int v : g.vertices())
    if (g.degree(v) > 4)
      fail(ErrorKind::invalid,
           "cycle enumeration expects degree <= 4, vertex " + std::to_string(v));

  const std::vector<int>& verts = g.vertices();
  std::map<int, int> idx;
  for (std::size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = static_cast<int>(i);

  std::vector<Cycle> cycles;
  long steps = 0;
  const long step_cap = 4'000'000;

  std::vector<int> path;
  std::set<int> onpath;

  // DFS restricted to vertices with index > root; each cycle is found once,
  // rooted at its smallest-index vertex.
  auto dfs = [&](auto&& self, int root, int u) -> void {
    if (++steps > step_cap)
      fail(ErrorKind::cap, "cycle enumeration step guard exceeded");
    for (int w : g.out(u)) {
      if (w == root) {
        if (path.size() >= 2) {
          cycles.push_back(Cycle{path});
          if (static_cast<long>(cycles.size()) > cap)
            fail(ErrorKind::cap, "cycle cap exceeded (" + std::to_string(cap) + ")");
        }
        continue;
      }
      if (idx.at(w) <= idx.at(root) || onpath.count(w)) continue;
      path.push_back(w);
      onpath.insert(w);
      self(self, root, w);
      path.pop_back();
      onpath.erase(w);
    }
  };

  for (int root : verts) {
    path = {root};
    onpath = {root};
    dfs(dfs, root, root);
  }
  return cycles;
}

bool strongly_connected(const Digraph& g) {
  if (g.vertices().empty()) return false;
  auto reach_all = [&](const Digraph& d) {
    std::set<int> seen{d.vertices().front()};
    std::vector<int> stack{d.vertices().front()};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : d.out(u))
        if (seen.insert(w).second) stack.push_back(w);
    }
    return seen.size() == d.vertices().size();
  };
  return reach_all(g) && reach_all(g.transposed());
}

std::map<int, int> strong_components(const Digraph& g) {
  // Kosaraju: finish order on g, then component sweep on the transpose.
  std::vector<int> order;
  std::set<int> seen;
  for (int start : g.vertices()) {
    if (seen.count(start)) continue;
    // stack entries: (vertex, next out-neighbor index)
    std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
    seen.insert(start);
    while (!stack.empty()) {
      auto& [u, i] = stack.back();
      const std::vector<int>& outs = g.out(u);
      if (i < outs.size()) {
        int w = outs[i++];
        if (seen.insert(w).second) stack.push_back({w, 0});
      } else {
        order.push_back(u);
        stack.pop_back();
      }
    }
  }

  Digraph t = g.transposed();
  std::map<int, int> comp;
  int next = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp.count(*it)) continue;
    int id = next++;
    std::vector<int> stack{*it};
    comp[*it] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : t.out(u))
        if (!comp.count(w)) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
  }
  return comp;
}

bool connected(const Multigraph& m) {
  if (m.vertices().empty()) return false;
  std::set<int> seen{m.vertices().front()};
  std::vector<int> stack{m.vertices().front()};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : m.neighbors(u))
      if (seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == m.vertices().size();
}

bool connected(const Graph& g) {
  if (g.vertices().empty()) return false;
  std::set<int> seen{g.vertices().front()};
  std::vector<int> stack{g.vertices().front()};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u))
      if (seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == g.vertices().size();
}

bool homeomorphic(const Multigraph& a, const Multigraph& b) {
  return multigraph_isomorphism(smooth(a), smooth(b)).has_value();
}

namespace {

struct MgIso {
  const Multigraph& a;
  const Multigraph& b;
  std::map<int, int> fwd;
  std::map<int, int> bwd;

  bool consistent(int v, int w) {
    if (a.degree(v) != b.degree(w)) return false;
    if (a.mult(v, v) != b.mult(w, w)) return false;
    for (const auto& [u, img] : fwd) {
      if (a.mult(v, u) != b.mult(w, img)) return false;
    }
    return true;
  }

  bool extend(std::size_t i) {
    if (i == a.vertices().size()) return true;
    int v = a.vertices()[i];
    for (int w : b.vertices()) {
      if (bwd.count(w)) continue;
      if (!consistent(v, w)) continue;
      fwd[v] = w;
      bwd[w] = v;
      if (extend(i + 1)) return true;
      fwd.erase(v);
      bwd.erase(w);
    }
    return false;
  }
};

}  // namespace

std::optional<std::map<int, int>> multigraph_isomorphism(const Multigraph& a,
                                                         const Multigraph& b,
                                                         int cap) {
  if (a.vertices().size() != b.vertices().size()) return std::nullopt;
  if (static_cast<int>(a.vertices().size()) > cap)
    fail(ErrorKind::cap, "multigraph isomorphism vertex cap exceeded");
  if (a.edge_count() != b.edge_count()) return std::nullopt;
  std::multiset<int> da, db;
  for (int v : a.vertices()) da.insert(a.degree(v));
  for (int v : b.vertices()) db.insert(b.degree(v));
  if (da != db) return std::nullopt;

  MgIso search{a, b, {}, {}};
  if (search.extend(0)) return search.fwd;
  return std::nullopt;
}

}  // namespace mu2

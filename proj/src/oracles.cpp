#include "mu2/oracles.hpp"

#include <algorithm>
#include <set>

#include "mu2/error.hpp"

namespace mu2::oracle {

bool brute_sat(const ClauseSet& f) {
  if (f.has_empty_clause()) return false;
  std::vector<int> vars = f.variables();
  if (vars.size() > 24) fail(ErrorKind::cap, "too many variables to table");
  for (unsigned long mask = 0; mask < (1ul << vars.size()); ++mask) {
    auto truth = [&](int lit) {
      std::size_t i = std::lower_bound(vars.begin(), vars.end(), var_of(lit)) -
                      vars.begin();
      bool pos = (mask >> i) & 1;
      return lit > 0 ? pos : !pos;
    };
    bool all = true;
    for (const Clause& c : f.clauses()) {
      bool any = false;
      for (int lit : c.lits()) any = any || truth(lit);
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

bool dp_sat(const ClauseSet& f) {
  std::vector<Clause> cs(f.clauses().begin(), f.clauses().end());
  while (true) {
    for (const Clause& c : cs)
      if (c.empty()) return false;
    if (cs.empty()) return true;
    int v = var_of(cs.front().lits().front());
    std::vector<Clause> pos, neg, rest;
    for (const Clause& c : cs) {
      if (c.contains(v))
        pos.push_back(c);
      else if (c.contains(-v))
        neg.push_back(c);
      else
        rest.push_back(c);
    }
    std::set<Clause> next(rest.begin(), rest.end());
    for (const Clause& p : pos)
      for (const Clause& q : neg) {
        std::set<int> lits;
        for (int lit : p.lits())
          if (lit != v) lits.insert(lit);
        for (int lit : q.lits())
          if (lit != -v) lits.insert(lit);
        bool taut = false;
        for (int lit : lits) taut = taut || lits.count(-lit);
        if (!taut) next.insert(Clause(std::vector<int>(lits.begin(), lits.end())));
      }
    cs.assign(next.begin(), next.end());
  }
}

bool brute_mu(const ClauseSet& f) {
  if (brute_sat(f)) return false;
  for (const Clause& c : f.clauses())
    if (!brute_sat(f.without(c))) return false;
  return true;
}

std::vector<std::map<int, int>> clause_isomorphisms(const ClauseSet& f,
                                                    const ClauseSet& g) {
  std::vector<std::map<int, int>> out;
  if (f.n() != g.n() || f.c() != g.c()) return out;
  if (f.has_empty_clause() != g.has_empty_clause()) return out;
  std::vector<int> fv = f.variables(), gv = g.variables();
  if (fv.size() > 7) fail(ErrorKind::cap, "too many variables to map");
  DegreeReport df = stats(f), dg = stats(g);
  auto ld = [](const DegreeReport& d, int lit) {
    auto it = d.ldeg.find(lit);
    return it == d.ldeg.end() ? 0 : it->second;
  };
  std::map<int, int> assign;  // variable -> literal image
  std::vector<bool> used(gv.size(), false);
  auto consistent = [&](const ClauseSet& from) {
    // Every fully mapped clause must land inside g.
    for (const Clause& c : from.clauses()) {
      std::vector<int> image;
      bool full = true;
      for (int lit : c.lits()) {
        auto it = assign.find(var_of(lit));
        if (it == assign.end()) {
          full = false;
          break;
        }
        image.push_back(lit > 0 ? it->second : -it->second);
      }
      if (full && !g.contains(Clause(image))) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == fv.size()) {
      std::map<int, int> lm;
      for (const auto& [v, w] : assign) {
        lm[v] = w;
        lm[-v] = -w;
      }
      if (rename(f, lm) == g) out.push_back(lm);
      return;
    }
    int v = fv[i];
    for (std::size_t j = 0; j < gv.size(); ++j) {
      if (used[j]) continue;
      for (int s : {1, -1}) {
        int w = s * gv[j];
        if (ld(df, v) != ld(dg, w) || ld(df, -v) != ld(dg, -w)) continue;
        assign[v] = w;
        used[j] = true;
        if (consistent(f)) self(self, i + 1);
        assign.erase(v);
        used[j] = false;
      }
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<std::map<int, int>> digraph_isomorphisms(const Digraph& g,
                                                     const Digraph& h) {
  std::vector<std::map<int, int>> out;
  const std::vector<int>& gv = g.vertices();
  const std::vector<int>& hv = h.vertices();
  if (gv.size() != hv.size() || g.arcs().size() != h.arcs().size()) return out;
  if (gv.size() > 16) fail(ErrorKind::cap, "too many vertices to map");
  std::map<int, int> assign;
  std::vector<bool> used(hv.size(), false);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == gv.size()) {
      out.push_back(assign);
      return;
    }
    int v = gv[i];
    for (std::size_t j = 0; j < hv.size(); ++j) {
      if (used[j]) continue;
      int w = hv[j];
      if (g.in_degree(v) != h.in_degree(w) ||
          g.out_degree(v) != h.out_degree(w))
        continue;
      bool ok = true;
      for (const auto& [u, x] : assign) {
        if (g.has_arc(u, v) != h.has_arc(x, w)) ok = false;
        if (g.has_arc(v, u) != h.has_arc(w, x)) ok = false;
        if (!ok) break;
      }
      if (!ok) continue;
      assign[v] = w;
      used[j] = true;
      self(self, i + 1);
      assign.erase(v);
      used[j] = false;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<std::map<int, int>> skew_symmetries(const Digraph& g) {
  std::vector<std::map<int, int>> out;
  const std::vector<int>& vs = g.vertices();
  if (vs.size() > 14) fail(ErrorKind::cap, "too many vertices to pair");
  if (vs.size() % 2 != 0) return out;
  std::map<int, int> s;
  auto arcs_ok = [&]() {
    for (const Arc& a : g.arcs()) {
      auto i = s.find(a.first);
      auto j = s.find(a.second);
      if (i == s.end() || j == s.end()) continue;
      if (!g.has_arc(j->second, i->second)) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self) -> void {
    int v = 0;
    bool found = false;
    for (int u : vs)
      if (!s.count(u)) {
        v = u;
        found = true;
        break;
      }
    if (!found) {
      out.push_back(s);
      return;
    }
    for (int w : vs) {
      if (w == v || s.count(w)) continue;
      s[v] = w;
      s[w] = v;
      if (arcs_ok()) self(self);
      s.erase(v);
      s.erase(w);
    }
  };
  rec(rec);
  return out;
}

}  // namespace mu2::oracle

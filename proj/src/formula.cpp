#include "mu2/formula.hpp"

#include <algorithm>
#include <set>

namespace mu2 {

namespace {

std::vector<int> normalize_lits(std::vector<int> lits) {
  std::sort(lits.begin(), lits.end(), lit_less);
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (int l : lits) {
    if (l == 0) fail(ErrorKind::invalid, "literal 0 in clause");
  }
  for (std::size_t i = 1; i < lits.size(); ++i) {
    if (var_of(lits[i]) == var_of(lits[i - 1]))
      fail(ErrorKind::invalid, "clashing clause: contains " +
                                   std::to_string(lits[i - 1]) + " and " +
                                   std::to_string(lits[i]));
  }
  return lits;
}

}  // namespace

Clause::Clause(std::initializer_list<int> lits)
    : lits_(normalize_lits(std::vector<int>(lits))) {}

Clause::Clause(const std::vector<int>& lits) : lits_(normalize_lits(lits)) {}

bool Clause::contains(int lit) const {
  return std::find(lits_.begin(), lits_.end(), lit) != lits_.end();
}

int Clause::other(int lit) const {
  if (!binary() || !contains(lit))
    fail(ErrorKind::invalid, "other() needs a binary clause containing the literal");
  return lits_[0] == lit ? lits_[1] : lits_[0];
}

bool operator<(const Clause& a, const Clause& b) {
  return std::lexicographical_compare(a.lits_.begin(), a.lits_.end(),
                                      b.lits_.begin(), b.lits_.end(), lit_less);
}

ClauseSet::ClauseSet(std::initializer_list<Clause> clauses)
    : ClauseSet(std::vector<Clause>(clauses)) {}

ClauseSet::ClauseSet(const std::vector<Clause>& clauses) : clauses_(clauses) {
  std::sort(clauses_.begin(), clauses_.end());
  clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
}

bool ClauseSet::contains(const Clause& c) const {
  return std::binary_search(clauses_.begin(), clauses_.end(), c);
}

bool ClauseSet::has_empty_clause() const {
  return !clauses_.empty() && clauses_.front().empty();
}

std::vector<int> ClauseSet::variables() const {
  std::set<int> vars;
  for (const Clause& c : clauses_)
    for (int l : c.lits()) vars.insert(var_of(l));
  return std::vector<int>(vars.begin(), vars.end());
}

std::vector<int> ClauseSet::literals() const {
  std::vector<int> lits;
  for (int v : variables()) {
    lits.push_back(-v);
    lits.push_back(v);
  }
  std::sort(lits.begin(), lits.end());
  return lits;
}

int ClauseSet::n() const { return static_cast<int>(variables().size()); }

int ClauseSet::c() const { return static_cast<int>(clauses_.size()); }

int ClauseSet::max_var() const {
  int m = 0;
  for (const Clause& c : clauses_)
    for (int l : c.lits()) m = std::max(m, var_of(l));
  return m;
}

ClauseSet ClauseSet::without(const Clause& c) const {
  std::vector<Clause> rest;
  for (const Clause& d : clauses_)
    if (!(d == c)) rest.push_back(d);
  return ClauseSet(rest);
}

ClauseSet ClauseSet::with(const Clause& c) const {
  std::vector<Clause> all = clauses_;
  all.push_back(c);
  return ClauseSet(all);
}

DegreeReport stats(const ClauseSet& f) {
  DegreeReport r;
  r.n = f.n();
  r.c = f.c();
  r.deficiency = r.c - r.n;
  for (int l : f.literals()) r.ldeg[l] = 0;
  for (const Clause& c : f.clauses()) {
    if (c.unit()) ++r.unit_clauses;
    for (int l : c.lits()) ++r.ldeg[l];
  }
  for (int v : f.variables()) r.vdeg[v] = r.ldeg[v] + r.ldeg[-v];
  return r;
}

ClauseSet rename(const ClauseSet& f, const std::map<int, int>& lit_map) {
  std::set<int> image;
  for (int l : f.literals()) {
    auto it = lit_map.find(l);
    if (it == lit_map.end())
      fail(ErrorKind::invalid, "renaming undefined on literal " + std::to_string(l));
    if (it->second == 0)
      fail(ErrorKind::invalid, "renaming maps a literal to 0");
    auto neg = lit_map.find(-l);
    if (neg == lit_map.end() || neg->second != -it->second)
      fail(ErrorKind::invalid, "renaming is not complement-preserving at " +
                                   std::to_string(l));
    if (!image.insert(it->second).second)
      fail(ErrorKind::invalid, "renaming is not injective");
  }
  std::vector<Clause> mapped;
  for (const Clause& c : f.clauses()) {
    std::vector<int> lits;
    for (int l : c.lits()) lits.push_back(lit_map.at(l));
    mapped.push_back(Clause(lits));
  }
  ClauseSet g(mapped);
  if (g.size() != f.size())
    fail(ErrorKind::invalid, "renaming collapses distinct clauses");
  return g;
}

std::map<int, int> lit_map_of_var_map(const ClauseSet& f,
                                      const std::map<int, int>& var_map) {
  std::map<int, int> m;
  for (int v : f.variables()) {
    auto it = var_map.find(v);
    if (it == var_map.end())
      fail(ErrorKind::invalid, "variable map undefined on " + std::to_string(v));
    m[v] = it->second;
    m[-v] = -it->second;
  }
  return m;
}

}  // namespace mu2

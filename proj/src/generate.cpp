#include "mu2/generate.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "mu2/classify.hpp"
#include "mu2/error.hpp"
#include "mu2/implication.hpp"

namespace mu2 {

ClauseSet bpt(int k) {
  if (k < 2) fail(ErrorKind::invalid, "bpt needs deficiency at least 2");
  std::vector<Clause> cs;
  for (int j = 1; j < k; ++j) {
    cs.push_back(Clause({-j, j + 1}));
    cs.push_back(Clause({j, -(j + 1)}));
  }
  cs.push_back(Clause({1, k}));
  cs.push_back(Clause({-1, -k}));
  return ClauseSet(cs);
}

namespace {

void require_fresh_var(const ClauseSet& f, int v) {
  if (v < 1) fail(ErrorKind::invalid, "fresh variable must be positive");
  std::vector<int> vars = f.variables();
  if (std::binary_search(vars.begin(), vars.end(), v))
    fail(ErrorKind::invalid, "extension variable already occurs");
}

}  // namespace

ClauseSet extend_1singular(const ClauseSet& f, int x, int y, int v) {
  require_fresh_var(f, v);
  Clause c({x, y});
  if (!c.binary() || !f.contains(c))
    fail(ErrorKind::invalid, "clause to subdivide is not in the formula");
  ClauseSet g = f.without(c);
  g = g.with(Clause({v, x}));
  g = g.with(Clause({-v, y}));
  return g;
}

ClauseSet extend_2singular(const ClauseSet& f, int x, int y) {
  if (y == 0) fail(ErrorKind::invalid, "fresh literal must be nonzero");
  require_fresh_var(f, var_of(y));
  std::vector<Clause> holders;
  for (const Clause& c : f.clauses())
    if (c.contains(x)) holders.push_back(c);
  DegreeReport dr = stats(f);
  auto deg = [&](int lit) {
    auto it = dr.ldeg.find(lit);
    return it == dr.ldeg.end() ? 0 : it->second;
  };
  if (deg(x) != 2 || deg(-x) != 2)
    fail(ErrorKind::invalid, "split literal must occur twice in each sign");
  if (holders.size() != 2 || !holders[0].binary() || !holders[1].binary())
    fail(ErrorKind::invalid, "split literal must sit in two binary clauses");
  int a = holders[0].other(x);
  int b = holders[1].other(x);
  ClauseSet g = f.without(holders[0]).without(holders[1]);
  g = g.with(Clause({y, x}));
  g = g.with(Clause({-y, a}));
  g = g.with(Clause({-y, b}));
  return g;
}

std::vector<ClauseSet> enumerate_2mu(int k, int n, bool force) {
  if (k < 2) fail(ErrorKind::invalid, "deficiency must be at least 2");
  if (n < 0) fail(ErrorKind::invalid, "variable count must be nonnegative");
  int cap = k == 2 ? 14 : (k == 3 ? 10 : 2 * k + 2);
  if (n > cap && !force)
    fail(ErrorKind::cap, "variable count beyond the default enumeration range");
  if (n < k) return {};

  // First stage: split degree-4 variables while any remain.
  std::set<ClauseSet> found;
  std::deque<ClauseSet> work;
  ClauseSet base = canon(bpt(k));
  found.insert(base);
  work.push_back(base);
  while (!work.empty()) {
    ClauseSet f = work.front();
    work.pop_front();
    if (f.n() >= n) continue;
    DegreeReport dr = stats(f);
    for (const auto& [lit, d] : dr.ldeg) {
      if (d != 2) continue;
      auto it = dr.ldeg.find(-lit);
      if (it == dr.ldeg.end() || it->second != 2) continue;
      ClauseSet g = canon(extend_2singular(f, lit, f.max_var() + 1));
      if (found.insert(g).second) work.push_back(g);
    }
  }

  // Second stage: subdivide clauses until the variable count is reached.
  work.assign(found.begin(), found.end());
  while (!work.empty()) {
    ClauseSet f = work.front();
    work.pop_front();
    if (f.n() >= n) continue;
    for (const Clause& c : f.clauses()) {
      if (!c.binary()) continue;
      int a = c.lits()[0];
      int b = c.lits()[1];
      int v = f.max_var() + 1;
      for (const ClauseSet& g :
           {extend_1singular(f, a, b, v), extend_1singular(f, b, a, v)}) {
        ClauseSet cg = canon(g);
        if (found.insert(cg).second) work.push_back(cg);
      }
    }
  }

  std::vector<ClauseSet> out;
  for (const ClauseSet& f : found)
    if (f.n() == n) out.push_back(f);
  return out;
}

long count_2mu(int k, int n, bool force) {
  return static_cast<long>(enumerate_2mu(k, n, force).size());
}

std::vector<ClauseSet> enumerate_d1(int n) {
  if (n < 0) fail(ErrorKind::invalid, "variable count must be nonnegative");
  std::vector<ClauseSet> out;
  if (n == 0) {
    out.push_back(ClauseSet({Clause(std::vector<int>{})}));
    return out;
  }
  out.push_back(build_ufamily(D1Class{D1Kind::u2, n, 0, 0, 0, {}}));
  for (int i = 1; i < n; ++i)
    out.push_back(build_ufamily(D1Class{D1Kind::u1, n, i, 0, 0, {}}));
  for (int i = 2; 2 * i <= n + 1; ++i)
    out.push_back(build_ufamily(D1Class{D1Kind::u0, n, 0, i, i, {}}));
  for (int x = 2; x < n - 1; ++x)
    for (int y = x + 1; y <= n - 1 && x + y <= n + 1; ++y)
      out.push_back(build_ufamily(D1Class{D1Kind::u0, n, 0, x, y, {}}));
  std::sort(out.begin(), out.end());
  return out;
}

long count_d1(int n) {
  if (n < 0) fail(ErrorKind::invalid, "variable count must be nonnegative");
  if (n == 0) return 1;
  long m = n;
  return m % 2 == 0 ? m * (m + 2) / 4 : (m + 1) * (m + 1) / 4;
}

std::vector<ClauseSet> generate_d1_rules(int n) {
  if (n < 0) fail(ErrorKind::invalid, "variable count must be nonnegative");
  if (n > 12) fail(ErrorKind::cap, "rule closure beyond the supported range");
  std::vector<ClauseSet> out;
  if (n == 0) {
    out.push_back(ClauseSet({Clause(std::vector<int>{})}));
    return out;
  }
  std::vector<ClauseSet> seeds = {
      ClauseSet({Clause({1}), Clause({-1})}),
      ClauseSet({Clause({1, 2}), Clause({-2}), Clause({-1})}),
      ClauseSet({Clause({1, 2}), Clause({1, -2}), Clause({-1})}),
      ClauseSet({Clause({1, 2}), Clause({-2, 3}), Clause({-2, -3}),
                 Clause({-1})}),
      ClauseSet({Clause({1, 2}), Clause({1, -2}), Clause({-1, 3}),
                 Clause({-1, -3})}),
      ClauseSet({Clause({1, 2}), Clause({-2, 3}), Clause({-2, -3}),
                 Clause({-1, 4}), Clause({-1, -4})}),
  };
  // Subdivision commutes with renaming, so searching over one canonical
  // representative per class keeps the closure small.
  std::set<ClauseSet> found;
  std::deque<ClauseSet> work;
  for (const ClauseSet& s : seeds) {
    if (s.n() > n) continue;
    ClauseSet cs = canon(s);
    if (found.insert(cs).second) work.push_back(cs);
  }
  while (!work.empty()) {
    ClauseSet f = work.front();
    work.pop_front();
    if (f.n() >= n) continue;
    for (const Clause& c : f.clauses()) {
      if (!c.binary()) continue;
      int a = c.lits()[0];
      int b = c.lits()[1];
      int v = f.max_var() + 1;
      for (const ClauseSet& g :
           {extend_1singular(f, a, b, v), extend_1singular(f, b, a, v)}) {
        ClauseSet cg = canon(g);
        if (found.insert(cg).second) work.push_back(cg);
      }
    }
  }
  for (const ClauseSet& f : found)
    if (f.n() == n) out.push_back(f);
  return out;
}

GenerationTrace trace_of(const ClauseSet& f) {
  if (f.deficiency() < 2)
    fail(ErrorKind::invalid, "traces need deficiency at least 2");
  Reduction red = singular_dp_to_nonsingular(f);
  GenerationTrace t;
  t.k = f.deficiency();
  t.base = red.result;
  if (canon(t.base) != canon(bpt(t.k)))
    fail(ErrorKind::logic, "nonsingular reduct is not the expected base");
  for (auto it = red.steps.rbegin(); it != red.steps.rend(); ++it) {
    const ReductionStep& st = *it;
    GenerationStep step;
    if (st.removed.size() == 2) {
      for (const Clause& c : st.removed.clauses()) {
        if (c.contains(st.var))
          step.x = c.other(st.var);
        else
          step.y = c.other(-st.var);
      }
      step.v = st.var;
    } else if (st.removed.size() == 3) {
      step.two_singular = true;
      std::vector<Clause> pos, neg;
      for (const Clause& c : st.removed.clauses())
        (c.contains(st.var) ? pos : neg).push_back(c);
      if (pos.empty() || neg.empty())
        fail(ErrorKind::logic, "eliminated variable lost a sign");
      const Clause& lone = pos.size() == 1 ? pos[0] : neg[0];
      step.x = lone.other(pos.size() == 1 ? st.var : -st.var);
      step.y = pos.size() == 1 ? st.var : -st.var;
    } else {
      fail(ErrorKind::logic, "unexpected reduction step shape");
    }
    t.steps.push_back(step);
  }
  return t;
}

ClauseSet replay(const GenerationTrace& t) {
  ClauseSet cur = t.base;
  bool subdividing = false;
  for (const GenerationStep& st : t.steps) {
    if (st.two_singular) {
      if (subdividing)
        fail(ErrorKind::invalid, "variable splits must precede subdivisions");
      cur = extend_2singular(cur, st.x, st.y);
    } else {
      subdividing = true;
      cur = extend_1singular(cur, st.x, st.y, st.v);
    }
  }
  return cur;
}

}  // namespace mu2

// Acceptance suite: one self-contained check per release criterion, each
// printed as a single pass/fail line with its runtime.  Checks lean on the
// brute-force oracles wherever an independent route exists.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mu2/classify.hpp"
#include "mu2/error.hpp"
#include "mu2/formula.hpp"
#include "mu2/generate.hpp"
#include "mu2/graphs.hpp"
#include "mu2/implication.hpp"
#include "mu2/oracles.hpp"
#include "mu2/wdc.hpp"

using namespace mu2;

namespace {

using Map = std::map<int, int>;

ClauseSet running_example() {
  return ClauseSet{Clause{1, -5}, Clause{3, 5},  Clause{-1, 4},
                   Clause{-4, 6}, Clause{-6, 2}, Clause{-2, 3},
                   Clause{-1, -3}, Clause{1, -2}, Clause{-3, 4}};
}

ClauseSet running_example_core() {
  return ClauseSet{Clause{1, 3},  Clause{-1, 4}, Clause{2, -4}, Clause{-2, 3},
                   Clause{-1, -3}, Clause{1, -2}, Clause{-3, 4}};
}

Map random_renaming(const ClauseSet& f, std::mt19937& rng) {
  std::vector<int> vars = f.variables();
  std::vector<int> perm = vars;
  std::shuffle(perm.begin(), perm.end(), rng);
  Map m;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    int img = (rng() % 2) ? perm[i] : -perm[i];
    m[vars[i]] = img;
    m[-vars[i]] = -img;
  }
  return m;
}

Digraph directed_cycle(int n) {
  std::vector<int> vs;
  std::vector<Arc> as;
  for (int i = 1; i <= n; ++i) {
    vs.push_back(i);
    as.push_back({i, i % n + 1});
  }
  return Digraph(vs, as);
}

// enumerate_2mu over a range of variable counts, flattened
std::vector<ClauseSet> pool_2mu(int k, int n_lo, int n_hi) {
  std::vector<ClauseSet> out;
  for (int n = n_lo; n <= n_hi; ++n)
    for (const ClauseSet& f : enumerate_2mu(k, n)) out.push_back(f);
  return out;
}

ClauseSet u2_family(int n) {
  return build_ufamily(D1Class{D1Kind::u2, n, 0, 0, 0, {}});
}

bool fail_with(std::string& detail, const std::string& msg) {
  if (detail.empty()) detail = msg;
  return false;
}

// ---------------------------------------------------------------------------

// |enumerate_d1(n)| agrees with the closed formula and with the published
// census values 1,2,4,6,9,12,16,20,25,30,36,42 for n = 1..12.
bool c01_census(std::string& detail) {
  const long table[] = {1, 2, 4, 6, 9, 12, 16, 20, 25, 30, 36, 42};
  for (int n = 1; n <= 12; ++n) {
    long want = table[n - 1];
    if (count_d1(n) != want)
      return fail_with(detail, "count_d1(" + std::to_string(n) + ") off");
    if (static_cast<long>(enumerate_d1(n).size()) != want)
      return fail_with(detail, "enumerate_d1(" + std::to_string(n) + ") off");
  }
  return true;
}

// The subdivision-rule closure reaches exactly the counted classes.
bool c02_rules(std::string& detail) {
  for (int n = 0; n <= 10; ++n) {
    std::vector<ClauseSet> grown = generate_d1_rules(n);
    std::set<ClauseSet> classes;
    for (const ClauseSet& f : grown) classes.insert(canon(f));
    if (static_cast<long>(classes.size()) != count_d1(n))
      return fail_with(detail, "closure count off at n=" + std::to_string(n));
    if (n > 6) continue;
    // independent deduplication by exhaustive isomorphism search
    std::vector<ClauseSet> reps;
    for (const ClauseSet& f : grown) {
      bool fresh = true;
      for (const ClauseSet& r : reps)
        if (!oracle::clause_isomorphisms(r, f).empty()) {
          fresh = false;
          break;
        }
      if (fresh) reps.push_back(f);
    }
    if (static_cast<long>(reps.size()) != count_d1(n))
      return fail_with(detail, "brute dedup off at n=" + std::to_string(n));
  }
  return true;
}

// Bracelet class counts: published values for m = 3, 4; exhaustive string
// orbits as the independent route for every m up to 6.
bool c03_bracelets(std::string& detail) {
  if (enumerate_bracelets(3).size() != 4)
    return fail_with(detail, "m=3 count off");
  if (enumerate_bracelets(4).size() != 6)
    return fail_with(detail, "m=4 count off");
  const std::size_t derived[] = {2, 3, 4, 6, 8, 13};
  for (int m = 1; m <= 6; ++m) {
    std::set<std::string> orbits;
    for (int x = 0; x < (1 << m); ++x) {
      std::string s(m, '0');
      for (int i = 0; i < m; ++i)
        if (x & (1 << i)) s[i] = '1';
      std::string best = s;
      std::string r = s;
      for (int rot = 0; rot < m; ++rot) {
        std::rotate(r.begin(), r.begin() + 1, r.end());
        best = std::min(best, r);
        std::string rev(r.rbegin(), r.rend());
        best = std::min(best, rev);
      }
      orbits.insert(best);
    }
    if (orbits.size() != derived[m - 1])
      return fail_with(detail, "orbit count off at m=" + std::to_string(m));
    std::vector<std::string> got = enumerate_bracelets(m);
    if (std::set<std::string>(got.begin(), got.end()) != orbits)
      return fail_with(detail, "class set off at m=" + std::to_string(m));
  }
  return true;
}

// The overlap fingerprints realized by the deficiency-k enumerations cover
// exactly the length-k bracelet classes (k = 2 over n <= 8, k = 3 over
// n <= 9).
bool c04_coverage(std::string& detail) {
  struct Range {
    int k, n_hi;
  } ranges[] = {{2, 8}, {3, 9}};
  for (const Range& r : ranges) {
    std::set<std::string> realized;
    for (const ClauseSet& f : pool_2mu(r.k, r.k, r.n_hi))
      realized.insert(homeo_fingerprint(f));
    std::vector<std::string> all = enumerate_bracelets(r.k);
    if (realized != std::set<std::string>(all.begin(), all.end()))
      return fail_with(detail,
                       "fingerprint coverage off for k=" + std::to_string(r.k));
  }
  return true;
}

// Every enumerated formula's implication digraph has exactly one unit-free
// skew-symmetry (by exhaustive search), the natural complementation.
bool c05_unique_skew(std::string& detail) {
  std::vector<ClauseSet> pool = pool_2mu(2, 2, 6);
  for (const ClauseSet& f : pool_2mu(3, 3, 7)) pool.push_back(f);
  for (const ClauseSet& f : pool) {
    Digraph g = build_idg(f);
    int unit_free = 0;
    bool natural_seen = false;
    for (const Map& s : oracle::skew_symmetries(g)) {
      if (!is_unit_free(g, s)) continue;
      ++unit_free;
      if (s == natural_skew(f)) natural_seen = true;
    }
    if (unit_free != 1 || !natural_seen)
      return fail_with(detail, "skew count " + std::to_string(unit_free) +
                                   " on an n=" + std::to_string(f.n()) +
                                   " instance");
  }
  return true;
}

// Directed cycles: no skew-symmetry for odd length, n/2 for even length,
// and every even-length reconstruction is the two-unit chain on n/2
// variables.
bool c06_cycle_skews(std::string& detail) {
  for (int n = 3; n <= 11; n += 2)
    if (!oracle::skew_symmetries(directed_cycle(n)).empty())
      return fail_with(detail, "odd cycle n=" + std::to_string(n));
  for (int n = 4; n <= 12; n += 2) {
    Digraph c = directed_cycle(n);
    std::vector<Map> skews = oracle::skew_symmetries(c);
    if (skews.size() != static_cast<std::size_t>(n / 2))
      return fail_with(detail, "even cycle n=" + std::to_string(n));
    for (const Map& s : skews) {
      ClauseSet back = clause_set_of(c, s);
      if (oracle::clause_isomorphisms(back, u2_family(n / 2)).empty())
        return fail_with(detail,
                         "reconstruction off at n=" + std::to_string(n));
    }
  }
  return true;
}

// For deficiency >= 2, clause-set isomorphisms, implication-digraph
// isomorphisms, and the dihedral search coincide as sets of maps.
bool c07_iso_transfer(std::string& detail) {
  std::vector<ClauseSet> pool = pool_2mu(2, 4, 7);
  for (const ClauseSet& f : pool_2mu(3, 5, 7)) pool.push_back(f);
  std::mt19937 rng(20250823);
  for (int t = 0; t < 25; ++t) {
    const ClauseSet& f = pool[rng() % pool.size()];
    // odd rounds pair f with a scrambled copy of itself, even rounds with
    // some pool member over the same variables
    const ClauseSet& base = t % 2 == 1 ? f : pool[rng() % pool.size()];
    if (base.n() != f.n()) {
      --t;
      continue;
    }
    ClauseSet g = rename(base, random_renaming(base, rng));
    std::set<Map> from_clauses;
    for (const Map& m : oracle::clause_isomorphisms(f, g))
      from_clauses.insert(m);
    std::set<Map> from_digraphs;
    for (const Map& m :
         oracle::digraph_isomorphisms(build_idg(f), build_idg(g)))
      from_digraphs.insert(m);
    std::set<Map> from_dihedral;
    for (const Map& m : wdc_isomorphisms(build_idg(f), build_idg(g)))
      from_dihedral.insert(m);
    if (from_clauses != from_digraphs || from_clauses != from_dihedral)
      return fail_with(detail, "map sets differ on pair " + std::to_string(t));
    if (t % 2 == 1 && from_clauses.empty())
      return fail_with(detail, "renamed pair lost its isomorphisms");
  }
  return true;
}

// Canonical forms induce the same partition as exhaustive isomorphism
// search.
bool c08_canon_partition(std::string& detail) {
  std::vector<ClauseSet> pool = pool_2mu(2, 2, 6);
  for (int n = 0; n <= 5; ++n)
    for (const ClauseSet& f : enumerate_d1(n)) pool.push_back(f);
  std::mt19937 rng(11);
  std::vector<ClauseSet> canons;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    canons.push_back(canon(pool[i]));
    if (canon(rename(pool[i], random_renaming(pool[i], rng))) != canons[i])
      return fail_with(detail, "canon not renaming-invariant");
  }
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      bool same_canon = canons[i] == canons[j];
      bool brute_iso =
          !oracle::clause_isomorphisms(pool[i], pool[j]).empty();
      if (same_canon != brute_iso)
        return fail_with(detail, "partition mismatch at pair (" +
                                     std::to_string(i) + "," +
                                     std::to_string(j) + ")");
    }
  return true;
}

// Automorphism groups are genuine groups of order at most 4k, attained by
// the nonsingular base formula.
bool c09_aut_bound(std::string& detail) {
  struct Range {
    int k, n_lo, n_hi;
  } ranges[] = {{2, 2, 6}, {3, 3, 7}};
  for (const Range& r : ranges) {
    for (const ClauseSet& f : pool_2mu(r.k, r.n_lo, r.n_hi)) {
      AutomorphismGroup g = automorphism_group(f);
      if (g.order() < 1 || g.order() > 4 * r.k)
        return fail_with(detail, "order " + std::to_string(g.order()) +
                                     " outside [1, 4k] at k=" +
                                     std::to_string(r.k));
      std::set<Map> members(g.elements.begin(), g.elements.end());
      Map identity;
      for (int v : f.variables()) {
        identity[v] = v;
        identity[-v] = -v;
      }
      if (!members.count(identity))
        return fail_with(detail, "identity missing");
      for (const Map& a : g.elements) {
        Map inverse;
        for (const auto& [l, img] : a) inverse[img] = l;
        if (!members.count(inverse)) return fail_with(detail, "inverse missing");
        for (const Map& b : g.elements) {
          Map composed;
          for (const auto& [l, img] : a) composed[l] = b.at(img);
          if (!members.count(composed))
            return fail_with(detail, "composition escapes the group");
        }
      }
    }
    long base = automorphism_group(bpt(r.k)).order();
    if (base != 4 * r.k)
      return fail_with(detail, "base order " + std::to_string(base) +
                                   " at k=" + std::to_string(r.k));
  }
  return true;
}

// Implication digraphs of deficiency-k formulas have exactly 2k+2 directed
// cycles.
bool c10_cycle_count(std::string& detail) {
  struct Range {
    int k, n_lo, n_hi;
  } ranges[] = {{2, 2, 6}, {3, 3, 7}};
  for (const Range& r : ranges)
    for (const ClauseSet& f : pool_2mu(r.k, r.n_lo, r.n_hi)) {
      std::size_t cycles = enumerate_cycles(build_idg(f)).size();
      if (cycles != static_cast<std::size_t>(2 * r.k + 2))
        return fail_with(detail, std::to_string(cycles) + " cycles at k=" +
                                     std::to_string(r.k));
    }
  return true;
}

// The nine-clause worked example: deficiency 3, linear vertices 5,-5,6,-6,
// the listed seven-clause reduct, a nonsingular target isomorphic to
// bpt(3), and overlap pattern equivalent to 100100.
bool c11_worked_example(std::string& detail) {
  ClauseSet f = running_example();
  if (classify(f).deficiency != 3) return fail_with(detail, "deficiency off");

  Digraph g = build_idg(f);
  std::vector<int> lin = linear_vertices(g);
  if (std::set<int>(lin.begin(), lin.end()) != std::set<int>{-6, -5, 5, 6})
    return fail_with(detail, "linear vertices off");

  if (one_singular_fixpoint(f) != running_example_core())
    return fail_with(detail, "degree-2 reduct off");

  ClauseSet target = singular_dp_to_nonsingular(f).result;
  if (!are_isomorphic(target, bpt(3)) ||
      oracle::clause_isomorphisms(target, bpt(3)).empty())
    return fail_with(detail, "nonsingular target off");

  std::optional<WdcStructure> s = recognize_wdc(g);
  if (!s || s->m != 6) return fail_with(detail, "structure off");
  std::string bits;
  for (const WdcCycle& c : s->cycles)
    bits.push_back(c.overlap_next.size() >= 2 ? '1' : '0');
  if (bracelet_canon(bits) != bracelet_canon("100100"))
    return fail_with(detail, "bracelet " + bits);
  return true;
}

// The companion pair: a satisfiable and an unsatisfiable clause-set with
// isomorphic implication digraphs, and the eight complementations of two
// disjoint 4-cycles falling into exactly two types.
bool c12_companion_examples(std::string& detail) {
  ClauseSet f{Clause{-1, 2}, Clause{-2, 3}, Clause{-3, 4}, Clause{1, -4}};
  ClauseSet fp{Clause{-1}, Clause{1, 2},  Clause{-2},
               Clause{-3}, Clause{3, 4}, Clause{-4}};
  if (!is_satisfiable(f) || is_satisfiable(fp))
    return fail_with(detail, "satisfiability off");
  if (!oracle::clause_isomorphisms(f, fp).empty())
    return fail_with(detail, "clause-sets should differ");
  if (oracle::digraph_isomorphisms(build_idg(f), build_idg(fp)).empty())
    return fail_with(detail, "digraphs should agree");

  std::vector<int> vs;
  std::vector<Arc> as;
  for (int i = 0; i < 8; ++i) vs.push_back(i + 1);
  for (int i = 0; i < 4; ++i) {
    as.push_back({i + 1, (i + 1) % 4 + 1});
    as.push_back({i + 5, (i + 1) % 4 + 5});
  }
  Digraph g(vs, as);
  std::vector<Map> skews = oracle::skew_symmetries(g);
  if (skews.size() != 8)
    return fail_with(detail, std::to_string(skews.size()) + " skews");

  // type = the conjugacy class under the digraph's automorphisms
  std::vector<Map> autos = oracle::digraph_isomorphisms(g, g);
  std::set<Map> unseen(skews.begin(), skews.end());
  int types = 0;
  std::vector<std::set<Map>> orbits;
  while (!unseen.empty()) {
    Map rep = *unseen.begin();
    std::set<Map> orbit;
    for (const Map& h : autos) {
      Map inv;
      for (const auto& [v, img] : h) inv[img] = v;
      Map conj;
      for (const auto& [v, img] : rep) conj[h.at(v)] = h.at(img);
      orbit.insert(conj);
    }
    for (const Map& s : orbit) unseen.erase(s);
    orbits.push_back(orbit);
    ++types;
  }
  if (types != 2) return fail_with(detail, std::to_string(types) + " types");

  // the two types reconstruct the two clause-sets, four skews each
  int like_f = 0, like_fp = 0;
  for (const Map& s : skews) {
    ClauseSet back = clause_set_of(g, s);
    bool eq_f = !oracle::clause_isomorphisms(back, f).empty();
    bool eq_fp = !oracle::clause_isomorphisms(back, fp).empty();
    if (eq_f == eq_fp) return fail_with(detail, "reconstruction ambiguous");
    (eq_f ? like_f : like_fp) += 1;
  }
  if (like_f != 4 || like_fp != 4)
    return fail_with(detail, "reconstruction split off");
  for (const std::set<Map>& orbit : orbits) {
    std::set<bool> kinds;
    for (const Map& s : orbit)
      kinds.insert(!oracle::clause_isomorphisms(clause_set_of(g, s), f).empty());
    if (kinds.size() != 1)
      return fail_with(detail, "orbit mixes reconstruction types");
  }
  return true;
}

// Regression golden for the deficiency-2 class counts, frozen after the
// exhaustive cross-checks at small n; the sequence must stay monotone.
bool c13_count_table(std::string& detail) {
  const long table[] = {1,   2,   6,   12,  25,  44, 77,
                        124, 196, 294, 433, 616, 862};
  long prev = 0;
  for (int n = 2; n <= 14; ++n) {
    long got = count_2mu(2, n);
    if (got != table[n - 2])
      return fail_with(detail, "count " + std::to_string(got) + " at n=" +
                                   std::to_string(n));
    if (got < prev) return fail_with(detail, "not monotone");
    prev = got;
  }
  return true;
}

struct Criterion {
  const char* label;
  double budget_s;  // 0 = no bound
  bool (*run)(std::string&);
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"deficiency-1 census", 10, c01_census},
      {"rule-closure cross-check", 30, c02_rules},
      {"bracelet class counts", 1, c03_bracelets},
      {"fingerprint coverage", 120, c04_coverage},
      {"unique unit-free skew", 300, c05_unique_skew},
      {"directed-cycle skews", 60, c06_cycle_skews},
      {"isomorphism transfer", 300, c07_iso_transfer},
      {"canonical partition", 300, c08_canon_partition},
      {"automorphism bound", 60, c09_aut_bound},
      {"implication cycle count", 60, c10_cycle_count},
      {"worked example", 1, c11_worked_example},
      {"companion examples", 10, c12_companion_examples},
      {"class-count regression", 0, c13_count_table},
  };

  int failures = 0;
  int id = 0;
  for (const Criterion& c : criteria) {
    ++id;
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    if (ok && c.budget_s > 0 && secs > c.budget_s) {
      ok = false;
      detail = "over time budget";
    }
    std::printf("criterion %2d %-28s %s %7.2fs%s%s\n", id, c.label,
                ok ? "PASS" : "FAIL", secs, detail.empty() ? "" : "  ",
                detail.c_str());
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "mu2/error.hpp"

namespace mu2 {

// Literals are nonzero integers: +v and -v are the two polarities of
// variable v.  0 is never a literal (DIMACS uses it as a terminator).

inline int var_of(int lit) { return lit < 0 ? -lit : lit; }
inline int complement(int lit) { return -lit; }

// Sort key used for literals inside clauses and for clause comparison:
// variables ascending, negative polarity before positive on the same variable.
inline bool lit_less(int a, int b) {
  if (var_of(a) != var_of(b)) return var_of(a) < var_of(b);
  return a < b;
}

// A clause as a set of literals.  Immutable after construction; literals are
// kept sorted by lit_less and duplicates collapse.  A clause containing both
// x and -x is rejected (clash-free invariant).  The empty clause stands for
// the contradiction.
class Clause {
public:
  Clause() = default;
  Clause(std::initializer_list<int> lits);
  explicit Clause(const std::vector<int>& lits);

  const std::vector<int>& lits() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  bool unit() const { return lits_.size() == 1; }
  bool binary() const { return lits_.size() == 2; }
  bool contains(int lit) const;

  // For binary clauses: the literal other than `lit`.
  int other(int lit) const;

  friend bool operator==(const Clause& a, const Clause& b) {
    return a.lits_ == b.lits_;
  }
  friend bool operator<(const Clause& a, const Clause& b);

private:
  std::vector<int> lits_;
};

// A finite clause-set with set semantics: clauses are kept sorted and
// duplicates collapse silently.  Inputs that must reject duplicates (DIMACS
// files) check before construction.
class ClauseSet {
public:
  ClauseSet() = default;
  ClauseSet(std::initializer_list<Clause> clauses);
  explicit ClauseSet(const std::vector<Clause>& clauses);

  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }
  bool contains(const Clause& c) const;
  bool has_empty_clause() const;

  std::vector<int> variables() const;  // sorted
  std::vector<int> literals() const;   // lit(F): both polarities of every variable, sorted
  int n() const;                       // number of variables
  int c() const;                       // number of clauses
  int deficiency() const { return c() - n(); }
  int max_var() const;

  ClauseSet without(const Clause& c) const;
  ClauseSet with(const Clause& c) const;

  friend bool operator==(const ClauseSet& a, const ClauseSet& b) {
    return a.clauses_ == b.clauses_;
  }
  friend bool operator<(const ClauseSet& a, const ClauseSet& b) {
    return a.clauses_ < b.clauses_;
  }

private:
  std::vector<Clause> clauses_;
};

struct DegreeReport {
  int n = 0;
  int c = 0;
  int deficiency = 0;
  int unit_clauses = 0;
  std::map<int, int> ldeg;  // literal -> occurrence count (both polarities present)
  std::map<int, int> vdeg;  // variable -> ldeg(v) + ldeg(-v)
};

DegreeReport stats(const ClauseSet& f);

// Applies a complement-preserving literal bijection.  `f` must be defined on
// every literal of F, injective, and satisfy f(-x) = -f(x).
ClauseSet rename(const ClauseSet& f, const std::map<int, int>& lit_map);

// Builds a literal map from a variable map with sign: v -> w means v maps to
// literal w (negative w flips polarity).
std::map<int, int> lit_map_of_var_map(const ClauseSet& f,
                                      const std::map<int, int>& var_map);

// DIMACS CNF.  `max_clause_len` 0 means unrestricted; the CLI passes 2 so
// oversized clauses are rejected up front.
ClauseSet parse_dimacs(const std::string& text, int max_clause_len = 0);
std::string write_dimacs(const ClauseSet& f);

}  // namespace mu2

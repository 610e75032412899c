#include <cctype>
#include <set>
#include <sstream>
#include <string>

#include "mu2/formula.hpp"

namespace mu2 {

namespace {

// Strips comment lines and returns the remaining whitespace-separated tokens.
std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  return tokens;
}

long long to_int(const std::string& tok) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    fail(ErrorKind::parse, "not an integer: '" + tok + "'");
  }
  if (pos != tok.size()) fail(ErrorKind::parse, "not an integer: '" + tok + "'");
  return v;
}

}  // namespace

ClauseSet parse_dimacs(const std::string& text, int max_clause_len) {
  std::vector<std::string> toks = tokenize(text);
  std::size_t i = 0;
  if (toks.size() < 4 || toks[0] != "p" || toks[1] != "cnf")
    fail(ErrorKind::parse, "missing or malformed 'p cnf' header");
  long long header_n = to_int(toks[2]);
  long long header_m = to_int(toks[3]);
  if (header_n < 0 || header_m < 0)
    fail(ErrorKind::parse, "negative counts in header");
  i = 4;

  std::vector<Clause> clauses;
  std::vector<int> cur;
  while (i < toks.size() && static_cast<long long>(clauses.size()) < header_m) {
    long long v = to_int(toks[i++]);
    if (v == 0) {
      try {
        clauses.push_back(Clause(cur));
      } catch (const Error&) {
        fail(ErrorKind::parse, "tautological clause in input");
      }
      if (max_clause_len > 0 &&
          clauses.back().size() > static_cast<std::size_t>(max_clause_len))
        fail(ErrorKind::invalid,
             "clause of length " + std::to_string(clauses.back().size()) +
                 " where at most " + std::to_string(max_clause_len) +
                 " literals are supported");
      cur.clear();
      continue;
    }
    if (v > header_n || v < -header_n)
      fail(ErrorKind::parse, "literal " + std::to_string(v) +
                                 " exceeds header variable count");
    cur.push_back(static_cast<int>(v));
  }
  if (!cur.empty())
    fail(ErrorKind::parse, "clause not terminated by 0");
  if (static_cast<long long>(clauses.size()) != header_m)
    fail(ErrorKind::parse, "expected " + std::to_string(header_m) +
                               " clauses, found " +
                               std::to_string(clauses.size()));
  if (i < toks.size())
    fail(ErrorKind::parse, "trailing tokens after last clause");

  std::set<Clause> seen;
  for (const Clause& c : clauses)
    if (!seen.insert(c).second)
      fail(ErrorKind::parse, "duplicate clause in input");
  return ClauseSet(clauses);
}

std::string write_dimacs(const ClauseSet& f) {
  std::ostringstream out;
  out << "p cnf " << f.max_var() << ' ' << f.size() << '\n';
  for (const Clause& c : f.clauses()) {
    for (int l : c.lits()) out << l << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace mu2

#include "mu2.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "mu2/classify.hpp"
#include "mu2/error.hpp"
#include "mu2/formula.hpp"
#include "mu2/generate.hpp"
#include "mu2/graphs.hpp"
#include "mu2/implication.hpp"
#include "mu2/json_records.hpp"
#include "mu2/oracles.hpp"

struct mu2_formula {
  mu2::ClauseSet f;
};

namespace {

thread_local std::string g_error;

int code_of(mu2::ErrorKind k) {
  switch (k) {
    case mu2::ErrorKind::parse:
      return MU2_ERR_PARSE;
    case mu2::ErrorKind::invalid:
      return MU2_ERR_INVALID;
    case mu2::ErrorKind::not_mu:
      return MU2_ERR_NOT_MU;
    case mu2::ErrorKind::cap:
      return MU2_ERR_CAP;
    case mu2::ErrorKind::logic:
      return MU2_ERR_INTERNAL;
  }
  return MU2_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    g_error.clear();
    fn();
    return MU2_OK;
  } catch (const mu2::Error& e) {
    g_error = e.what();
    return code_of(e.kind());
  } catch (const std::exception& e) {
    g_error = e.what();
    return MU2_ERR_INTERNAL;
  }
}

int arg_error(const char* msg) {
  g_error = msg;
  return MU2_ERR_INVALID;
}

}  // namespace

extern "C" {

int mu2_parse(const char* dimacs, mu2_formula** out) {
  if (dimacs == nullptr || out == nullptr) return arg_error("null argument");
  *out = nullptr;
  return guarded([&] {
    mu2::ClauseSet f = mu2::parse_dimacs(dimacs, 2);
    *out = new mu2_formula{f};
  });
}

void mu2_formula_free(mu2_formula* f) { delete f; }

int mu2_check(const mu2_formula* f, char** json_out) {
  if (f == nullptr || json_out == nullptr) return arg_error("null argument");
  *json_out = nullptr;
  return guarded([&] {
    *json_out = dup_string(mu2::check_record(f->f).dump(2));
  });
}

int mu2_classify(const mu2_formula* f, int brute, char** json_out) {
  if (f == nullptr || json_out == nullptr) return arg_error("null argument");
  *json_out = nullptr;
  return guarded([&] {
    mu2::Classification c = mu2::classify(f->f);
    if (brute != 0) {
      if (!mu2::oracle::brute_mu(f->f))
        mu2::fail(mu2::ErrorKind::logic,
                  "brute-force check rejects minimal unsatisfiability");
      if (mu2::oracle::clause_isomorphisms(f->f, c.canonical).empty())
        mu2::fail(mu2::ErrorKind::logic,
                  "brute-force check rejects the canonical form");
      long n = static_cast<long>(
          mu2::oracle::clause_isomorphisms(f->f, f->f).size());
      if (n != c.aut_order)
        mu2::fail(mu2::ErrorKind::logic,
                  "brute-force automorphism count disagrees");
    }
    *json_out = dup_string(mu2::classification_record(c).dump(2));
  });
}

int mu2_canonical(const mu2_formula* f, char** dimacs_out) {
  if (f == nullptr || dimacs_out == nullptr) return arg_error("null argument");
  *dimacs_out = nullptr;
  return guarded([&] {
    *dimacs_out = dup_string(mu2::write_dimacs(mu2::canon(f->f)));
  });
}

int mu2_isomorphic(const mu2_formula* f, const mu2_formula* g, int brute,
                   int* iso_out) {
  if (f == nullptr || g == nullptr || iso_out == nullptr)
    return arg_error("null argument");
  *iso_out = 0;
  return guarded([&] {
    bool iso = mu2::are_isomorphic(f->f, g->f);
    if (brute != 0) {
      bool oracle_iso = !mu2::oracle::clause_isomorphisms(f->f, g->f).empty();
      if (iso != oracle_iso)
        mu2::fail(mu2::ErrorKind::logic,
                  "brute-force isomorphism check disagrees");
    }
    *iso_out = iso ? 1 : 0;
  });
}

int mu2_automorphisms(const mu2_formula* f, int brute, char** json_out) {
  if (f == nullptr || json_out == nullptr) return arg_error("null argument");
  *json_out = nullptr;
  return guarded([&] {
    mu2::AutomorphismGroup g = mu2::automorphism_group(f->f);
    if (brute != 0) {
      long n = static_cast<long>(
          mu2::oracle::clause_isomorphisms(f->f, f->f).size());
      if (n != g.order())
        mu2::fail(mu2::ErrorKind::logic,
                  "brute-force automorphism count disagrees");
    }
    *json_out = dup_string(mu2::automorphism_record(g).dump(2));
  });
}

int mu2_implication_dot(const mu2_formula* f, char** dot_out) {
  if (f == nullptr || dot_out == nullptr) return arg_error("null argument");
  *dot_out = nullptr;
  return guarded([&] {
    *dot_out = dup_string(mu2::to_dot(mu2::build_idg(f->f), "implication"));
  });
}

int mu2_smooth_dot(const mu2_formula* f, char** dot_out) {
  if (f == nullptr || dot_out == nullptr) return arg_error("null argument");
  *dot_out = nullptr;
  return guarded([&] {
    *dot_out =
        dup_string(mu2::to_dot(mu2::smooth(mu2::build_img(f->f)), "smoothed"));
  });
}

int mu2_generate(int k, int n, int force, char** json_out) {
  if (json_out == nullptr) return arg_error("null argument");
  *json_out = nullptr;
  return guarded([&] {
    if (k < 1)
      mu2::fail(mu2::ErrorKind::invalid, "deficiency must be at least 1");
    std::vector<mu2::ClauseSet> fs =
        k == 1 ? mu2::enumerate_d1(n) : mu2::enumerate_2mu(k, n, force != 0);
    *json_out = dup_string(mu2::generation_record(k, n, fs).dump(2));
  });
}

int mu2_count(int k, int n, int force, long* count_out) {
  if (count_out == nullptr) return arg_error("null argument");
  *count_out = 0;
  return guarded([&] {
    if (k < 1)
      mu2::fail(mu2::ErrorKind::invalid, "deficiency must be at least 1");
    *count_out = k == 1 ? mu2::count_d1(n) : mu2::count_2mu(k, n, force != 0);
  });
}

int mu2_count_d1(int n, long* count_out) {
  if (count_out == nullptr) return arg_error("null argument");
  *count_out = 0;
  return guarded([&] { *count_out = mu2::count_d1(n); });
}

const char* mu2_last_error(void) { return g_error.c_str(); }

void mu2_string_free(char* s) { std::free(s); }

void mu2_set_cycle_cap(long cap) { mu2::set_cycle_cap_override(cap); }

}  // extern "C"

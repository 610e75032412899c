#include "mu2/json_records.hpp"

#include <string>

#include "mu2/implication.hpp"

namespace mu2 {

using nlohmann::ordered_json;

ordered_json check_record(const ClauseSet& f) {
  DegreeReport dr = stats(f);
  ordered_json j;
  j["n"] = dr.n;
  j["c"] = dr.c;
  j["deficiency"] = dr.deficiency;
  j["unit_clauses"] = dr.unit_clauses;
  j["satisfiable"] = is_satisfiable(f);
  j["minimally_unsatisfiable"] = is_mu(f);
  ordered_json ld = ordered_json::object();
  for (const auto& [lit, d] : dr.ldeg) ld[std::to_string(lit)] = d;
  j["ldeg"] = ld;
  ordered_json vd = ordered_json::object();
  for (const auto& [v, d] : dr.vdeg) vd[std::to_string(v)] = d;
  j["vdeg"] = vd;
  return j;
}

ordered_json classification_record(const Classification& c) {
  ordered_json j;
  j["deficiency"] = c.deficiency;
  if (c.d1) {
    ordered_json params = ordered_json::object();
    switch (c.d1->kind) {
      case D1Kind::bottom:
        j["family"] = "bottom";
        break;
      case D1Kind::u2:
        j["family"] = "U2";
        params["n"] = c.d1->n;
        break;
      case D1Kind::u1:
        j["family"] = "U1";
        params["n"] = c.d1->n;
        params["i"] = c.d1->i;
        break;
      case D1Kind::u0:
        j["family"] = "U0";
        params["n"] = c.d1->n;
        params["x"] = c.d1->x;
        params["y"] = c.d1->y;
        break;
    }
    if (!params.empty()) j["params"] = params;
  }
  if (c.bracelet) j["bracelet"] = *c.bracelet;
  j["aut_order"] = c.aut_order;
  j["canonical_dimacs"] = write_dimacs(c.canonical);
  return j;
}

ordered_json automorphism_record(const AutomorphismGroup& g) {
  ordered_json j;
  j["order"] = g.order();
  ordered_json elems = ordered_json::array();
  for (const auto& m : g.elements) {
    ordered_json e = ordered_json::object();
    for (const auto& [lit, image] : m) e[std::to_string(lit)] = image;
    elems.push_back(e);
  }
  j["elements"] = elems;
  return j;
}

ordered_json generation_record(int k, int n,
                               const std::vector<ClauseSet>& fs) {
  ordered_json j;
  j["k"] = k;
  j["n"] = n;
  j["count"] = static_cast<long>(fs.size());
  ordered_json list = ordered_json::array();
  for (const ClauseSet& f : fs) list.push_back(write_dimacs(f));
  j["formulas"] = list;
  return j;
}

}  // namespace mu2

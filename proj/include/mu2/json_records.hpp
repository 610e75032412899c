#pragma once

#include <vector>

#include "json.hpp"
#include "mu2/classify.hpp"
#include "mu2/formula.hpp"

namespace mu2 {

// Degree/satisfiability report for any 2-CNF.
nlohmann::ordered_json check_record(const ClauseSet& f);

// Classification summary; fields appear as deficiency, family, params,
// bracelet, aut_order, canonical_dimacs, with the family/params pair only
// for deficiency 1 and the bracelet only for deficiency >= 2.
nlohmann::ordered_json classification_record(const Classification& c);

nlohmann::ordered_json automorphism_record(const AutomorphismGroup& g);

nlohmann::ordered_json generation_record(int k, int n,
                                         const std::vector<ClauseSet>& fs);

}  // namespace mu2

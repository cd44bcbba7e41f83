#pragma once

#include <string>

#include <json.hpp>

#include "lcfuzz/bivariate.hpp"
#include "lcfuzz/fixtures.hpp"
#include "lcfuzz/fuzzymap.hpp"
#include "lcfuzz/topology.hpp"

namespace lcfuzz {

using json = nlohmann::ordered_json;

class schema_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

json to_json(const PLJFunction& f);
json to_json(const FuzzyNumber& u);
json to_json(const CompactDomain& d);
json to_json(const LCCFunction& f);
json to_json(const FuzzyMap& f);
json to_json(const ProductElement& p);
json to_json(const CheckReport& r, const CompactDomain* domain = nullptr);
json to_json(const ConvergenceReport& r);
json to_json(const Interval& i);

PLJFunction plj_from_json(const json& j);
FuzzyNumber fuzzy_from_json(const json& j);
CompactDomain domain_from_json(const json& j);
LCCFunction lcc_from_json(const json& j);
FuzzyMap fuzzymap_from_json(const json& j);

/// CSV level curves of a fuzzy number: lambda, lower, upper.
std::string fuzzy_to_csv(const FuzzyNumber& u, std::size_t n_levels = 101);
/// CSV of a bivariate function: lambda, t, value, right_limit (knot rows).
std::string lcc_to_csv(const LCCFunction& f);
/// CSV of a fuzzy map: t, lambda, f1, f2 (knot rows of both endpoints).
std::string fuzzymap_to_csv(const FuzzyMap& f);

}  // namespace lcfuzz

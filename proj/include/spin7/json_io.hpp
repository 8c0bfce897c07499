#pragma once

#include <json.hpp>

#include "spin7/presentation.hpp"
#include "spin7/rewrite.hpp"

namespace spin7 {

using json = nlohmann::json;

// {"lo": int, "c": [int,...]}
json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

// {"d": [int,...]}
json to_json(const DeltaPoly& p);

// {"num": <LaurentPoly>, "den": <LaurentPoly>}
json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const json& j);

// {"n": int, "terms": [{"coeff": <RatFunc>, "word": ["U1",...]}]}
json to_json(const AlgElement& a);
AlgElement element_from_json(const json& j);

// {"n": int, "rules": [{"lhs": [...], "rhs": <AlgElement>}]} sorted by lhs
json to_json(const RuleSet& rules);
RuleSet ruleset_from_json(const json& j);

json to_json(const OverlapReport& report, bool verbose);

}  // namespace spin7

#include "spin7/json_io.hpp"

#include <limits>

namespace spin7 {

namespace {

std::int64_t to_i64(const Int& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw error("coefficient does not fit the JSON integer encoding");
  return static_cast<std::int64_t>(v);
}

json word_to_json(const TraceWord& w) {
  json letters = json::array();
  for (const Gen& g : w.letters()) letters.push_back(to_string(g));
  return letters;
}

TraceWord word_from_json(const json& j, int n) {
  std::vector<Gen> letters;
  for (const auto& tok : j) letters.push_back(gen_from_string(tok.get<std::string>()));
  return TraceWord::canonicalize(n, std::move(letters));
}

}  // namespace

json to_json(const LaurentPoly& p) {
  json coeffs = json::array();
  for (const Int& c : p.raw_coeffs()) coeffs.push_back(to_i64(c));
  return json{{"lo", p.is_zero() ? 0 : p.lo()}, {"c", coeffs}};
}

LaurentPoly laurent_from_json(const json& j) {
  std::vector<Int> coeffs;
  for (const auto& c : j.at("c")) coeffs.emplace_back(c.get<std::int64_t>());
  return LaurentPoly::from_coeffs(j.at("lo").get<int>(), std::move(coeffs));
}

json to_json(const DeltaPoly& p) {
  json coeffs = json::array();
  for (const Int& c : p.coeffs()) coeffs.push_back(to_i64(c));
  return json{{"d", coeffs}};
}

json to_json(const RatFunc& f) {
  return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

RatFunc ratfunc_from_json(const json& j) {
  return RatFunc(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

json to_json(const AlgElement& a) {
  json terms = json::array();
  for (const auto& [w, c] : a.terms())
    terms.push_back(json{{"coeff", to_json(c)}, {"word", word_to_json(w)}});
  return json{{"n", a.context()}, {"terms", terms}};
}

AlgElement element_from_json(const json& j) {
  int n = j.at("n").get<int>();
  AlgElement e(n);
  for (const auto& t : j.at("terms"))
    e.add_term(word_from_json(t.at("word"), n), ratfunc_from_json(t.at("coeff")));
  return e;
}

json to_json(const RuleSet& rules) {
  json list = json::array();
  for (const Rule& r : rules.rules())
    list.push_back(json{{"lhs", word_to_json(r.lhs)}, {"rhs", to_json(r.rhs)}});
  return json{{"n", rules.context()}, {"rules", list}};
}

RuleSet ruleset_from_json(const json& j) {
  int n = j.at("n").get<int>();
  std::vector<Rule> rules;
  for (const auto& r : j.at("rules"))
    rules.push_back(Rule{word_from_json(r.at("lhs"), n), element_from_json(r.at("rhs"))});
  return RuleSet(n, std::move(rules));
}

json to_json(const OverlapReport& report, bool verbose) {
  json out{{"n", report.n},
           {"total", report.total},
           {"joinable", report.joinable},
           {"all_joinable", report.all_joinable()},
           {"distance2_pairs_checked", report.distance2_pairs_checked}};
  json failures = json::array();
  for (const OverlapCase& c : report.cases) {
    if (c.joinable) continue;
    json f{{"u", word_to_json(c.u)},   {"v", word_to_json(c.v)},       {"w", word_to_json(c.w)},
           {"lhs1", word_to_json(c.lhs1)}, {"lhs2", word_to_json(c.lhs2)}};
    if (c.left_nf) f["left_nf"] = to_json(*c.left_nf);
    if (c.right_nf) f["right_nf"] = to_json(*c.right_nf);
    failures.push_back(std::move(f));
  }
  out["failures"] = failures;
  if (verbose) {
    json cases = json::array();
    for (const OverlapCase& c : report.cases) {
      cases.push_back(json{{"u", word_to_json(c.u)},
                           {"v", word_to_json(c.v)},
                           {"w", word_to_json(c.w)},
                           {"lhs1", word_to_json(c.lhs1)},
                           {"lhs2", word_to_json(c.lhs2)},
                           {"joinable", c.joinable}});
    }
    out["overlaps"] = cases;
  }
  return out;
}

}  // namespace spin7

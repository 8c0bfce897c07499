#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "spin7/crystal.hpp"
#include "spin7/parse.hpp"
#include "spin7/rewrite.hpp"

using namespace spin7;

namespace {

Gen U(int i) { return Gen{GenKind::U, i}; }
Gen K(int i) { return Gen{GenKind::K, i}; }
Gen H(int i) { return Gen{GenKind::H, i}; }

AlgElement random_element(std::mt19937& rng, int n, int max_terms, int max_len) {
  std::uniform_int_distribution<int> terms(1, max_terms), len(0, max_len), idx(1, n - 1),
      kind(0, 2), coeff(-4, 4);
  AlgElement e(n);
  int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    std::vector<Gen> letters;
    int l = len(rng);
    for (int j = 0; j < l; ++j) letters.push_back(Gen{static_cast<GenKind>(kind(rng)), idx(rng)});
    int c = coeff(rng);
    if (c == 0) c = 1;
    e.add_term(TraceWord::canonicalize(n, std::move(letters)), RatFunc(Int(c)));
  }
  return e;
}

}  // namespace

TEST_CASE("normal form examples") {
  RuleSet r3 = rules_for(3);
  CHECK(normal_form(parse("U1*K1", 3), r3).is_zero());
  CHECK(normal_form(parse("H1*H1", 3), r3) ==
        parse("[3] + ([4]/[2])*H1 + [4]*U1 + [4]*K1", 3));
  CHECK(normal_form(parse("H2*U1*H2", 3), r3) == parse("K1*U2*K1", 3));
}

TEST_CASE("irreducibility") {
  RuleSet r3 = rules_for(3);
  CHECK(is_irreducible(TraceWord(3), r3));
  CHECK(is_irreducible(TraceWord::canonicalize(3, {K(1), U(2), K(1)}), r3));
  CHECK(!is_irreducible(TraceWord::canonicalize(3, {U(1), U(2), U(1)}), r3));
}

TEST_CASE("irreducible word enumeration against the walk oracle") {
  RuleSet r2 = rules_for(2);
  auto words2 = enumerate_irreducible(2, r2);
  CHECK(words2.size() == 4);
  std::set<TraceWord> set2(words2.begin(), words2.end());
  CHECK(set2.count(TraceWord(2)) == 1);
  CHECK(set2.count(TraceWord::canonicalize(2, {U(1)})) == 1);
  CHECK(set2.count(TraceWord::canonicalize(2, {K(1)})) == 1);
  CHECK(set2.count(TraceWord::canonicalize(2, {H(1)})) == 1);

  auto words3 = enumerate_irreducible(3, rules_for(3));
  const auto& basis = basis30();
  CHECK(std::set<TraceWord>(words3.begin(), words3.end()) ==
        std::set<TraceWord>(basis.begin(), basis.end()));
}

TEST_CASE("normal form is multiplicative through normal forms") {
  RuleSet r3 = rules_for(3);
  Rewriter<RatFunc> rw(RulesOn<RatFunc>::from(r3));
  std::mt19937 rng(2024);
  for (int t = 0; t < 60; ++t) {
    AlgElement a = random_element(rng, 3, 3, 3);
    AlgElement b = random_element(rng, 3, 3, 3);
    CHECK(rw.normal_form(a * b) == rw.normal_form(rw.normal_form(a) * rw.normal_form(b)));
  }
  RuleSet r4 = rules_for(4);
  Rewriter<RatFunc> rw4(RulesOn<RatFunc>::from(r4));
  for (int t = 0; t < 25; ++t) {
    AlgElement a = random_element(rng, 4, 2, 3);
    AlgElement b = random_element(rng, 4, 2, 3);
    CHECK(rw4.normal_form(a * b) == rw4.normal_form(rw4.normal_form(a) * rw4.normal_form(b)));
  }
}

TEST_CASE("normal form does not depend on the strategy") {
  for (int n : {3, 4}) {
    RuleSet rules = rules_for(n);
    Rewriter<RatFunc> fwd(RulesOn<RatFunc>::from(rules));
    Rewriter<RatFunc> rev(RulesOn<RatFunc>::from(rules), /*reverse_rule_order=*/true);
    std::mt19937 rng(n);
    for (int t = 0; t < 500; ++t) {
      AlgElement a = random_element(rng, n, 2, 3);
      CHECK(fwd.normal_form(a) == rev.normal_form(a));
    }
  }
}

TEST_CASE("integral inputs stay integral") {
  // Inputs with coefficients in Z[delta] normal-form to the same ring:
  // denominator one and bar-invariant numerators.
  RuleSet r3 = rules_for(3);
  Rewriter<RatFunc> rw(RulesOn<RatFunc>::from(r3));
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> coeff(-3, 3), deg(0, 2);
  for (int t = 0; t < 80; ++t) {
    AlgElement a = random_element(rng, 3, 3, 4);
    // replace coefficients by random delta polynomials
    AlgElement integral(3);
    for (const auto& [w, c] : a.terms()) {
      std::vector<Int> d;
      int dd = deg(rng);
      for (int j = 0; j <= dd; ++j) d.emplace_back(coeff(rng));
      LaurentPoly p = from_delta(DeltaPoly(std::move(d)));
      if (p.is_zero()) p = LaurentPoly(Int(1));
      integral.add_term(w, RatFunc(p));
    }
    for (const auto& [w, c] : rw.normal_form(integral).terms()) {
      CHECK(c.is_polynomial());
      CHECK(c.num().is_bar_invariant());
    }
  }
}

TEST_CASE("termination certificates") {
  for (int n : {2, 3, 4, 5}) {
    TerminationReport report = check_termination(rules_for(n));
    CHECK(report.pass());
    CHECK(report.rules_checked == rules_for(n).size());
  }

  // a deliberately reversed rule must be flagged
  TraceWord good = TraceWord::canonicalize(3, {K(1), U(2), K(1)});
  TraceWord bad = TraceWord::canonicalize(3, {H(2), U(1), H(2)});
  RuleSet reversed(3, {Rule{good, AlgElement::word(bad)}});
  TerminationReport report = check_termination(reversed);
  CHECK(!report.pass());
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].lhs == good);
  CHECK(report.violations[0].offending == bad);
}

TEST_CASE("spot check overlap joins") {
  // u = U1, v = K1, w = K1 with rules U1K1 -> 0 and K1K1 -> scalar K1:
  // both sides of the overlap word collapse to zero.
  RuleSet r2 = rules_for(2);
  Rewriter<RatFunc> rw(RulesOn<RatFunc>::from(r2));
  const Rule* uk = r2.find(TraceWord::canonicalize(2, {U(1), K(1)}));
  const Rule* kk = r2.find(TraceWord::canonicalize(2, {K(1), K(1)}));
  REQUIRE(uk);
  REQUIRE(kk);
  AlgElement left = rw.normal_form(uk->rhs * AlgElement::generator(2, K(1)));
  AlgElement right = rw.normal_form(AlgElement::generator(2, U(1)) * kk->rhs);
  CHECK(left.is_zero());
  CHECK(right.is_zero());
}

TEST_CASE("local confluence for the three strand system") {
  OverlapReport report = check_local_confluence(rules_for(3), /*keep_cases=*/false);
  CHECK(report.total > 0);
  CHECK(report.all_joinable());
  CHECK(report.cases.empty());  // failures only when keep_cases is false
  CHECK(report.distance2_pairs_checked == 0);  // no distant pairs below n=5
}

TEST_CASE("divergence sweep over short words at n=4") {
  // Independent of the overlap enumeration: every word up to length five
  // has pairwise joining one-step reducts.
  RuleSet r4 = rules_for(4);
  Rewriter<RatFunc> rw(RulesOn<RatFunc>::from(r4));
  std::vector<Gen> gens;
  for (int i = 1; i <= 3; ++i)
    for (GenKind k : {GenKind::U, GenKind::K, GenKind::H}) gens.push_back(Gen{k, i});
  std::set<TraceWord> seen{TraceWord(4)};
  std::vector<TraceWord> level{TraceWord(4)};
  for (int len = 1; len <= 5; ++len) {
    std::vector<TraceWord> next;
    for (const TraceWord& w : level) {
      for (const Gen& g : gens) {
        TraceWord ext = concat(w, TraceWord::canonicalize(4, {g}));
        if (!seen.insert(ext).second) continue;
        next.push_back(ext);
        AlgElement nf0;
        bool first = true;
        for (const Rule& r : r4.rules()) {
          for (const auto& [x, y] : factor_occurrences(ext, r.lhs)) {
            AlgElement red = rw.normal_form(AlgElement::word(x) * r.rhs * AlgElement::word(y));
            if (first) {
              nf0 = red;
              first = false;
            } else {
              CHECK(red == nf0);
            }
          }
        }
      }
    }
    level = std::move(next);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spin7/element.hpp"

using namespace spin7;

namespace {

Gen U(int i) { return Gen{GenKind::U, i}; }
Gen K(int i) { return Gen{GenKind::K, i}; }
Gen H(int i) { return Gen{GenKind::H, i}; }

AlgElement random_element(std::mt19937& rng, int n, int max_terms) {
  std::uniform_int_distribution<int> terms(0, max_terms), len(0, 3), idx(1, n - 1), kind(0, 2),
      coeff(-5, 5), exp(-2, 2);
  AlgElement e(n);
  int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    std::vector<Gen> letters;
    int l = len(rng);
    for (int j = 0; j < l; ++j) letters.push_back(Gen{static_cast<GenKind>(kind(rng)), idx(rng)});
    RatFunc c(LaurentPoly::monomial(Int(coeff(rng)), exp(rng)));
    e.add_term(TraceWord::canonicalize(n, std::move(letters)), c);
  }
  return e;
}

}  // namespace

TEST_CASE("support and cancellation") {
  AlgElement zero(3);
  CHECK(zero.support().empty());

  AlgElement u1 = AlgElement::generator(3, U(1));
  CHECK((u1 - u1).is_zero());
  CHECK((u1 - u1).support().empty());

  AlgElement mixed = AlgElement::unit(3, RatFunc(qint(3))) +
                     RatFunc(qint(4)) * AlgElement::generator(3, U(1));
  auto supp = mixed.support();
  CHECK(supp.size() == 2);
  CHECK(supp.count(TraceWord(3)) == 1);
  CHECK(supp.count(TraceWord::canonicalize(3, {U(1)})) == 1);
}

TEST_CASE("free multiplication applies no relations") {
  AlgElement u1 = AlgElement::generator(3, U(1));
  AlgElement k1 = AlgElement::generator(3, K(1));
  AlgElement prod = u1 * k1;
  CHECK(prod.term_count() == 1);
  CHECK(prod.coeff(TraceWord::canonicalize(3, {U(1), K(1)})) == RatFunc(1));

  AlgElement qu = AlgElement::generator(4, U(1), q_power(1));
  AlgElement qih = AlgElement::generator(4, H(3), q_power(-1));
  AlgElement r = qu * qih;
  CHECK(r.term_count() == 1);
  CHECK(r.coeff(TraceWord::canonicalize(4, {U(1), H(3)})) == RatFunc(1));
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(42);
  for (int t = 0; t < 150; ++t) {
    AlgElement a = random_element(rng, 4, 4);
    AlgElement b = random_element(rng, 4, 4);
    AlgElement c = random_element(rng, 4, 4);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("no zero coefficients are ever stored") {
  std::mt19937 rng(43);
  for (int t = 0; t < 100; ++t) {
    AlgElement a = random_element(rng, 3, 4);
    AlgElement b = random_element(rng, 3, 4);
    for (const auto& [w, c] : (a * b + a - a * b).terms()) CHECK(!c.is_zero());
  }
}

TEST_CASE("context mismatch is rejected") {
  CHECK_THROWS_AS(AlgElement::unit(3) + AlgElement::unit(4), mismatched_context);
  CHECK_THROWS_AS(AlgElement::unit(3) * AlgElement::unit(4), mismatched_context);
}

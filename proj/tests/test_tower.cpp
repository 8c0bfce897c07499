#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "spin7/tower.hpp"

using namespace spin7;

namespace {

Gen U(int i) { return Gen{GenKind::U, i}; }
Gen K(int i) { return Gen{GenKind::K, i}; }
Gen H(int i) { return Gen{GenKind::H, i}; }

RatFunc qq(int n) { return RatFunc(qint(n)); }

TowerContext& ctx3() {
  static TowerContext ctx(3);
  return ctx;
}

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

TEST_CASE("conditional expectation values forced by the relations") {
  for (int n : {2, 3}) {
    AlgElement one = epsilon(ctx3(), n, AlgElement::unit(n));
    CHECK(one == loop_value() * AlgElement::unit(std::max(n - 1, 1)));
    CHECK(epsilon(ctx3(), n, AlgElement::generator(n, U(n - 1))) ==
          AlgElement::unit(std::max(n - 1, 1)));
    CHECK(epsilon(ctx3(), n, AlgElement::generator(n, K(n - 1))) ==
          qq(7) * AlgElement::unit(std::max(n - 1, 1)));
    CHECK(epsilon(ctx3(), n, AlgElement::generator(n, H(n - 1))).is_zero());
  }
}

TEST_CASE("defining sandwich property on every basis word of A_P(3)") {
  auto words = enumerate_irreducible(3, ctx3().rules(3));
  REQUIRE(words.size() == 30);
  AlgElement u3 = AlgElement::generator(4, U(3));
  for (const TraceWord& w : words) {
    AlgElement a = AlgElement::word(w);
    AlgElement eps = epsilon(ctx3(), 3, a);
    AlgElement lhs = ctx3().rewriter(4).normal_form(u3 * a.with_context(4) * u3);
    AlgElement rhs = ctx3().rewriter(4).normal_form(eps.with_context(4) * u3);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("bimodule property over the lower algebra") {
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    // x, y supported on subscript 1 only; a arbitrary in A_P(3)
    AlgElement x = random_element(rng, 2, 2, 2).with_context(3);
    AlgElement y = random_element(rng, 2, 2, 2).with_context(3);
    AlgElement a = random_element(rng, 3, 2, 2);
    AlgElement lhs = epsilon(ctx3(), 3, ctx3().rewriter(3).normal_form(x * a * y));
    AlgElement rhs = ctx3().rewriter(2).normal_form(
        x.with_context(2) * epsilon(ctx3(), 3, a) * y.with_context(2));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("markov trace basics") {
  CHECK(trace(ctx3(), 2, AlgElement::unit(2)) == RatFunc(1));
  CHECK(trace(ctx3(), 3, AlgElement::unit(3)) == RatFunc(1));

  RatFunc tu = trace(ctx3(), 2, AlgElement::generator(2, U(1)));
  CHECK(tu == qq(5) * qq(3) / (qq(10) * qq(6) * qq(2)));
  CHECK(tu.eval(1) == Rational(1, 8));
  CHECK(trace(ctx3(), 2, AlgElement::generator(2, K(1))).eval(1) == Rational(7, 8));
}

TEST_CASE("trace symmetry on random pairs") {
  std::mt19937 rng(17);
  for (int t = 0; t < 60; ++t) {
    AlgElement a = random_element(rng, 3, 2, 3);
    AlgElement b = random_element(rng, 3, 2, 3);
    AlgElement ab = ctx3().rewriter(3).normal_form(a * b);
    AlgElement ba = ctx3().rewriter(3).normal_form(b * a);
    CHECK(trace(ctx3(), 3, ab) == trace(ctx3(), 3, ba));
  }
}

TEST_CASE("spectral idempotents split the identity") {
  Rewriter<RatFunc>& rw = ctx3().rewriter(2);
  const auto& idems = spectral_idempotents();
  AlgElement h1 = AlgElement::generator(2, H(1));
  AlgElement sum(2);
  for (const auto& idem : idems) {
    AlgElement nf = rw.normal_form(idem.element);
    CHECK(rw.normal_form(idem.element * idem.element) == nf);
    CHECK(rw.normal_form(h1 * idem.element) == rw.normal_form(idem.eigenvalue * idem.element));
    sum = sum + idem.element;
  }
  CHECK(rw.normal_form(sum) == AlgElement::unit(2));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      CHECK(rw.normal_form(idems[i].element * idems[j].element).is_zero());
}

TEST_CASE("printed idempotent coefficients: K and e pass, the U one does not") {
  Rewriter<RatFunc>& rw = ctx3().rewriter(2);

  AlgElement k_version = (qq(3) / (qq(2) * qq(2) * qq(6))) * AlgElement::generator(2, K(1));
  CHECK(rw.normal_form(k_version * k_version) == rw.normal_form(k_version));

  RatFunc c22 = RatFunc(1) / (qq(2) * qq(2));
  RatFunc c23 = RatFunc(1) / (qq(2) * qq(2) * qq(2));
  RatFunc cu = qq(4) * qq(5) / (qq(2) * qq(2) * qq(2) * qq(10));
  AlgElement e_version = c22 * AlgElement::unit(2) + c22 * AlgElement::generator(2, H(1)) +
                         c23 * AlgElement::generator(2, K(1)) -
                         cu * AlgElement::generator(2, U(1));
  CHECK(rw.normal_form(e_version * e_version) == rw.normal_form(e_version));

  // the printed 1/[2]^2 multiple of U is not idempotent; already visible at
  // q=1 where (U/4)^2 = U/2
  AlgElement u_version = c22 * AlgElement::generator(2, U(1));
  CHECK(rw.normal_form(u_version * u_version) != rw.normal_form(u_version));

  AlgElement corrected = (RatFunc(1) / loop_value()) * AlgElement::generator(2, U(1));
  CHECK(rw.normal_form(corrected * corrected) == rw.normal_form(corrected));
}

TEST_CASE("weights attach to idempotents through the trace") {
  auto attachments = identify_weights(ctx3());
  const RatFunc spin2 = RatFunc(quantum_dim(WeightLabel::spin) * quantum_dim(WeightLabel::spin));
  std::map<WeightLabel, Rational> at_one;
  for (const auto& a : attachments) {
    CHECK(a.trace_value == RatFunc(quantum_dim(a.weight)) / spin2);
    at_one[a.weight] = a.trace_value.eval(1);
  }
  CHECK(at_one[WeightLabel::trivial] == Rational(1, 64));
  CHECK(at_one[WeightLabel::vector_rep] == Rational(7, 64));
  CHECK(at_one[WeightLabel::adjoint] == Rational(21, 64));
  CHECK(at_one[WeightLabel::lambda2] == Rational(35, 64));

  // the eigenvalue pairing: [7] carries the trivial summand
  for (const auto& a : attachments) {
    if (a.weight == WeightLabel::trivial) CHECK(a.eigenvalue == qq(7));
    if (a.weight == WeightLabel::vector_rep) CHECK(a.eigenvalue == RatFunc(0) - qq(5));
    if (a.weight == WeightLabel::adjoint) CHECK(a.eigenvalue == qq(3));
    if (a.weight == WeightLabel::lambda2) CHECK(a.eigenvalue == RatFunc(-1));
  }
}

TEST_CASE("tensor square dimension bookkeeping") {
  LaurentPoly total = quantum_dim(WeightLabel::trivial) + quantum_dim(WeightLabel::vector_rep) +
                      quantum_dim(WeightLabel::adjoint) + quantum_dim(WeightLabel::lambda2);
  CHECK(total == quantum_dim(WeightLabel::spin) * quantum_dim(WeightLabel::spin));
}

TEST_CASE("cell idempotents") {
  TowerContext ctx4(4);
  CHECK(cell_idempotent(ctx4, 0, 0, 0, 4) == AlgElement::unit(4));

  AlgElement u_cell = cell_idempotent(ctx4, 1, 0, 0, 2);
  CHECK(u_cell == (RatFunc(1) / loop_value()) * AlgElement::generator(2, U(1)));

  AlgElement ke = cell_idempotent(ctx4, 0, 1, 1, 4);
  Rewriter<RatFunc>& rw4 = ctx4.rewriter(4);
  CHECK(rw4.normal_form(ke * ke) == ke);
  // k at strand 1, e at strand 3
  bool uses_index_3 = false;
  for (const auto& [w, c] : ke.terms())
    for (const Gen& g : w.letters()) uses_index_3 |= g.index == 3;
  CHECK(uses_index_3);

  CHECK_THROWS_AS(cell_idempotent(ctx4, 1, 1, 1, 4), bound_violation);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spin7/laurent.hpp"
#include "spin7/ratfunc.hpp"

using namespace spin7;

namespace {

LaurentPoly mono(long c, int e) { return LaurentPoly::monomial(Int(c), e); }

// Independent oracle for [n]: the recurrence P(k+1) = delta P(k) - P(k-1).
LaurentPoly qint_by_recurrence(int n) {
  LaurentPoly delta = mono(1, 1) + mono(1, -1);
  LaurentPoly prev{Int(0)}, cur{Int(1)};  // [0] = 0, [1] = 1
  for (int k = 1; k < n; ++k) {
    LaurentPoly next = delta * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

DeltaPoly dpoly(std::initializer_list<long> ascending) {
  std::vector<Int> c;
  for (long v : ascending) c.emplace_back(v);
  return DeltaPoly(std::move(c));
}

LaurentPoly random_poly(std::mt19937& rng, int max_span) {
  std::uniform_int_distribution<int> span(0, max_span), lo(-6, 6), coeff(-9, 9);
  std::vector<Int> c;
  int len = span(rng) + 1;
  for (int i = 0; i < len; ++i) c.emplace_back(coeff(rng));
  return LaurentPoly::from_coeffs(lo(rng), std::move(c));
}

}  // namespace

TEST_CASE("quantum integers: base cases and recurrence-derived value") {
  CHECK(qint(1) == LaurentPoly(Int(1)));
  CHECK(qint(2) == mono(1, -1) + mono(1, 1));
  // [4] derived by applying the recurrence twice from [2], [3].
  CHECK(qint(4) == mono(1, -3) + mono(1, -1) + mono(1, 1) + mono(1, 3));
  CHECK(qint(4) == qint_by_recurrence(4));
}

TEST_CASE("recurrence [2][n] = [n+1] + [n-1] up to 50") {
  for (int n = 2; n <= 50; ++n) CHECK(qint(2) * qint(n) == qint(n + 1) + qint(n - 1));
}

TEST_CASE("delta conversion table entries") {
  CHECK(to_delta(qint(2)) == dpoly({0, 1}));
  CHECK(to_delta(qint(3)) == dpoly({-1, 0, 1}));
  CHECK(to_delta(qint(4)) == dpoly({0, -2, 0, 1}));
  CHECK(to_delta(exact_div(qint(4), qint(2))) == dpoly({-2, 0, 1}));
  CHECK(to_delta(exact_div(qint(6), qint(3))) == dpoly({0, -3, 0, 1}));
  CHECK(to_delta(exact_div(qint(8), qint(4))) == dpoly({2, 0, -4, 0, 1}));
  CHECK(to_delta(exact_div(qint(10), qint(5))) == dpoly({0, 5, 0, -5, 0, 1}));
}

TEST_CASE("to_delta rejects asymmetric input") {
  CHECK_THROWS_AS(to_delta(mono(1, 2)), not_bar_invariant);
}

TEST_CASE("exact division") {
  CHECK(exact_div(qint(4), qint(2)) == mono(1, -2) + mono(1, 2));
  // [10][6][2] / ([5][3]) equals the product of the printed table entries.
  LaurentPoly lhs = exact_div(qint(10) * qint(6) * qint(2), qint(5) * qint(3));
  DeltaPoly expect = dpoly({0, 0, 0, 1}) * dpoly({-3, 0, 1}) * dpoly({5, 0, -5, 0, 1});
  CHECK(lhs == from_delta(expect));
  CHECK_THROWS_AS(exact_div(qint(6), qint(4)), not_divisible);
}

TEST_CASE("exact_div(a*b, b) = a randomized") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    LaurentPoly a = random_poly(rng, 6), b = random_poly(rng, 6);
    if (b.is_zero()) continue;
    CHECK(exact_div(a * b, b) == a);
  }
}

TEST_CASE("delta round trip on symmetric polynomials") {
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    std::uniform_int_distribution<int> deg(0, 50), coeff(-20, 20);
    std::vector<Int> c;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) c.emplace_back(coeff(rng));
    DeltaPoly p(std::move(c));
    CHECK(to_delta(from_delta(p)) == p);
    // And the other direction through a symmetrized Laurent polynomial.
    LaurentPoly r = random_poly(rng, 50);
    LaurentPoly sym = r + r.bar();
    CHECK(from_delta(to_delta(sym)) == sym);
  }
}

TEST_CASE("quantum dimensions") {
  CHECK(quantum_dim(WeightLabel::spin) ==
        exact_div(qint(10) * qint(6) * qint(2), qint(5) * qint(3) * qint(1)));
  CHECK(eval_at(quantum_dim(WeightLabel::spin), 1) == 8);
  CHECK(eval_at(quantum_dim(WeightLabel::adjoint), 1) == 21);
  CHECK(eval_at(quantum_dim(WeightLabel::vector_rep), 1) == 7);
  CHECK(eval_at(quantum_dim(WeightLabel::lambda2), 1) == 35);
  CHECK(eval_at(quantum_dim(WeightLabel::trivial), 1) == 1);
}

TEST_CASE("sum of tensor-square summand dimensions equals the spin square") {
  LaurentPoly total = quantum_dim(WeightLabel::trivial) + quantum_dim(WeightLabel::vector_rep) +
                      quantum_dim(WeightLabel::adjoint) + quantum_dim(WeightLabel::lambda2);
  CHECK(total == quantum_dim(WeightLabel::spin) * quantum_dim(WeightLabel::spin));
}

TEST_CASE("evaluation") {
  CHECK(eval_at(qint(2), 1) == 2);
  CHECK(eval_at(qint(4), 2) == Rational(85, 8));
  RatFunc pole(LaurentPoly(Int(1)), mono(1, 1) - mono(1, -1));
  CHECK_THROWS_AS(pole.eval(1), pole_at_point);
}

TEST_CASE("rational function normalization is canonical") {
  LaurentPoly num = mono(2, 1);
  LaurentPoly den = mono(2, 3);
  RatFunc f(num, den);
  CHECK(f == RatFunc(mono(1, -2)));
  // Denominator sign and q-power normalization.
  RatFunc g(mono(1, 0) - mono(1, 2), mono(-1, 1));
  CHECK(g.den().lo() == 0);
  CHECK(g.den().raw_coeffs().back() > 0);
  RatFunc h(qint(3), qint(6));
  CHECK(h * RatFunc(qint(6)) == RatFunc(qint(3)));
}

TEST_CASE("rational function field ops agree with rational evaluation") {
  std::mt19937 rng(23);
  for (int t = 0; t < 60; ++t) {
    LaurentPoly a = random_poly(rng, 4), b = random_poly(rng, 4);
    LaurentPoly c = random_poly(rng, 4), d = random_poly(rng, 4);
    if (b.is_zero() || d.is_zero()) continue;
    RatFunc x(a, b), y(c, d);
    Rational q0(3, 2);
    if (eval_at(b, q0) == 0 || eval_at(d, q0) == 0) continue;
    CHECK((x + y).eval(q0) == x.eval(q0) + y.eval(q0));
    CHECK((x - y).eval(q0) == x.eval(q0) - y.eval(q0));
    CHECK((x * y).eval(q0) == x.eval(q0) * y.eval(q0));
    if (!y.is_zero() && eval_at(c, q0) != 0) CHECK((x / y).eval(q0) == x.eval(q0) / y.eval(q0));
  }
}

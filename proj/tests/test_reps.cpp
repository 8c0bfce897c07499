#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spin7/presentation.hpp"
#include "spin7/reps.hpp"

using namespace spin7;

namespace {

Gen U(int i) { return Gen{GenKind::U, i}; }
Gen K(int i) { return Gen{GenKind::K, i}; }
Gen H(int i) { return Gen{GenKind::H, i}; }

RatFunc qq(int n) { return RatFunc(qint(n)); }

}  // namespace

TEST_CASE("printed matrices") {
  const RepSpec& four = rep(4);
  CHECK(four.h1.at(0, 0) == qq(7));
  CHECK(four.h1.at(1, 1) == RatFunc(0) - qq(5));
  CHECK(four.h1.at(2, 2) == qq(3));
  CHECK(four.h1.at(3, 3) == RatFunc(-1));
  CHECK(four.h1.at(0, 1) == RatFunc(0) - qq(6));
  CHECK(four.u1.at(0, 0) == loop_value());
  CHECK(four.u1.at(0, 3) == RatFunc(1));
  CHECK(four.u1.at(2, 2).is_zero());
  CHECK(four.sigma1.at(3, 3) == RatFunc(0) - q_power(-6));

  const RepSpec& one = rep(1);
  CHECK(one.u1.at(0, 0).is_zero());
  CHECK(one.k1.at(0, 0).is_zero());
  CHECK(one.h1.at(0, 0) == RatFunc(-1));
  CHECK(one.sigma1.at(0, 0) == RatFunc(0) - q_power(-6));

  CHECK(rep(3).u1.is_zero());
}

TEST_CASE("evaluation is an algebra map") {
  CHECK(evaluate(AlgElement::unit(3), rep(4)) == RepMatrix::identity(4));
  AlgElement uk = AlgElement::generator(3, U(1)) * AlgElement::generator(3, K(1));
  CHECK(evaluate(uk, rep(4)).is_zero());

  RepMatrix h2dim = evaluate(AlgElement::generator(3, H(1)), rep(2));
  CHECK(h2dim.at(0, 0) == qq(3));
  CHECK(h2dim.at(0, 1) == RatFunc(0) - qq(2));
  CHECK(h2dim.at(1, 0).is_zero());
  CHECK(h2dim.at(1, 1) == RatFunc(-1));
}

TEST_CASE("simultaneous evaluation has full rank on the basis") {
  RepMatrix a(30, 30);
  for (int col = 0; col < 30; ++col) {
    auto v = pi_flatten(pi_evaluate(basis30()[static_cast<std::size_t>(col)]));
    REQUIRE(v.size() == 30);
    for (int row = 0; row < 30; ++row) a.at(row, col) = v[static_cast<std::size_t>(row)];
  }
  CHECK(rank(a) == 30);
  CHECK(rank(RepMatrix::identity(4)) == 4);
}

TEST_CASE("mirror relation holds blockwise") {
  AlgElement lhs = AlgElement::word(TraceWord::canonicalize(3, {H(2), U(1), H(2)}));
  AlgElement rhs = AlgElement::word(TraceWord::canonicalize(3, {K(1), U(2), K(1)}));
  auto lb = pi_evaluate(lhs);
  auto rb = pi_evaluate(rhs);
  for (std::size_t k = 0; k < 4; ++k) CHECK(lb[k] == rb[k]);
}

TEST_CASE("braid matrices") {
  for (int k = 1; k <= 4; ++k) {
    const RepSpec& r = rep(k);
    CHECK(braid_from_generators(1, r) == r.sigma1);
    CHECK(braid_from_generators(2, r) == r.sigma2);
    CHECK(r.sigma1 * r.sigma1_inv == RepMatrix::identity(k));
    CHECK(r.sigma2 * r.sigma2_inv == RepMatrix::identity(k));
    if (k >= 2) CHECK(r.sigma1 * r.sigma2 * r.sigma1 == r.sigma2 * r.sigma1 * r.sigma2);
  }
  // entry (4,4): (-q^-7 - q^-5)/(q+q^-1) = -q^-6
  CHECK(rep(4).sigma1.at(3, 3) == (RatFunc(0) - q_power(-7) - q_power(-5)) / qq(2));
}

TEST_CASE("characteristic polynomial of H") {
  auto cp = char_poly(rep(4).h1);
  // (x+1)(x-[3])(x+[5])(x-[7]) expanded via repeated linear factors
  std::vector<RatFunc> expect{RatFunc(1)};
  for (const RatFunc& root : {RatFunc(-1), qq(3), RatFunc(0) - qq(5), qq(7)}) {
    std::vector<RatFunc> next(expect.size() + 1);
    for (std::size_t i = 0; i < expect.size(); ++i) {
      next[i + 1] = next[i + 1] + expect[i];
      next[i] = next[i] - root * expect[i];
    }
    expect = std::move(next);
  }
  CHECK(cp == expect);

  // the four eigenvalues are pairwise distinct, so each has multiplicity one
  std::vector<RatFunc> roots{RatFunc(-1), qq(3), RatFunc(0) - qq(5), qq(7)};
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) CHECK(roots[i] != roots[j]);
}

TEST_CASE("exact solving") {
  RepMatrix a(30, 30);
  for (int col = 0; col < 30; ++col) {
    auto v = pi_flatten(pi_evaluate(basis30()[static_cast<std::size_t>(col)]));
    for (int row = 0; row < 30; ++row) a.at(row, col) = v[static_cast<std::size_t>(row)];
  }
  AlgElement target = AlgElement::word(TraceWord::canonicalize(3, {H(2), U(1), K(2)}));
  auto b = pi_flatten(pi_evaluate(target));
  auto sol = solve(a, b);
  REQUIRE(sol.has_value());
  // residual check: A x = b exactly
  for (int row = 0; row < 30; ++row) {
    RatFunc acc;
    for (int col = 0; col < 30; ++col)
      acc = acc + a.at(row, col) * (*sol)[static_cast<std::size_t>(col)];
    CHECK(acc == b[static_cast<std::size_t>(row)]);
  }

  // inconsistent system is reported as such
  RepMatrix bad(2, 1);
  bad.at(0, 0) = RatFunc(1);
  bad.at(1, 0) = RatFunc(1);
  CHECK(!solve(bad, {RatFunc(1), RatFunc(2)}).has_value());
}

TEST_CASE("null space") {
  RepMatrix m(2, 3);
  m.at(0, 0) = RatFunc(1);
  m.at(0, 2) = RatFunc(1);
  m.at(1, 1) = RatFunc(1);
  auto basis = null_space(m);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] == RatFunc(-1));
  CHECK(basis[0][1].is_zero());
  CHECK(basis[0][2] == RatFunc(1));
}

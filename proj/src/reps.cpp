#include "spin7/reps.hpp"

#include <mutex>

namespace spin7 {

namespace {

RatFunc qq(int n) { return RatFunc(qint(n)); }

RatFunc qratio(std::initializer_list<int> num, std::initializer_list<int> den) {
  LaurentPoly n{Int(1)}, d{Int(1)};
  for (int k : num) n = n * qint(k);
  for (int k : den) d = d * qint(k);
  return RatFunc(exact_div(n, d));
}

// Laurent polynomial from (coefficient, exponent) pairs.
RatFunc qpoly(std::initializer_list<std::pair<int, int>> terms) {
  LaurentPoly p;
  for (auto [c, e] : terms) p = p + LaurentPoly::monomial(Int(c), e);
  return RatFunc(p);
}

RepSpec build_rep4() {
  RepSpec r;
  r.dim = 4;

  RepMatrix u(4, 4);
  u.at(0, 0) = qratio({10, 6, 2}, {5, 3});
  u.at(0, 1) = RatFunc(0) - qratio({10, 6}, {5, 3});
  u.at(0, 2) = RatFunc(0) - qratio({6, 4}, {3, 2});
  u.at(0, 3) = RatFunc(1);

  RepMatrix k(4, 4);
  k.at(0, 1) = qq(2) * qratio({6}, {3});
  k.at(0, 2) = RatFunc(0) - qratio({6}, {3});
  k.at(0, 3) = RatFunc(-1);
  k.at(1, 1) = qq(2) * qq(2) * qratio({6}, {3});
  k.at(1, 2) = RatFunc(0) - qq(2) * qratio({6}, {3});
  k.at(1, 3) = RatFunc(0) - qq(2);

  RepMatrix h(4, 4);
  h.at(0, 0) = qq(7);
  h.at(0, 1) = RatFunc(0) - qq(6);
  h.at(1, 1) = RatFunc(0) - qq(5);
  h.at(1, 2) = qq(4);
  h.at(2, 2) = qq(3);
  h.at(2, 3) = RatFunc(0) - qq(2);
  h.at(3, 3) = RatFunc(-1);

  RepMatrix s(4, 4);
  s.at(0, 0) = qpoly({{-1, 6}});
  s.at(0, 1) = qpoly({{1, 1}, {-1, 3}, {1, 5}});
  s.at(0, 2) = qpoly({{1, -2}, {-1, 0}, {1, 2}});
  s.at(0, 3) = qpoly({{-1, -3}});
  s.at(1, 1) = RatFunc(1);
  s.at(1, 2) = qpoly({{1, -3}, {-1, -1}});
  s.at(1, 3) = qpoly({{-1, -4}});
  s.at(2, 2) = qpoly({{1, -4}});
  s.at(2, 3) = qpoly({{-1, -5}});
  s.at(3, 3) = qpoly({{-1, -6}});

  r.u1 = u;
  r.k1 = k;
  r.h1 = h;
  r.sigma1 = s;
  return r;
}

void finish(RepSpec& r) {
  r.u2 = r.u1.reverse_involution();
  r.k2 = r.k1.reverse_involution();
  r.h2 = r.h1.reverse_involution();
  r.sigma2 = r.sigma1.reverse_involution();
  r.sigma1_inv = r.sigma1.bar();
  r.sigma2_inv = r.sigma2.bar();
}

}  // namespace

const RepSpec& rep(int k) {
  if (k < 1 || k > 4) throw index_out_of_range("rep dimension must be 1..4");
  static std::array<RepSpec, 4> reps;
  static std::once_flag once;
  std::call_once(once, [] {
    RepSpec four = build_rep4();
    for (int dim = 4; dim >= 1; --dim) {
      RepSpec r;
      r.dim = dim;
      int cut = 4 - dim;
      r.u1 = four.u1.trailing_minor(cut);
      r.k1 = four.k1.trailing_minor(cut);
      r.h1 = four.h1.trailing_minor(cut);
      r.sigma1 = four.sigma1.trailing_minor(cut);
      finish(r);
      reps[static_cast<std::size_t>(dim - 1)] = std::move(r);
    }
  });
  return reps[static_cast<std::size_t>(k - 1)];
}

const RepMatrix& RepSpec::image(const Gen& g) const {
  if (g.index == 1) {
    switch (g.kind) {
      case GenKind::U: return u1;
      case GenKind::K: return k1;
      case GenKind::H: return h1;
    }
  }
  if (g.index == 2) {
    switch (g.kind) {
      case GenKind::U: return u2;
      case GenKind::K: return k2;
      case GenKind::H: return h2;
    }
  }
  throw index_out_of_range("representation only defined for strand indices 1 and 2");
}

RepMatrix evaluate(const TraceWord& w, const RepSpec& spec) {
  RepMatrix m = RepMatrix::identity(spec.dim);
  for (const Gen& g : w.letters()) m = m * spec.image(g);
  return m;
}

RepMatrix evaluate(const AlgElement& a, const RepSpec& spec) {
  if (a.context() != 3) throw mismatched_context("representations live on A(3)");
  RepMatrix acc(spec.dim, spec.dim);
  for (const auto& [w, c] : a.terms()) acc = acc + c * evaluate(w, spec);
  return acc;
}

std::array<RepMatrix, 4> pi_evaluate(const AlgElement& a) {
  return {evaluate(a, rep(1)), evaluate(a, rep(2)), evaluate(a, rep(3)), evaluate(a, rep(4))};
}

std::array<RepMatrix, 4> pi_evaluate(const TraceWord& w) {
  return {evaluate(w, rep(1)), evaluate(w, rep(2)), evaluate(w, rep(3)), evaluate(w, rep(4))};
}

std::vector<RatFunc> pi_flatten(const std::array<RepMatrix, 4>& blocks) {
  std::vector<RatFunc> v;
  v.reserve(30);
  for (const RepMatrix& b : blocks)
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) v.push_back(b.at(i, j));
  return v;
}

RepMatrix braid_from_generators(int i, const RepSpec& spec) {
  if (i != 1 && i != 2) throw index_out_of_range("braid index must be 1 or 2");
  const RepMatrix& u = i == 1 ? spec.u1 : spec.u2;
  const RepMatrix& k = i == 1 ? spec.k1 : spec.k2;
  const RepMatrix& h = i == 1 ? spec.h1 : spec.h2;
  RepMatrix out = q_power(-4) * k + q_power(-5) * h -
                  (q_power(-7) * RepMatrix::identity(spec.dim) + q_power(-2) * u);
  return (RatFunc(1) / qq(2)) * out;
}

}  // namespace spin7

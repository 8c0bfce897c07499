#include "spin7/ybe.hpp"

#include <mutex>
#include <sstream>

#include "spin7/parallel.hpp"

namespace spin7 {

namespace {

RatFunc qq(int n) { return RatFunc(qint(n)); }

Gen U(int i) { return Gen{GenKind::U, i}; }

ParamElement lift(const AlgElement& a) {
  ParamElement out(a.context());
  for (const auto& [w, c] : a.terms()) out.add_term(w, UVPoly(c));
  return out;
}

UVPoly uv_scale(const UVPoly& p, const RatFunc& s) {
  return UVPoly(UPoly(s)) * p;
}

// Denominator (q - q^-1)^2 (q^2 - q^-2) of the R expansion.
RatFunc r_denominator() {
  RatFunc d1 = q_power(1) - q_power(-1);
  RatFunc d2 = q_power(2) - q_power(-2);
  return d1 * d1 * d2;
}

RatFunc qminus() { return q_power(1) - q_power(-1); }

RatFunc qminus4() {
  RatFunc d = qminus();
  return d * d * d * d;
}

// Weight slot order used for both eigenvalue tables.
const std::array<WeightLabel, 4> kWeights{WeightLabel::trivial, WeightLabel::vector_rep,
                                          WeightLabel::adjoint, WeightLabel::lambda2};

std::size_t weight_slot(WeightLabel w) {
  for (std::size_t k = 0; k < 4; ++k)
    if (kWeights[k] == w) return k;
  throw error("spin is not a tensor-square summand");
}

// Idempotent slot (by H eigenvalue order) attached to each weight, fixed by
// the trace computation once per process.
const std::array<std::size_t, 4>& weight_to_idempotent_slot() {
  static const std::array<std::size_t, 4> table = [] {
    TowerContext ctx(2);
    auto attachments = identify_weights(ctx);
    std::array<std::size_t, 4> t{};
    for (std::size_t s = 0; s < 4; ++s) t[weight_slot(attachments[s].weight)] = s;
    return t;
  }();
  return table;
}

}  // namespace

UVPoly uv_const(const RatFunc& c) { return UVPoly(UPoly(c)); }

UVPoly uv_monomial(const RatFunc& c, int du, int dv) {
  return UVPoly::monomial(UPoly::monomial(c, du), dv);
}

UVPoly spectral_factor(int s, int a, const SpectralArg& arg) {
  RatFunc cs = s == 1 ? arg.c : RatFunc(1) / arg.c;
  RatFunc cinv = s == 1 ? RatFunc(1) / arg.c : arg.c;
  UVPoly first = uv_monomial(cs * q_power(a), s * arg.du, s * arg.dv);
  UVPoly second = uv_monomial(cinv * q_power(-a), -s * arg.du, -s * arg.dv);
  return first - second;
}

ParamElement build_R(int i, int n, const SpectralArg& arg) {
  if (i < 1 || i > n - 1) throw index_out_of_range("R index out of range");
  auto f = [&](int a) { return spectral_factor(1, a, arg); };
  RatFunc inv_d = RatFunc(1) / r_denominator();

  UVPoly c_one = uv_scale(f(-5) * f(-3) * f(-2), RatFunc(0) - inv_d);
  UVPoly c_u = uv_scale(f(0) * f(-3) * f(-2), RatFunc(0) - inv_d);
  UVPoly c_k = uv_scale(f(0) * f(-5) * f(-2), inv_d);
  UVPoly c_h = uv_scale(f(0) * f(-5) * f(-3), inv_d);

  ParamElement out(n);
  out.add_term(TraceWord(n), c_one);
  out.add_term(TraceWord::canonicalize(n, {Gen{GenKind::U, i}}), c_u);
  out.add_term(TraceWord::canonicalize(n, {Gen{GenKind::K, i}}), c_k);
  out.add_term(TraceWord::canonicalize(n, {Gen{GenKind::H, i}}), c_h);
  return out;
}

UVPoly r_eigenvalue(WeightLabel w, const SpectralArg& arg) {
  auto f = [&](int a) { return spectral_factor(1, a, arg); };
  auto g = [&](int a) { return spectral_factor(-1, a, arg); };
  switch (w) {
    case WeightLabel::trivial: return f(5) * f(1) * f(-3);
    case WeightLabel::adjoint: return g(5) * f(1) * f(-3);
    case WeightLabel::lambda2: return g(5) * g(1) * f(-3);
    case WeightLabel::vector_rep: return g(5) * g(1) * g(-3);
    default: throw error("no R eigenvalue for this weight");
  }
}

UVPoly s_eigenvalue(WeightLabel w, const SpectralArg& arg) {
  auto f = [&](int a) { return spectral_factor(1, a, arg); };
  auto g = [&](int a) { return spectral_factor(-1, a, arg); };
  switch (w) {
    case WeightLabel::trivial: return UVPoly(-1) * (f(3) * f(2) * f(-1));
    case WeightLabel::vector_rep: return UVPoly(-1) * (g(3) * f(2) * f(-1));
    case WeightLabel::adjoint: return g(3) * g(2) * f(-1);
    case WeightLabel::lambda2: return g(3) * g(2) * g(-1);
    default: throw error("no S eigenvalue for this weight");
  }
}

ParamElement build_S(int i, int n, const SpectralArg& arg) {
  if (i < 1 || i > n - 1) throw index_out_of_range("S index out of range");
  RatFunc inv = RatFunc(1) / qminus4();
  ParamElement out(n);
  const auto& slot_of = weight_to_idempotent_slot();
  for (std::size_t k = 0; k < 4; ++k) {
    WeightLabel w = kWeights[k];
    UVPoly eig = uv_scale(s_eigenvalue(w, arg), inv);
    ParamElement pi = lift(shifted_idempotent(slot_of[k], i, n));
    out = out + eig * pi;
  }
  return out;
}

namespace {

ParamElement builder(YbeSolution which, int i, int n, const SpectralArg& arg) {
  return which == YbeSolution::R ? build_R(i, n, arg) : build_S(i, n, arg);
}

std::string first_term(const ParamElement& e) {
  if (e.is_zero()) return "0";
  const auto& [w, c] = *e.terms().begin();
  return to_string(w);
}

RulesOn<Rational> rules_at(const RuleSet& rs, const Rational& q0) {
  RulesOn<Rational> out;
  out.n = rs.context();
  for (const Rule& r : rs.rules()) {
    ElementT<Rational> rhs(rs.context());
    for (const auto& [w, c] : r.rhs.terms()) rhs.add_term(w, c.eval(q0));
    std::vector<Gen> letters = r.lhs.letters();
    std::sort(letters.begin(), letters.end());
    out.entries.push_back({r.lhs, std::move(rhs), std::move(letters)});
  }
  return out;
}

ElementT<Rational> eval_param(const ParamElement& e, const Rational& q0, const Rational& u0,
                              const Rational& v0) {
  ElementT<Rational> out(e.context());
  for (const auto& [word, poly] : e.terms()) {
    Rational acc = 0;
    if (!poly.is_zero()) {
      for (int b = poly.lo(); b <= poly.hi(); ++b) {
        UPoly inner = poly.coeff(b);
        if (inner.is_zero()) continue;
        for (int a = inner.lo(); a <= inner.hi(); ++a) {
          RatFunc c = inner.coeff(a);
          if (c.is_zero()) continue;
          acc += c.eval(q0) * rational_pow(u0, a) * rational_pow(v0, b);
        }
      }
    }
    out.add_term(word, acc);
  }
  return out;
}

Rational random_nonunit(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(2, 9), den(1, 7), sign(0, 1);
  Rational r;
  do {
    r = Rational(num(rng), den(rng));
    if (sign(rng)) r = -r;
  } while (r == 1 || r == -1);
  return r;
}

Rational random_nonzero(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 7), sign(0, 1);
  Rational r(num(rng), den(rng));
  if (sign(rng)) r = -r;
  return r;
}

}  // namespace

CheckOutcome check_ybe(YbeSolution which, YbeMode mode, unsigned seed) {
  const RuleSet rules = rules_for(3);
  auto arg_u = SpectralArg{RatFunc(1), 1, 0};
  auto arg_uv = SpectralArg{RatFunc(1), 1, 1};
  auto arg_v = SpectralArg{RatFunc(1), 0, 1};

  if (mode == YbeMode::symbolic) {
    ParamElement lhs =
        builder(which, 1, 3, arg_u) * builder(which, 2, 3, arg_uv) * builder(which, 1, 3, arg_v);
    ParamElement rhs =
        builder(which, 2, 3, arg_v) * builder(which, 1, 3, arg_uv) * builder(which, 2, 3, arg_u);
    Rewriter<UVPoly> rw(RulesOn<UVPoly>::from(rules));
    ParamElement diff = rw.normal_form(lhs - rhs);
    if (diff.is_zero()) return {true, "symbolic identity in q, u, v"};
    return {false, "nonzero difference at word " + first_term(diff)};
  }

  std::mt19937 rng(seed);
  const int points = 20;
  std::vector<CheckOutcome> results(static_cast<std::size_t>(points), CheckOutcome{});
  std::vector<std::array<Rational, 3>> samples;
  samples.reserve(points);
  for (int p = 0; p < points; ++p)
    samples.push_back({random_nonunit(rng), random_nonzero(rng), random_nonzero(rng)});

  parallel_for(static_cast<std::size_t>(points), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t p = lo; p < hi; ++p) {
      const auto& [q0, u0, v0] = samples[p];
      Rewriter<Rational> rw(rules_at(rules, q0));
      auto bval = [&](const ParamElement& sym) { return eval_param(sym, q0, u0, v0); };
      ElementT<Rational> lhs = rw.normal_form(
          bval(builder(which, 1, 3, arg_u)) * bval(builder(which, 2, 3, arg_uv)) *
          bval(builder(which, 1, 3, arg_v)));
      ElementT<Rational> rhs = rw.normal_form(
          bval(builder(which, 2, 3, arg_v)) * bval(builder(which, 1, 3, arg_uv)) *
          bval(builder(which, 2, 3, arg_u)));
      std::ostringstream os;
      os << "q=" << q0 << " u=" << u0 << " v=" << v0;
      results[p] = lhs == rhs ? CheckOutcome{true, os.str()}
                              : CheckOutcome{false, "mismatch at " + os.str()};
    }
  });

  std::string detail = "seed " + std::to_string(seed) + "; points:";
  for (const auto& r : results) {
    detail += " [" + r.detail + "]";
    if (!r.pass) return {false, detail};
  }
  return {true, detail};
}

CheckOutcome check_specializations() {
  struct Case {
    int power;
    RatFunc coeff;
    std::optional<GenKind> gen;
  };
  const std::vector<Case> cases{
      {0, qq(5) * qq(3), std::nullopt},
      {5, RatFunc(0) - qq(5) * qq(3), GenKind::U},
      {3, RatFunc(0) - qq(3), GenKind::K},
      {2, qq(3), GenKind::H},
  };
  for (const Case& c : cases) {
    ParamElement got = build_R(1, 3, SpectralArg{q_power(c.power), 0, 0});
    ParamElement want(3);
    TraceWord w = c.gen ? TraceWord::canonicalize(3, {Gen{*c.gen, 1}}) : TraceWord(3);
    want.add_term(w, uv_const(c.coeff));
    if (!(got == want))
      return {false, "R(q^" + std::to_string(c.power) + ") does not match the printed value"};
  }
  return {true, "R(1), R(q^5), R(q^3), R(q^2) match"};
}

CheckOutcome check_sandwich() {
  const RuleSet rules = rules_for(3);
  Rewriter<UVPoly> rw(RulesOn<UVPoly>::from(rules));
  SpectralArg u_arg{RatFunc(1), 1, 0};
  SpectralArg v_arg{RatFunc(1), 0, 1};
  SpectralArg q5_inv_u{q_power(5), -1, 0};
  SpectralArg q5_inv_v{q_power(5), 0, -1};
  auto f = [&](int a) { return spectral_factor(1, a, u_arg); };

  auto uw = [&](int i) { return lift(AlgElement::generator(3, U(i))); };

  // U_i R_{i+-1}(u) U_i = -(uq^-10 - u^-1 q^10)(uq^-6 - u^-1 q^6)(uq^-2 - u^-1 q^2)
  //                        / (q - q^-1)^3 * U_i
  RatFunc d = qminus();
  UVPoly scalar = uv_scale(f(-10) * f(-6) * f(-2), RatFunc(0) - RatFunc(1) / (d * d * d));
  for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
    ParamElement lhs = rw.normal_form(uw(i) * build_R(j, 3, u_arg) * uw(i));
    ParamElement want = scalar * rw.normal_form(uw(i));
    if (!(lhs == want)) return {false, "U R U scalar identity fails at i=" + std::to_string(i)};
  }

  // U_i U_{i+-1} R_i(u) = -U_i R_{i+-1}(q^5 u^-1) and its mirror.
  for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
    ParamElement lhs = rw.normal_form(uw(i) * uw(j) * build_R(i, 3, u_arg));
    ParamElement rhs = rw.normal_form(UVPoly(-1) * uw(i) * build_R(j, 3, q5_inv_u));
    if (!(lhs == rhs)) return {false, "U U R identity fails at i=" + std::to_string(i)};
    ParamElement lhs2 = rw.normal_form(build_R(i, 3, u_arg) * uw(j) * uw(i));
    ParamElement rhs2 = rw.normal_form(UVPoly(-1) * build_R(j, 3, q5_inv_u) * uw(i));
    if (!(lhs2 == rhs2)) return {false, "R U U identity fails at i=" + std::to_string(i)};
  }

  // R_i(u) U_{i+1} R_i(v) = R_{i+1}(q^5 u^-1) U_i R_{i+1}(q^5 v^-1); the
  // overall sign comes out positive when checked against the expansion.
  {
    ParamElement lhs = rw.normal_form(build_R(1, 3, u_arg) * uw(2) * build_R(1, 3, v_arg));
    ParamElement rhs = rw.normal_form(build_R(2, 3, q5_inv_u) * uw(1) * build_R(2, 3, q5_inv_v));
    if (!(lhs == rhs)) return {false, "R U R spectral-shift identity fails"};
  }
  return {true, "all U-sandwich identities hold symbolically"};
}

CheckOutcome check_unitarity(YbeSolution which) {
  const RuleSet rules = rules_for(2);
  Rewriter<UVPoly> rw(RulesOn<UVPoly>::from(rules));
  SpectralArg u_arg{RatFunc(1), 1, 0};
  SpectralArg uinv_arg{RatFunc(1), -1, 0};

  ParamElement prod = rw.normal_form(builder(which, 1, 2, u_arg) * builder(which, 1, 2, uinv_arg));
  if (prod.term_count() != 1 || !(prod.terms().begin()->first == TraceWord(2)))
    return {false, "product is not scalar"};
  UVPoly scalar = prod.terms().begin()->second;

  // The four eigenvalue products must coincide and explain the scalar.
  UVPoly expected;
  bool first = true;
  for (WeightLabel w : kWeights) {
    UVPoly prod_eig = which == YbeSolution::R
                          ? r_eigenvalue(w, u_arg) * r_eigenvalue(w, uinv_arg)
                          : s_eigenvalue(w, u_arg) * s_eigenvalue(w, uinv_arg);
    if (first) {
      expected = prod_eig;
      first = false;
    } else if (!(expected == prod_eig)) {
      return {false, "eigenvalue products differ between summands"};
    }
  }
  // R carries the spectral normalizer -(q-q^-1)^3, S the constructional
  // (q-q^-1)^4.
  RatFunc norm = which == YbeSolution::R ? qminus() * qminus() * qminus() : qminus4();
  RatFunc denom = norm * norm;
  if (!(uv_scale(expected, RatFunc(1) / denom) == scalar))
    return {false, "scalar does not match the common eigenvalue product"};
  return {true, "scalar with matching eigenvalue product"};
}

CheckOutcome check_distant_commute() {
  SpectralArg u_arg{RatFunc(1), 1, 0};
  SpectralArg v_arg{RatFunc(1), 0, 1};
  ParamElement a = build_R(1, 4, u_arg);
  ParamElement b = build_R(3, 4, v_arg);
  if (!(a * b == b * a)) return {false, "R_1(u) and R_3(v) fail to commute structurally"};
  return {true, "R_1(u) R_3(v) = R_3(v) R_1(u) in C(4)"};
}

CheckOutcome check_eigenvalue_table(TowerContext& ctx) {
  Rewriter<UVPoly> rw(RulesOn<UVPoly>::from(rules_for(2)));
  SpectralArg u_arg{RatFunc(1), 1, 0};
  auto attachments = identify_weights(ctx);
  // The printed rows are the eigenvalues of -(q-q^-1)^3 R(u); the exponent
  // printed alongside the table does not match its own u=1 specialization.
  RatFunc r_norm = RatFunc(0) - qminus() * qminus() * qminus();
  for (std::size_t s = 0; s < 4; ++s) {
    ParamElement pi = lift(spectral_idempotents()[s].element);
    WeightLabel w = attachments[s].weight;
    ParamElement lhs = rw.normal_form(uv_const(r_norm) * (build_R(1, 2, u_arg) * pi));
    ParamElement want = r_eigenvalue(w, u_arg) * rw.normal_form(pi);
    if (!(lhs == want))
      return {false, "R eigenvalue mismatch on the " +
                         std::string(to_string(spectral_idempotents()[s].eigenvalue)) +
                         " idempotent"};
    ParamElement lhs_s = rw.normal_form(uv_const(qminus4()) * (build_S(1, 2, u_arg) * pi));
    ParamElement want_s = s_eigenvalue(w, u_arg) * rw.normal_form(pi);
    if (!(lhs_s == want_s)) return {false, "S eigenvalue mismatch"};
  }
  return {true, "both eigenvalue tables match on the spectral idempotents"};
}

}  // namespace spin7

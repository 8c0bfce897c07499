#include "spin7/tower.hpp"

namespace spin7 {

namespace {

RatFunc qq(int n) { return RatFunc(qint(n)); }

Gen U(int i) { return Gen{GenKind::U, i}; }
Gen K(int i) { return Gen{GenKind::K, i}; }
Gen H(int i) { return Gen{GenKind::H, i}; }

}  // namespace

TowerContext::TowerContext(int n) : n_(n) {
  if (n < 1) throw index_out_of_range("tower level must be at least 1");
  for (int m = 2; m <= n + 1; ++m) {
    RuleSet rs = rules_for(m);
    TerminationReport report = check_termination(rs);
    if (!report.pass())
      throw order_violation("rule set for level " + std::to_string(m) + " is not terminal");
    rewriters_.push_back(std::make_unique<Rewriter<RatFunc>>(RulesOn<RatFunc>::from(rs)));
    rules_.push_back(std::move(rs));
  }
}

const RuleSet& TowerContext::rules(int m) const {
  if (m < 2 || m > n_ + 1) throw index_out_of_range("no rule set cached for this level");
  return rules_[static_cast<std::size_t>(m - 2)];
}

Rewriter<RatFunc>& TowerContext::rewriter(int m) {
  if (m < 2 || m > n_ + 1) throw index_out_of_range("no rewriter cached for this level");
  return *rewriters_[static_cast<std::size_t>(m - 2)];
}

AlgElement epsilon(TowerContext& ctx, int n, const AlgElement& a) {
  if (n < 1) throw index_out_of_range("epsilon needs n >= 1");
  if (a.context() != n) throw mismatched_context("element is not in A_P(n)");
  Rewriter<RatFunc>& rw = ctx.rewriter(n + 1);
  AlgElement u_n = AlgElement::generator(n + 1, U(n));
  AlgElement sandwiched = rw.normal_form(u_n * a.with_context(n + 1) * u_n);
  AlgElement out(std::max(n - 1, 1));
  for (const auto& [w, c] : sandwiched.terms()) {
    const auto& letters = w.letters();
    if (letters.empty() || !(letters.back() == U(n)))
      throw strip_failure("support word " + to_string(w) + " does not end in U_n");
    std::vector<Gen> rest(letters.begin(), letters.end() - 1);
    for (const Gen& g : rest) {
      if (g.index > n - 2)
        throw strip_failure("support word " + to_string(w) + " is not in A_P(n-1) U_n");
    }
    out.add_term(TraceWord::canonicalize(std::max(n - 1, 1), std::move(rest)), c);
  }
  return out;
}

RatFunc trace(TowerContext& ctx, int n, const AlgElement& a) {
  if (a.context() != n && !(n <= 1 && a.context() <= 1))
    throw mismatched_context("element is not in A_P(n)");
  if (n <= 1) {
    // A_P(0) and A_P(1) are spanned by the empty word.
    RatFunc out;
    for (const auto& [w, c] : a.terms()) {
      if (!w.empty()) throw mismatched_context("scalar algebra holds only the empty word");
      out = out + c;
    }
    return out;
  }
  const RatFunc norm = qq(5) * qq(3) / (qq(10) * qq(6) * qq(2));
  return norm * trace(ctx, n - 1, epsilon(ctx, n, a));
}

const std::array<SpectralIdempotent, 4>& spectral_idempotents() {
  static const std::array<SpectralIdempotent, 4> idems = [] {
    auto word1 = [](Gen g) { return AlgElement::generator(2, g); };
    AlgElement one = AlgElement::unit(2);

    RatFunc inv_loop = RatFunc(1) / loop_value();
    AlgElement pi_u = inv_loop * word1(U(1));

    RatFunc k_coeff = qq(3) / (qq(2) * qq(2) * qq(6));
    AlgElement pi_k = k_coeff * word1(K(1));

    RatFunc c22 = RatFunc(1) / (qq(2) * qq(2));
    RatFunc c23 = RatFunc(1) / (qq(2) * qq(2) * qq(2));
    RatFunc cu = qq(4) * qq(5) / (qq(2) * qq(2) * qq(2) * qq(10));
    AlgElement pi_e = c22 * one + c22 * word1(H(1)) + c23 * word1(K(1)) -
                      cu * word1(U(1));

    AlgElement pi_rest = one - pi_u - pi_k - pi_e;

    return std::array<SpectralIdempotent, 4>{
        SpectralIdempotent{qq(7), pi_u},
        SpectralIdempotent{RatFunc(0) - qq(5), pi_k},
        SpectralIdempotent{qq(3), pi_e},
        SpectralIdempotent{RatFunc(-1), pi_rest},
    };
  }();
  return idems;
}

AlgElement shifted_idempotent(std::size_t slot, int i, int n) {
  const AlgElement& base = spectral_idempotents()[slot].element;
  AlgElement out(n);
  for (const auto& [w, c] : base.terms()) {
    std::vector<Gen> letters = w.letters();
    for (Gen& g : letters) g.index += i - 1;
    out.add_term(TraceWord::canonicalize(n, std::move(letters)), c);
  }
  return out;
}

std::array<WeightAttachment, 4> identify_weights(TowerContext& ctx) {
  const RatFunc spin_sq = RatFunc(quantum_dim(WeightLabel::spin) * quantum_dim(WeightLabel::spin));
  const std::array<WeightLabel, 4> candidates{WeightLabel::trivial, WeightLabel::vector_rep,
                                              WeightLabel::adjoint, WeightLabel::lambda2};
  std::array<WeightAttachment, 4> out;
  std::array<bool, 4> used{};
  for (std::size_t s = 0; s < 4; ++s) {
    const SpectralIdempotent& idem = spectral_idempotents()[s];
    RatFunc t = trace(ctx, 2, idem.element);
    bool matched = false;
    for (std::size_t c = 0; c < 4 && !matched; ++c) {
      if (used[c]) continue;
      RatFunc expected = RatFunc(quantum_dim(candidates[c])) / spin_sq;
      if (t == expected) {
        out[s] = WeightAttachment{idem.eigenvalue, candidates[c], t};
        used[c] = true;
        matched = true;
      }
    }
    if (!matched)
      throw no_match("no tensor-square summand has normalized trace " + to_string(t));
  }
  return out;
}

AlgElement cell_idempotent(TowerContext& ctx, int a, int b, int c, int n) {
  if (a < 0 || b < 0 || c < 0 || 2 * a + 2 * b + 2 * c > n)
    throw bound_violation("cell idempotent needs 2a+2b+2c <= n");
  AlgElement prod = AlgElement::unit(n);
  // Slot order matches the eigenvalue list: u = [7], k = -[5], e = [3].
  for (int j = 0; j < a; ++j) prod = prod * shifted_idempotent(0, 2 * j + 1, n);
  for (int j = 0; j < b; ++j) prod = prod * shifted_idempotent(1, 2 * a + 2 * j + 1, n);
  for (int j = 0; j < c; ++j) prod = prod * shifted_idempotent(2, 2 * a + 2 * b + 2 * j + 1, n);
  if (n >= 2) return ctx.rewriter(n).normal_form(prod);
  return prod;
}

}  // namespace spin7

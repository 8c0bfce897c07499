#pragma once

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <vector>

#include "spin7/presentation.hpp"

namespace spin7 {

namespace detail {

// Coefficient embeddings used when a rule set acts on a wider scalar ring.
inline const RatFunc& lift_coeff(const RatFunc& c, const RatFunc*) { return c; }

template <class C>
C lift_coeff(const RatFunc& c, const C*) {
  return C(c);
}

}  // namespace detail

/// A rule set with right sides mapped into the coefficient ring C.
template <class C>
struct RulesOn {
  struct Entry {
    TraceWord lhs;
    ElementT<C> rhs;
    std::vector<Gen> sorted_letters;  // multiset prefilter
  };
  int n = 0;
  std::vector<Entry> entries;

  static RulesOn from(const RuleSet& rs) {
    RulesOn out;
    out.n = rs.context();
    out.entries.reserve(rs.size());
    for (const Rule& r : rs.rules()) {
      ElementT<C> rhs(rs.context());
      for (const auto& [w, c] : r.rhs.terms())
        rhs.add_term(w, detail::lift_coeff(c, static_cast<const C*>(nullptr)));
      std::vector<Gen> letters = r.lhs.letters();
      std::sort(letters.begin(), letters.end());
      out.entries.push_back(Entry{r.lhs, std::move(rhs), std::move(letters)});
    }
    return out;
  }
};

/// Rewriting engine over a fixed rule set; memoizes word normal forms.
/// Instances are not shared between threads; the rule set itself is
/// immutable and may be.
template <class C>
class Rewriter {
 public:
  explicit Rewriter(RulesOn<C> rules, bool reverse_rule_order = false)
      : rules_(std::move(rules)), reverse_(reverse_rule_order) {}

  static constexpr long long kStepBudget = 1'000'000;

  const RulesOn<C>& rules() const { return rules_; }
  int context() const { return rules_.n; }

  ElementT<C> normal_form(const ElementT<C>& a) {
    if (a.context() != rules_.n) throw mismatched_context("element does not match rule set");
    steps_ = 0;
    ElementT<C> out(rules_.n);
    for (const auto& [w, c] : a.terms()) {
      const ElementT<C>& nf = word_normal_form(w);
      for (const auto& [wn, cn] : nf.terms()) out.add_term(wn, c * cn);
    }
    return out;
  }

  ElementT<C> normal_form(const TraceWord& w) {
    steps_ = 0;
    return word_normal_form(w);
  }

  bool is_irreducible(const TraceWord& w) const { return find_redex(w) == nullptr; }

 private:
  const typename RulesOn<C>::Entry* find_redex(const TraceWord& w,
                                               std::pair<TraceWord, TraceWord>* split = nullptr) const {
    std::vector<Gen> letters = w.letters();
    std::sort(letters.begin(), letters.end());
    auto scan = [&](const typename RulesOn<C>::Entry& e) -> bool {
      if (e.sorted_letters.size() > letters.size()) return false;
      if (!std::includes(letters.begin(), letters.end(), e.sorted_letters.begin(),
                         e.sorted_letters.end()))
        return false;
      auto hit = factor_search(w, e.lhs);
      if (!hit) return false;
      if (split) *split = *hit;
      return true;
    };
    if (!reverse_) {
      for (const auto& e : rules_.entries)
        if (scan(e)) return &e;
    } else {
      for (auto it = rules_.entries.rbegin(); it != rules_.entries.rend(); ++it)
        if (scan(*it)) return &*it;
    }
    return nullptr;
  }

  const ElementT<C>& word_normal_form(const TraceWord& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    std::pair<TraceWord, TraceWord> split;
    const auto* rule = find_redex(w, &split);
    ElementT<C> out(rules_.n);
    if (!rule) {
      out.add_term(w, C(1));
    } else {
      if (++steps_ > kStepBudget)
        throw non_termination("rewrite step budget exceeded at " + to_string(w));
      const auto& [x, y] = split;
      // One step: w = x * lhs * y -> x * rhs * y, then recurse.
      for (const auto& [b, c] : rule->rhs.terms()) {
        TraceWord replaced = concat(concat(x, b), y);
        const ElementT<C> nf = word_normal_form(replaced);  // copy: cache may rehash
        for (const auto& [wn, cn] : nf.terms()) out.add_term(wn, c * cn);
      }
    }
    auto [pos, inserted] = cache_.emplace(w, std::move(out));
    return pos->second;
  }

  RulesOn<C> rules_;
  bool reverse_;
  std::unordered_map<TraceWord, ElementT<C>, TraceWordHash> cache_;
  long long steps_ = 0;
};

/// Convenience wrappers over a fresh RatFunc rewriter.
AlgElement normal_form(const AlgElement& a, const RuleSet& rules);
bool is_irreducible(const TraceWord& w, const RuleSet& rules);

/// Breadth-first irreducible-word enumeration, certified against the
/// dominant-walk dimension oracle and closed under one-letter extension.
std::vector<TraceWord> enumerate_irreducible(int n, const RuleSet& rules);
Int count_irreducible(int n, const RuleSet& rules);

struct TerminationViolation {
  TraceWord lhs;
  TraceWord offending;  // rhs support word not strictly below lhs
};

struct TerminationReport {
  std::size_t rules_checked = 0;
  std::vector<TerminationViolation> violations;
  bool pass() const { return violations.empty(); }
};

TerminationReport check_termination(const RuleSet& rules);

struct OverlapCase {
  TraceWord u, v, w;  // lhs1 = u*v*w with v the nonempty shared subtrace
  TraceWord word;     // overlap word u*lhs2*w, reducible through both rules
  TraceWord lhs1, lhs2;
  bool joinable = false;
  std::optional<AlgElement> left_nf, right_nf;  // kept for failures
};

struct OverlapReport {
  int n = 0;
  std::size_t total = 0;
  std::size_t joinable = 0;
  std::size_t distance2_pairs_checked = 0;  // guard sweep: must contribute none
  std::vector<OverlapCase> cases;
  bool all_joinable() const { return total == joinable; }
};

/// Diamond-lemma local confluence check: every overlap of two rule left
/// sides must rejoin. Requires a terminal rule set.
OverlapReport check_local_confluence(const RuleSet& rules, bool keep_cases = true);

/// Bounded Knuth-Bendix completion under the reduction order: orient every
/// non-joinable critical pair into a new rule, inter-reduce, repeat until
/// every overlap joins. Throws non_termination if the budget runs out and
/// order_violation if some critical pair cannot be oriented.
RuleSet complete_rules(const RuleSet& base, std::size_t max_new_rules = 512);

/// All two-sided factorizations word = x * y.
std::vector<std::pair<TraceWord, TraceWord>> two_factorizations(const TraceWord& w);

}  // namespace spin7

#include "spin7/rewrite.hpp"

#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>

#include "spin7/crystal.hpp"
#include "spin7/parallel.hpp"

namespace spin7 {

AlgElement normal_form(const AlgElement& a, const RuleSet& rules) {
  Rewriter<RatFunc> rw(RulesOn<RatFunc>::from(rules));
  return rw.normal_form(a);
}

bool is_irreducible(const TraceWord& w, const RuleSet& rules) {
  Rewriter<RatFunc> rw(RulesOn<RatFunc>::from(rules));
  return rw.is_irreducible(w);
}

std::vector<TraceWord> enumerate_irreducible(int n, const RuleSet& rules) {
  if (rules.context() != n) throw mismatched_context("rule set context mismatch");
  Rewriter<RatFunc> rw(RulesOn<RatFunc>::from(rules));
  const Int oracle = count_dominant_walks(2 * n);
  const int max_len = n * (n - 1) / 2 + 2;

  std::vector<Gen> gens;
  for (int i = 1; i <= n - 1; ++i)
    for (GenKind k : {GenKind::U, GenKind::K, GenKind::H}) gens.push_back(Gen{k, i});

  std::set<TraceWord> all;
  std::vector<TraceWord> level{TraceWord(n)};
  all.insert(TraceWord(n));
  Int total = 1;

  auto finish = [&]() {
    // Closure certificate: one-letter extensions reduce into the
    // enumerated set, so nothing of any length is missing.
    for (const TraceWord& w : all) {
      for (const Gen& g : gens) {
        TraceWord ext = concat(w, TraceWord::canonicalize(n, {g}));
        AlgElement nf = rw.normal_form(AlgElement::word(ext));
        for (const auto& [word, c] : nf.terms()) {
          if (!all.count(word))
            throw oracle_mismatch("closure failure: " + to_string(word) +
                                  " missing from the enumeration");
        }
      }
    }
    return std::vector<TraceWord>(all.begin(), all.end());
  };

  if (total == oracle) return finish();
  for (int len = 1; len <= max_len; ++len) {
    std::vector<TraceWord> next;
    for (const TraceWord& w : level) {
      for (const Gen& g : gens) {
        TraceWord ext = concat(w, TraceWord::canonicalize(n, {g}));
        if (all.count(ext)) continue;
        if (!rw.is_irreducible(ext)) continue;
        all.insert(ext);
        next.push_back(ext);
        total += 1;
      }
    }
    if (total == oracle) return finish();
    if (total > oracle)
      throw oracle_mismatch("irreducible count exceeds the walk oracle at length " +
                            std::to_string(len));
    if (next.empty())
      throw oracle_mismatch("enumeration stalled below the walk oracle");
    level = std::move(next);
  }
  throw oracle_mismatch("length bound exhausted without matching the walk oracle");
}

Int count_irreducible(int n, const RuleSet& rules) {
  return Int(enumerate_irreducible(n, rules).size());
}

TerminationReport check_termination(const RuleSet& rules) {
  TerminationReport report;
  report.rules_checked = rules.size();
  for (const Rule& r : rules.rules()) {
    for (const auto& [w, c] : r.rhs.terms()) {
      if (reduction_compare(w, r.lhs) != WordOrder::LESS)
        report.violations.push_back(TerminationViolation{r.lhs, w});
    }
  }
  return report;
}

std::vector<std::pair<TraceWord, TraceWord>> two_factorizations(const TraceWord& w) {
  // Assign each letter to the left or right part; valid when no
  // non-commuting pair straddles right-before-left.
  std::vector<std::pair<TraceWord, TraceWord>> out;
  const auto& letters = w.letters();
  std::vector<Gen> left, right;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == letters.size()) {
      out.emplace_back(TraceWord::canonicalize(w.context(), left),
                       TraceWord::canonicalize(w.context(), right));
      return;
    }
    const Gen& c = letters[i];
    bool can_left = true;
    for (const Gen& g : right)
      if (!commutes(c, g)) {
        can_left = false;
        break;
      }
    if (can_left) {
      left.push_back(c);
      self(self, i + 1);
      left.pop_back();
    }
    right.push_back(c);
    self(self, i + 1);
    right.pop_back();
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::string element_key(const AlgElement& e) {
  std::string s;
  for (const auto& [w, c] : e.terms()) {
    s += to_string(w);
    s += '=';
    s += to_string(c);
    s += ';';
  }
  return s;
}

// All elements reachable by exactly one rewrite step anywhere.
std::vector<AlgElement> one_step_reducts(const AlgElement& e, const RuleSet& rules) {
  std::vector<AlgElement> out;
  for (const auto& [word, coeff] : e.terms()) {
    for (const Rule& r : rules.rules()) {
      for (const auto& [x, y] : factor_occurrences(word, r.lhs)) {
        AlgElement replaced = AlgElement::word(x) * r.rhs * AlgElement::word(y);
        AlgElement next = e;
        next.add_term(word, RatFunc(0) - coeff);
        out.push_back(next + coeff * replaced);
      }
    }
  }
  return out;
}

// Exhaustive joinability: collect every normal form reachable from e.
void reachable_normal_forms(const AlgElement& e, const RuleSet& rules,
                            std::set<std::string>& seen, std::set<std::string>& normal,
                            std::map<std::string, AlgElement>& reps, long long& budget) {
  if (--budget < 0) throw non_termination("joinability search budget exceeded");
  std::string key = element_key(e);
  if (!seen.insert(key).second) return;
  std::vector<AlgElement> reducts = one_step_reducts(e, rules);
  if (reducts.empty()) {
    normal.insert(key);
    reps.emplace(key, e);
    return;
  }
  for (const AlgElement& r : reducts)
    reachable_normal_forms(r, rules, seen, normal, reps, budget);
}

bool exhaustively_joinable(const AlgElement& a, const AlgElement& b, const RuleSet& rules) {
  std::set<std::string> seen_a, nf_a, seen_b, nf_b;
  std::map<std::string, AlgElement> reps;
  long long budget = 20000;
  reachable_normal_forms(a, rules, seen_a, nf_a, reps, budget);
  reachable_normal_forms(b, rules, seen_b, nf_b, reps, budget);
  for (const std::string& k : nf_a)
    if (nf_b.count(k)) return true;
  return false;
}

std::pair<int, int> index_support(const TraceWord& w) {
  int lo = 1 << 20, hi = 0;
  for (const Gen& g : w.letters()) {
    lo = std::min(lo, g.index);
    hi = std::max(hi, g.index);
  }
  return {lo, hi};
}

bool supports_intersect(const TraceWord& a, const TraceWord& b) {
  auto [la, ha] = index_support(a);
  auto [lb, hb] = index_support(b);
  return std::max(la, lb) <= std::min(ha, hb);
}

struct OverlapTask {
  TraceWord u, v, w;  // lhs1 = u * v * w with v the shared subtrace
  TraceWord word;     // the overlap word u * lhs2 * w
  TraceWord lhs1, lhs2;
};

// Critical configurations of two rules in the commutation monoid. Whenever
// a word carries redexes of lhs1 and lhs2 on overlapping letter sets, the
// restriction to the union of the two redexes can be written as u * lhs2 * w
// where lhs1 = u * v * w for a nonempty shared part v (reading the letters
// in occurrence order). Suffix-prefix overlaps are the case w = empty; the
// mixed shapes with both sides nonempty are genuinely needed here.
std::vector<OverlapTask> enumerate_overlaps(const std::vector<Rule>& rules) {
  std::vector<OverlapTask> tasks;
  std::set<std::array<TraceWord, 3>> dedupe;  // (word, lhs1, lhs2)
  std::vector<std::vector<std::pair<TraceWord, TraceWord>>> splits;
  splits.reserve(rules.size());
  for (const Rule& r : rules) splits.push_back(two_factorizations(r.lhs));
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = 0; j < rules.size(); ++j) {
      if (!supports_intersect(rules[i].lhs, rules[j].lhs)) continue;
      const TraceWord& l2 = rules[j].lhs;
      for (const auto& [u, rest] : splits[i]) {
        for (const auto& [v, w] : two_factorizations(rest)) {
          if (v.empty()) continue;
          TraceWord word = concat(u, concat(l2, w));
          if (!factor_search(word, rules[i].lhs)) continue;
          if (dedupe.insert({word, rules[i].lhs, l2}).second)
            tasks.push_back(OverlapTask{u, v, w, word, rules[i].lhs, l2});
        }
      }
    }
  }
  return tasks;
}

}  // namespace

namespace {

// One-step reducts of a single word, one element per (rule, occurrence).
std::vector<AlgElement> word_reducts(const TraceWord& word, const RuleSet& rules) {
  std::vector<AlgElement> out;
  std::vector<Gen> sorted = word.letters();
  std::sort(sorted.begin(), sorted.end());
  for (const Rule& r : rules.rules()) {
    if (r.lhs.size() > word.size()) continue;
    std::vector<Gen> rl = r.lhs.letters();
    std::sort(rl.begin(), rl.end());
    if (!std::includes(sorted.begin(), sorted.end(), rl.begin(), rl.end())) continue;
    for (const auto& [x, y] : factor_occurrences(word, r.lhs))
      out.push_back(AlgElement::word(x) * r.rhs * AlgElement::word(y));
  }
  return out;
}

}  // namespace

OverlapReport check_local_confluence(const RuleSet& rules, bool keep_cases) {
  OverlapReport report;
  report.n = rules.context();

  std::vector<OverlapTask> tasks = enumerate_overlaps(rules.rules());

  // Guard sweep: rule pairs whose index supports are disjoint but within
  // distance two cannot share letters, hence cannot overlap; verify rather
  // than assume.
  for (const Rule& r1 : rules.rules()) {
    for (const Rule& r2 : rules.rules()) {
      if (supports_intersect(r1.lhs, r2.lhs)) continue;
      auto [la, ha] = index_support(r1.lhs);
      auto [lb, hb] = index_support(r2.lhs);
      int gap = std::max(lb - ha, la - hb);
      if (gap > 2) continue;
      ++report.distance2_pairs_checked;
      for (const auto& [u, rest] : two_factorizations(r1.lhs)) {
        for (const auto& [v, w] : two_factorizations(rest)) {
          if (v.empty()) continue;
          TraceWord word = concat(u, concat(r2.lhs.with_context(r1.lhs.context()), w));
          if (factor_search(word, r1.lhs))
            throw error("unexpected overlap between distant rules");
        }
      }
    }
  }

  report.total = tasks.size();

  // Several rule pairs usually share an overlap word; evaluate each word
  // once by joining every one-step reduct it has.
  std::vector<TraceWord> words;
  {
    std::set<TraceWord> seen;
    for (const OverlapTask& t : tasks)
      if (seen.insert(t.word).second) words.push_back(t.word);
  }
  struct WordVerdict {
    bool joinable = true;
    std::optional<AlgElement> left_nf, right_nf;
  };
  std::vector<WordVerdict> verdicts(words.size());

  parallel_for(words.size(), [&](std::size_t lo, std::size_t hi) {
    Rewriter<RatFunc> rw(RulesOn<RatFunc>::from(rules));
    for (std::size_t t = lo; t < hi; ++t) {
      std::vector<AlgElement> reducts = word_reducts(words[t], rules);
      WordVerdict v;
      AlgElement nf0 = rw.normal_form(reducts.front());
      for (std::size_t k = 1; k < reducts.size(); ++k) {
        AlgElement nfk = rw.normal_form(reducts[k]);
        if (nfk == nf0) continue;
        if (!exhaustively_joinable(reducts.front(), reducts[k], rules)) {
          v.joinable = false;
          v.left_nf = nf0;
          v.right_nf = nfk;
          break;
        }
      }
      verdicts[t] = std::move(v);
    }
  });

  std::map<TraceWord, std::size_t> word_index;
  for (std::size_t i = 0; i < words.size(); ++i) word_index[words[i]] = i;
  for (const OverlapTask& t : tasks) {
    const WordVerdict& v = verdicts[word_index[t.word]];
    if (v.joinable) ++report.joinable;
    if (keep_cases || !v.joinable) {
      OverlapCase c;
      c.u = t.u;
      c.v = t.v;
      c.w = t.w;
      c.word = t.word;
      c.lhs1 = t.lhs1;
      c.lhs2 = t.lhs2;
      c.joinable = v.joinable;
      if (!v.joinable) {
        c.left_nf = v.left_nf;
        c.right_nf = v.right_nf;
      }
      report.cases.push_back(std::move(c));
    }
  }
  return report;
}

namespace {

// Orient an ideal element as a rewrite rule: the left side must dominate
// every other support word in the reduction order.
Rule orient(const AlgElement& identity) {
  for (const auto& [cand, coeff] : identity.terms()) {
    bool dominant = true;
    for (const auto& [other, c2] : identity.terms()) {
      if (other == cand) continue;
      if (reduction_compare(other, cand) != WordOrder::LESS) {
        dominant = false;
        break;
      }
    }
    if (!dominant) continue;
    AlgElement rhs(identity.context());
    for (const auto& [w, c] : identity.terms()) {
      if (w == cand) continue;
      rhs.add_term(w, RatFunc(0) - c / coeff);
    }
    return Rule{cand, std::move(rhs)};
  }
  throw order_violation("critical pair cannot be oriented: " + to_string(identity));
}

}  // namespace

RuleSet complete_rules(const RuleSet& base, std::size_t max_new_rules) {
  std::vector<Rule> rules = base.rules();
  std::size_t added = 0;
  const bool debug = std::getenv("SPIN7_DEBUG_COMPLETION") != nullptr;
  int sweep = 0;

  for (;;) {
    // Sweep all critical pairs under the current rules, one evaluation per
    // distinct overlap word.
    std::vector<OverlapTask> tasks = enumerate_overlaps(rules);
    std::vector<TraceWord> words;
    {
      std::set<TraceWord> seen;
      for (const OverlapTask& t : tasks)
        if (seen.insert(t.word).second) words.push_back(t.word);
    }
    if (debug)
      std::fprintf(stderr, "[completion] sweep %d: %zu rules, %zu overlaps, %zu words\n",
                   ++sweep, rules.size(), tasks.size(), words.size());
    RuleSet current(base.context(), rules);
    std::vector<AlgElement> disagreements(words.size(), AlgElement(base.context()));
    parallel_for(words.size(), [&](std::size_t lo, std::size_t hi) {
      Rewriter<RatFunc> rw(RulesOn<RatFunc>::from(current));
      for (std::size_t t = lo; t < hi; ++t) {
        std::vector<AlgElement> reducts = word_reducts(words[t], current);
        AlgElement nf0 = rw.normal_form(reducts.front());
        for (std::size_t k = 1; k < reducts.size(); ++k) {
          AlgElement nfk = rw.normal_form(reducts[k]);
          if (!(nfk == nf0)) {
            disagreements[t] = nf0 - nfk;
            break;
          }
        }
      }
    });

    bool clean = true;
    for (std::size_t t = 0; t < words.size(); ++t) {
      if (disagreements[t].is_zero()) continue;
      clean = false;
      // Reduce the disagreement against rules added earlier in this pass.
      Rewriter<RatFunc> rw(RulesOn<RatFunc>::from(RuleSet(base.context(), rules)));
      AlgElement diff = rw.normal_form(disagreements[t]);
      if (diff.is_zero()) continue;
      Rule rule = orient(diff);
      for (const auto& [w, c] : rule.rhs.terms()) {
        if (reduction_compare(w, rule.lhs) != WordOrder::LESS)
          throw order_violation("completion produced an unorientable rule");
      }
      if (++added > max_new_rules)
        throw non_termination("completion budget exceeded");
      if (debug)
        std::fprintf(stderr, "[completion]   new rule (len %zu): %s\n", rule.lhs.size(),
                     to_string(rule.lhs).c_str());
      rules.push_back(std::move(rule));
    }
    if (!clean) continue;

    // Inter-reduce: drop rules whose left side another rule reduces, and
    // keep every right side fully reduced.
    bool changed = false;
    for (std::size_t i = 0; i < rules.size();) {
      bool reducible = false;
      for (std::size_t j = 0; j < rules.size() && !reducible; ++j) {
        if (j == i) continue;
        if (rules[j].lhs.size() > rules[i].lhs.size()) continue;
        reducible = factor_search(rules[i].lhs, rules[j].lhs).has_value();
      }
      if (!reducible) {
        ++i;
        continue;
      }
      std::vector<Rule> others;
      others.reserve(rules.size() - 1);
      for (std::size_t j = 0; j < rules.size(); ++j)
        if (j != i) others.push_back(rules[j]);
      Rewriter<RatFunc> rw(RulesOn<RatFunc>::from(RuleSet(base.context(), others)));
      AlgElement residual =
          rw.normal_form(AlgElement::word(rules[i].lhs)) - rw.normal_form(rules[i].rhs);
      rules = std::move(others);
      if (!residual.is_zero()) {
        rules.push_back(orient(residual));
        if (++added > max_new_rules) throw non_termination("completion budget exceeded");
      }
      changed = true;
      i = 0;
    }
    {
      Rewriter<RatFunc> rw(RulesOn<RatFunc>::from(RuleSet(base.context(), rules)));
      for (Rule& r : rules) {
        AlgElement reduced = rw.normal_form(r.rhs);
        if (!(reduced == r.rhs)) {
          r.rhs = std::move(reduced);
          changed = true;
        }
      }
    }
    if (!changed) return RuleSet(base.context(), std::move(rules));
  }
}

}  // namespace spin7

#include "spin7/presentation.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>

#include "spin7/reps.hpp"
#include "spin7/rewrite.hpp"

namespace spin7 {

namespace {

RatFunc qq(int n) { return RatFunc(qint(n)); }

RatFunc qfrac(std::initializer_list<int> num, std::initializer_list<int> den) {
  LaurentPoly a{Int(1)}, b{Int(1)};
  for (int k : num) a = a * qint(k);
  for (int k : den) b = b * qint(k);
  return RatFunc(exact_div(a, b));
}

Gen U(int i) { return Gen{GenKind::U, i}; }
Gen K(int i) { return Gen{GenKind::K, i}; }
Gen H(int i) { return Gen{GenKind::H, i}; }

TraceWord tw(int n, std::vector<Gen> gens) { return TraceWord::canonicalize(n, std::move(gens)); }

AlgElement el(int n, std::initializer_list<std::pair<RatFunc, std::vector<Gen>>> terms) {
  AlgElement e(n);
  for (const auto& [c, gens] : terms) e.add_term(tw(n, gens), c);
  return e;
}

}  // namespace

RatFunc loop_value() { return qfrac({10, 6, 2}, {5, 3}); }

std::vector<Relation> relations_at(int i, int n) {
  if (i < 1 || i > n - 1) throw index_out_of_range("relation index out of range");
  std::vector<Relation> rels;

  const RatFunc big = qfrac({2, 2, 6}, {3});  // [2]^2 [6] / [3]
  const RatFunc sq42 = qfrac({4}, {2});

  // Two string relations at index i.
  auto two = [&](std::vector<Gen> lhs, AlgElement rhs) {
    rels.push_back({tw(n, std::move(lhs)), std::move(rhs), RelationFamily::TWO_STRING});
  };
  two({U(i), U(i)}, el(n, {{loop_value(), {U(i)}}}));
  two({U(i), H(i)}, el(n, {{qq(7), {U(i)}}}));
  two({U(i), K(i)}, AlgElement(n));
  two({H(i), U(i)}, el(n, {{qq(7), {U(i)}}}));
  two({H(i), H(i)},
      el(n, {{qq(3), {}}, {sq42, {H(i)}}, {qq(4), {U(i)}}, {qq(4), {K(i)}}}));
  two({H(i), K(i)}, el(n, {{RatFunc(0) - qq(5), {K(i)}}}));
  two({K(i), U(i)}, AlgElement(n));
  two({K(i), H(i)}, el(n, {{RatFunc(0) - qq(5), {K(i)}}}));
  two({K(i), K(i)}, el(n, {{big, {K(i)}}}));

  if (i > n - 2) return rels;

  // Three string relations on the pair (a, b), both orientations.
  for (auto [a, b] : {std::pair{i, i + 1}, std::pair{i + 1, i}}) {
    auto add = [&](RelationFamily fam, std::vector<Gen> lhs, AlgElement rhs) {
      rels.push_back({tw(n, std::move(lhs)), std::move(rhs), fam});
    };
    const RatFunc m5 = RatFunc(0) - qq(5);

    // isotopy
    add(RelationFamily::THREE_ISOTOPY, {U(a), U(b), U(a)}, el(n, {{RatFunc(1), {U(a)}}}));
    add(RelationFamily::THREE_ISOTOPY, {U(a), H(b), U(a)}, AlgElement(n));
    add(RelationFamily::THREE_ISOTOPY, {U(a), U(b), H(a)}, el(n, {{RatFunc(1), {U(a), K(b)}}}));
    add(RelationFamily::THREE_ISOTOPY, {U(a), U(b), K(a)}, el(n, {{RatFunc(1), {U(a), H(b)}}}));
    add(RelationFamily::THREE_ISOTOPY, {H(a), U(b), U(a)}, el(n, {{RatFunc(1), {K(b), U(a)}}}));
    add(RelationFamily::THREE_ISOTOPY, {K(a), U(b), U(a)}, el(n, {{RatFunc(1), {H(b), U(a)}}}));
    add(RelationFamily::THREE_ISOTOPY, {K(a), U(b), K(a)},
        el(n, {{RatFunc(1), {H(b), U(a), H(b)}}}));

    // ideal relations from the basic relations
    add(RelationFamily::THREE_BASIC, {U(a), K(b), U(a)}, el(n, {{qq(7), {U(a)}}}));
    add(RelationFamily::THREE_BASIC, {U(a), K(b), K(a)}, el(n, {{m5, {U(a), H(b)}}}));
    add(RelationFamily::THREE_BASIC, {K(a), K(b), U(a)}, el(n, {{m5, {H(b), U(a)}}}));
    add(RelationFamily::THREE_BASIC, {U(a), H(b), U(a)}, AlgElement(n));
    add(RelationFamily::THREE_BASIC, {U(a), H(b), K(a)}, el(n, {{big, {U(a), H(b)}}}));
    add(RelationFamily::THREE_BASIC, {K(a), H(b), U(a)}, el(n, {{big, {H(b), U(a)}}}));
    add(RelationFamily::THREE_BASIC, {U(a), H(b), H(a)}, el(n, {{m5, {U(a), H(b)}}}));
    add(RelationFamily::THREE_BASIC, {H(a), H(b), U(a)}, el(n, {{m5, {H(b), U(a)}}}));
    add(RelationFamily::THREE_BASIC, {K(a), H(b), K(a)}, AlgElement(n));

    // square relations
    add(RelationFamily::THREE_SQUARE, {U(a), K(b), H(a)},
        el(n, {{qq(4), {U(a)}},
               {qq(3), {U(a), U(b)}},
               {sq42, {U(a), K(b)}},
               {qq(4), {U(a), H(b)}}}));
    add(RelationFamily::THREE_SQUARE, {H(a), K(b), U(a)},
        el(n, {{qq(4), {U(a)}},
               {qq(3), {U(b), U(a)}},
               {sq42, {K(b), U(a)}},
               {qq(4), {H(b), U(a)}}}));
    add(RelationFamily::THREE_SQUARE, {K(a), K(b), K(a)},
        el(n, {{qq(2) * qq(2), {K(a)}}, {qq(3), {K(a), U(b), K(a)}}}));
    add(RelationFamily::THREE_SQUARE, {H(a), H(b), K(a)},
        el(n, {{qq(2) * qq(2), {U(a), H(b)}}, {qq(3), {H(b), K(a)}}}));
    add(RelationFamily::THREE_SQUARE, {K(a), H(b), H(a)},
        el(n, {{qq(2) * qq(2), {H(b), U(a)}}, {qq(3), {K(a), H(b)}}}));

    // pentagon relations
    const RatFunc m1 = RatFunc(-1);
    const RatFunc m2 = RatFunc(0) - qq(2);
    add(RelationFamily::PENTAGON, {K(a), K(b), H(a)},
        el(n, {{m1, {K(a), K(b)}},
               {m1, {K(a), U(b)}},
               {m1, {K(a), U(b), H(a)}},
               {m2, {K(a)}},
               {m2, {K(a), H(b)}},
               {m2, {K(a), U(b), K(a)}},
               {m2, {K(a), U(b), U(a)}}}));
    add(RelationFamily::PENTAGON, {H(a), K(b), K(a)},
        el(n, {{m1, {K(b), K(a)}},
               {m1, {U(b), K(a)}},
               {m1, {H(a), U(b), K(a)}},
               {m2, {K(a)}},
               {m2, {H(b), K(a)}},
               {m2, {K(a), U(b), K(a)}},
               {m2, {U(a), U(b), K(a)}}}));
    add(RelationFamily::PENTAGON, {H(a), H(b), H(a)},
        el(n, {{m1, {H(a), H(b)}},
               {m1, {H(b)}},
               {m1, {H(b), H(a)}},
               {m2, {U(a), H(b)}},
               {m2, {H(b), U(a)}},
               {m2, {K(a), H(b)}},
               {m2, {H(b), K(a)}}}));
  }

  // Hexagon relation, rewritten form, oriented at H_{i+1} K_i H_{i+1}.
  {
    int a = i, b = i + 1;
    const RatFunc one(1), m1(-1);
    AlgElement rhs = el(
        n, {{m1, {H(b), U(a), H(b)}},
            {one, {U(b), H(a)}},
            {one, {H(a), U(b)}},
            {one, {K(b), H(a)}},
            {one, {H(a), K(b)}},
            {one, {U(b)}},
            {one, {K(b)}},
            {one, {H(a), K(b), H(a)}},
            {one, {H(a), U(b), H(a)}},
            {m1, {U(a), H(b)}},
            {m1, {H(b), U(a)}},
            {m1, {K(a), H(b)}},
            {m1, {H(b), K(a)}},
            {m1, {U(a)}},
            {m1, {K(a)}}});
    rels.push_back({tw(n, {H(b), K(a), H(b)}), std::move(rhs), RelationFamily::HEXAGON});
  }

  return rels;
}

std::vector<Relation> all_relations(int n) {
  std::vector<Relation> rels;
  for (int i = 1; i <= n - 1; ++i) {
    auto part = relations_at(i, n);
    rels.insert(rels.end(), part.begin(), part.end());
  }
  return rels;
}

const std::vector<TraceWord>& basis30() {
  static std::vector<TraceWord> basis = [] {
    std::vector<TraceWord> b;
    b.push_back(tw(3, {}));
    const std::array<GenKind, 3> kinds{GenKind::U, GenKind::K, GenKind::H};
    for (int i : {1, 2})
      for (GenKind k : kinds) b.push_back(tw(3, {Gen{k, i}}));
    for (GenKind x : kinds)
      for (GenKind y : kinds) {
        b.push_back(tw(3, {Gen{x, 1}, Gen{y, 2}}));
        b.push_back(tw(3, {Gen{x, 2}, Gen{y, 1}}));
      }
    b.push_back(tw(3, {H(1), K(2), H(1)}));
    b.push_back(tw(3, {H(1), U(2), H(1)}));
    b.push_back(tw(3, {H(1), U(2), K(1)}));
    b.push_back(tw(3, {K(1), U(2), H(1)}));
    b.push_back(tw(3, {K(1), U(2), K(1)}));
    std::sort(b.begin(), b.end());
    return b;
  }();
  return basis;
}

RuleSet::RuleSet(int n, std::vector<Rule> rules) : n_(n), rules_(std::move(rules)) {
  std::sort(rules_.begin(), rules_.end(),
            [](const Rule& a, const Rule& b) { return a.lhs < b.lhs; });
}

const Rule* RuleSet::find(const TraceWord& lhs) const {
  auto it = std::lower_bound(rules_.begin(), rules_.end(), lhs,
                             [](const Rule& r, const TraceWord& w) { return r.lhs < w; });
  if (it != rules_.end() && it->lhs == lhs) return &*it;
  return nullptr;
}

namespace {

// All words of the four rewrite-pattern types in C(3).
std::vector<TraceWord> pattern_words() {
  const std::array<GenKind, 3> kinds{GenKind::U, GenKind::K, GenKind::H};
  std::vector<TraceWord> out;
  for (GenKind x : kinds)
    for (GenKind y : kinds) {
      out.push_back(tw(3, {Gen{x, 1}, Gen{y, 1}}));
      out.push_back(tw(3, {Gen{x, 2}, Gen{y, 2}}));
      for (GenKind z : kinds) {
        out.push_back(tw(3, {Gen{x, 1}, Gen{y, 2}, Gen{z, 1}}));
        out.push_back(tw(3, {Gen{x, 2}, Gen{y, 1}, Gen{z, 2}}));
      }
    }
  return out;
}

}  // namespace

const RuleSet& derive_rules3() {
  static RuleSet rules = [] {
    const std::vector<TraceWord>& basis = basis30();

    RepMatrix a(30, 30);
    for (int col = 0; col < 30; ++col) {
      std::vector<RatFunc> v = pi_flatten(pi_evaluate(basis[static_cast<std::size_t>(col)]));
      for (int row = 0; row < 30; ++row) a.at(row, col) = v[static_cast<std::size_t>(row)];
    }

    std::vector<TraceWord> targets;
    for (const TraceWord& w : pattern_words()) {
      if (std::binary_search(basis.begin(), basis.end(), w)) continue;
      targets.push_back(w);
    }
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

    std::vector<std::vector<RatFunc>> columns;
    columns.reserve(targets.size());
    for (const TraceWord& w : targets) columns.push_back(pi_flatten(pi_evaluate(w)));

    std::vector<std::vector<RatFunc>> solutions = solve_batch(a, columns);

    std::vector<Rule> rules;
    rules.reserve(targets.size());
    for (std::size_t t = 0; t < targets.size(); ++t) {
      AlgElement rhs(3);
      for (std::size_t b = 0; b < 30; ++b) rhs.add_term(basis[b], solutions[t][b]);
      for (const auto& [w, c] : rhs.terms()) {
        if (reduction_compare(w, targets[t]) != WordOrder::LESS)
          throw order_violation("rule right side is not below " + to_string(targets[t]) +
                                ": " + to_string(w));
      }
      rules.push_back(Rule{targets[t], std::move(rhs)});
    }
    return RuleSet(3, std::move(rules));
  }();
  return rules;
}

RuleSet rules_for(int n) {
  if (n < 2) return RuleSet(std::max(n, 0), {});

  static std::mutex cache_mutex;
  static std::map<int, RuleSet> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }

  auto shift_word = [](const TraceWord& w, int offset, int n_out) {
    std::vector<Gen> letters = w.letters();
    for (Gen& g : letters) g.index += offset;
    return TraceWord::canonicalize(n_out, std::move(letters));
  };

  // Shift the widest completed window available; the three-index window of
  // n=4 already carries the critical-pair closure.
  const RuleSet window = n >= 5 ? rules_for(4) : derive_rules3();
  int window_top = n >= 5 ? 3 : 2;

  std::map<TraceWord, AlgElement> merged;
  int max_shift = std::max(0, n - window_top - 1);
  for (int s = 0; s <= max_shift; ++s) {
    for (const Rule& r : window.rules()) {
      bool fits = true;
      for (const Gen& g : r.lhs.letters()) fits &= g.index + s <= n - 1;
      if (!fits) continue;
      TraceWord lhs = shift_word(r.lhs, s, n);
      AlgElement rhs(n);
      for (const auto& [w, c] : r.rhs.terms()) rhs.add_term(shift_word(w, s, n), c);
      auto [it, inserted] = merged.emplace(lhs, rhs);
      if (!inserted && !(it->second == rhs))
        throw error("conflicting shifted rules for " + to_string(lhs));
    }
  }
  std::vector<Rule> rules;
  rules.reserve(merged.size());
  for (auto& [lhs, rhs] : merged) rules.push_back(Rule{lhs, rhs});

  // The index-shifted union alone is not locally confluent once three
  // strand indices interact; close the three-index window up under critical
  // pairs. Wider windows keep spawning longer rules (four-index interactions
  // appear at n=5), so higher levels reuse the completed window shifts:
  // terminal and sound, canonical on the certified range n <= 4.
  RuleSet completed = n == 4 ? complete_rules(RuleSet(n, std::move(rules)))
                             : RuleSet(n, std::move(rules));

  std::lock_guard<std::mutex> lock(cache_mutex);
  auto [it, inserted] = cache.emplace(n, completed);
  return it->second;
}

}  // namespace spin7

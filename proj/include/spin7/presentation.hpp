#pragma once

#include <vector>

#include "spin7/element.hpp"

namespace spin7 {

enum class RelationFamily {
  TWO_STRING,
  THREE_ISOTOPY,
  THREE_BASIC,
  THREE_SQUARE,
  PENTAGON,
  HEXAGON,
};

/// One defining relation lhs = rhs with lhs a single word not in the
/// support of rhs.
struct Relation {
  TraceWord lhs;
  AlgElement rhs;
  RelationFamily family;
};

/// Oriented rewrite rule; the rhs is fully reduced and every support word
/// is strictly below the lhs in the reduction order.
struct Rule {
  TraceWord lhs;
  AlgElement rhs;
};

class RuleSet {
 public:
  RuleSet() = default;
  RuleSet(int n, std::vector<Rule> rules);

  int context() const { return n_; }
  const std::vector<Rule>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  const Rule* find(const TraceWord& lhs) const;

 private:
  int n_ = 0;
  std::vector<Rule> rules_;  // sorted by lhs
};

/// The defining relations of A_P(n) anchored at strand index i: the
/// two-string family at i and, when i <= n-2, the three-string families on
/// the pair (i, i+1) in both orientations together with the hexagon.
std::vector<Relation> relations_at(int i, int n);

/// All defining relations for A_P(n).
std::vector<Relation> all_relations(int n);

/// The thirty-word basis of A(3): the empty word, the six generators, the
/// eighteen mixed-index two-letter words, the hexagon word H1K2H1 and the
/// four words H1U2H1, H1U2K1, K1U2H1, K1U2K1.
const std::vector<TraceWord>& basis30();

/// Complete reduced rewrite system for A_P(3): one rule for every word of
/// type (1,1), (2,2), (1,2,1) or (2,1,2) outside the basis, with the right
/// side solved exactly through the faithful representation.
const RuleSet& derive_rules3();

/// Index-shifted union of the n=3 rules (two-string rules only for n=2).
RuleSet rules_for(int n);

/// The loop value [10][6][2]/([5][3]): U_i^2 = loop * U_i.
RatFunc loop_value();

}  // namespace spin7

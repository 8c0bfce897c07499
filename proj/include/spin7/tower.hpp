#pragma once

#include <array>
#include <memory>
#include <vector>

#include "spin7/rewrite.hpp"

namespace spin7 {

/// Shared tower state: rule sets and rewriters for every level up to n+1,
/// termination-checked on construction.
class TowerContext {
 public:
  explicit TowerContext(int n);

  int level() const { return n_; }
  const RuleSet& rules(int m) const;
  Rewriter<RatFunc>& rewriter(int m);

 private:
  int n_;
  std::vector<RuleSet> rules_;                            // index m-2 holds rules_for(m)
  std::vector<std::unique_ptr<Rewriter<RatFunc>>> rewriters_;
};

/// Conditional expectation A_P(n) -> A_P(n-1), computed operationally as
/// NF(U_n a U_n) in A_P(n+1) followed by stripping the right factor U_n.
/// Throws strip_failure if a support word does not land in A_P(n-1) U_n.
AlgElement epsilon(TowerContext& ctx, int n, const AlgElement& a);

/// Markov trace normalized to trace(1) = 1 at every level.
RatFunc trace(TowerContext& ctx, int n, const AlgElement& a);

struct SpectralIdempotent {
  RatFunc eigenvalue;  // of H_1: [7], -[5], [3], -1
  AlgElement element;  // in A_P(2)
};

/// The four orthogonal idempotents of A_P(2) splitting the H eigenspaces.
/// The U-multiple carries the corrected coefficient [5][3]/([10][6][2]);
/// the coefficient printed with the cell datum fails idempotency.
const std::array<SpectralIdempotent, 4>& spectral_idempotents();

/// Single-strand idempotent at index i inside A_P(n), by H-eigenvalue slot
/// (same order as spectral_idempotents).
AlgElement shifted_idempotent(std::size_t slot, int i, int n);

struct WeightAttachment {
  RatFunc eigenvalue;
  WeightLabel weight;
  RatFunc trace_value;  // = quantum_dim(weight) / quantum_dim(spin)^2
};

/// Match each idempotent to the tensor-square summand with the same
/// normalized trace; exact comparison, throws no_match on failure.
std::array<WeightAttachment, 4> identify_weights(TowerContext& ctx);

/// Product of shifted single-strand idempotents
/// (u_1 u_3 ... u_{2a-1})(k_{2a+1} ...)(e_{2a+2b+1} ...), one per dominant
/// weight (a,b,c) with 2a+2b+2c <= n.
AlgElement cell_idempotent(TowerContext& ctx, int a, int b, int c, int n);

}  // namespace spin7

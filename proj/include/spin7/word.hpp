#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spin7/errors.hpp"

namespace spin7 {

enum class GenKind : std::uint8_t { U = 0, K = 1, H = 2 };

/// One generator letter: U_i, K_i or H_i with a 1-based strand index.
struct Gen {
  GenKind kind;
  int index;

  friend bool operator==(const Gen&, const Gen&) = default;
  friend auto operator<=>(const Gen& a, const Gen& b) {
    if (auto c = a.index <=> b.index; c != 0) return c;
    return a.kind <=> b.kind;
  }
};

/// Letters commute exactly when their indices are more than one apart.
inline bool commutes(const Gen& a, const Gen& b) {
  int d = a.index - b.index;
  return d > 1 || d < -1;
}

std::string to_string(const Gen& g);
Gen gen_from_string(const std::string& s);

enum class WordOrder { LESS, GREATER, EQUAL, INCOMPARABLE };

/// Element of the commutation monoid C(n), stored as the lexicographically
/// least representative under swaps of adjacent letters with index distance
/// greater than one (letters compared by (index, kind), U < K < H).
class TraceWord {
 public:
  TraceWord() = default;
  explicit TraceWord(int n) : n_(n) {}

  static TraceWord canonicalize(int n, std::vector<Gen> letters);

  int context() const { return n_; }
  const std::vector<Gen>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Reinterpret in a wider (or equal) context; indices must fit.
  TraceWord with_context(int n) const;

  friend bool operator==(const TraceWord& a, const TraceWord& b) {
    return a.n_ == b.n_ && a.letters_ == b.letters_;
  }
  friend bool operator!=(const TraceWord& a, const TraceWord& b) { return !(a == b); }

  // Total order for use as a map key (plumbing, not the reduction order).
  friend bool operator<(const TraceWord& a, const TraceWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.letters_[i] != b.letters_[i]) return a.letters_[i] < b.letters_[i];
    }
    return false;
  }

  std::size_t hash() const;

 private:
  friend TraceWord concat(const TraceWord&, const TraceWord&);
  int n_ = 0;
  std::vector<Gen> letters_;
};

struct TraceWordHash {
  std::size_t operator()(const TraceWord& w) const { return w.hash(); }
};

TraceWord concat(const TraceWord& a, const TraceWord& b);

/// Reduction order from the confluence analysis: total length first, then,
/// for each strand index from the top down, the subword of letters at that
/// index compared by length then reverse-lexicographically with U < K < H.
/// Words that tie everywhere but differ are incomparable.
WordOrder reduction_compare(const TraceWord& a, const TraceWord& b);

/// All factorizations w = x * p * y, deterministically ordered.
std::vector<std::pair<TraceWord, TraceWord>> factor_occurrences(const TraceWord& w,
                                                                const TraceWord& p);

/// First factorization w = x * p * y under a fixed deterministic scan, if any.
std::optional<std::pair<TraceWord, TraceWord>> factor_search(const TraceWord& w,
                                                             const TraceWord& p);

std::string to_string(const TraceWord& w);

}  // namespace spin7

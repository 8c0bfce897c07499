#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spin7/ratfunc.hpp"
#include "spin7/word.hpp"

namespace spin7 {

/// Finite linear combination of trace words over a coefficient ring C.
/// No zero coefficient is ever stored. C is RatFunc for elements of A_P(n)
/// and a Laurent ring in the spectral variables for R-matrix work.
template <class C>
class ElementT {
 public:
  ElementT() = default;
  explicit ElementT(int n) : n_(n) {}

  static ElementT zero(int n) { return ElementT(n); }

  static ElementT unit(int n, C c = C(1)) {
    ElementT e(n);
    e.add_term(TraceWord(n), std::move(c));
    return e;
  }

  static ElementT word(TraceWord w, C c = C(1)) {
    ElementT e(w.context());
    e.add_term(std::move(w), std::move(c));
    return e;
  }

  static ElementT generator(int n, Gen g, C c = C(1)) {
    return word(TraceWord::canonicalize(n, {g}), std::move(c));
  }

  int context() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<TraceWord, C>& terms() const { return terms_; }

  void add_term(TraceWord w, C c) {
    if (detail::coeff_is_zero(c)) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(std::move(w), std::move(c));
    } else {
      it->second = it->second + c;
      if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  C coeff(const TraceWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? C{} : it->second;
  }

  std::set<TraceWord> support() const {
    std::set<TraceWord> s;
    for (const auto& [w, c] : terms_) s.insert(w);
    return s;
  }

  ElementT with_context(int n) const {
    ElementT e(n);
    for (const auto& [w, c] : terms_) e.add_term(w.with_context(n), c);
    return e;
  }

  friend ElementT operator+(const ElementT& a, const ElementT& b) {
    check_contexts(a, b);
    ElementT r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
  }

  friend ElementT operator-(const ElementT& a) {
    ElementT r = a;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
  }

  friend ElementT operator-(const ElementT& a, const ElementT& b) { return a + (-b); }

  friend ElementT operator*(const C& s, const ElementT& a) {
    ElementT r(a.n_);
    for (const auto& [w, c] : a.terms_) r.add_term(w, s * c);
    return r;
  }

  /// Bilinear extension of the monoid product; no relations are applied.
  friend ElementT operator*(const ElementT& a, const ElementT& b) {
    check_contexts(a, b);
    ElementT r(a.n_);
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) r.add_term(concat(wa, wb), ca * cb);
    return r;
  }

  friend bool operator==(const ElementT& a, const ElementT& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const ElementT& a, const ElementT& b) { return !(a == b); }

 private:
  static void check_contexts(const ElementT& a, const ElementT& b) {
    if (a.n_ != b.n_) throw mismatched_context("elements live in different strand counts");
  }

  int n_ = 0;
  std::map<TraceWord, C> terms_;
};

using AlgElement = ElementT<RatFunc>;

inline AlgElement alg_word(int n, std::initializer_list<Gen> gens, RatFunc c = RatFunc(1)) {
  return AlgElement::word(TraceWord::canonicalize(n, std::vector<Gen>(gens)), std::move(c));
}

std::string to_string(const AlgElement& a);

}  // namespace spin7

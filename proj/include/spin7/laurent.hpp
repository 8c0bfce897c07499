#pragma once

#include <algorithm>
#include <concepts>
#include <string>
#include <vector>

#include "spin7/errors.hpp"
#include "spin7/numeric.hpp"

namespace spin7 {

namespace detail {

template <class C>
bool coeff_is_zero(const C& c) {
  if constexpr (requires(const C& x) { x.is_zero(); }) {
    return c.is_zero();
  } else {
    return c == 0;
  }
}

}  // namespace detail

/// Laurent polynomial in one variable over a commutative coefficient ring C.
/// Stored densely: c_[k] is the coefficient of x^(lo_ + k). The first and
/// last stored coefficients are nonzero; the zero polynomial stores nothing.
/// Instantiated with C = Int for Z[q,q^-1] and nested with itself (via
/// RatFunc coefficients) for the spectral-parameter rings in u and v.
template <class C>
class LaurentPolyT {
 public:
  LaurentPolyT() = default;

  explicit LaurentPolyT(C constant) {
    if (!detail::coeff_is_zero(constant)) {
      lo_ = 0;
      c_.push_back(std::move(constant));
    }
  }

  // Lift anything the coefficient ring can absorb (ints, inner rings).
  template <class D>
    requires(!std::same_as<std::remove_cvref_t<D>, LaurentPolyT> &&
             !std::same_as<std::remove_cvref_t<D>, C> && std::constructible_from<C, D>)
  explicit LaurentPolyT(D&& v) : LaurentPolyT(C(std::forward<D>(v))) {}

  static LaurentPolyT monomial(C coeff, int exp) {
    LaurentPolyT p;
    if (!detail::coeff_is_zero(coeff)) {
      p.lo_ = exp;
      p.c_.push_back(std::move(coeff));
    }
    return p;
  }

  static LaurentPolyT from_coeffs(int lo, std::vector<C> coeffs) {
    LaurentPolyT p;
    p.lo_ = lo;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
  }

  bool is_zero() const { return c_.empty(); }

  bool is_one() const {
    return c_.size() == 1 && lo_ == 0 && !detail::coeff_is_zero(c_[0]) && c_[0] == C(1);
  }

  // lo/hi are only meaningful for nonzero polynomials.
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  std::size_t term_span() const { return c_.size(); }

  C coeff(int exp) const {
    if (is_zero() || exp < lo_ || exp > hi()) return C{};
    return c_[static_cast<std::size_t>(exp - lo_)];
  }

  const std::vector<C>& raw_coeffs() const { return c_; }

  friend LaurentPolyT operator+(const LaurentPolyT& a, const LaurentPolyT& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.lo_, b.lo_);
    int hi = std::max(a.hi(), b.hi());
    std::vector<C> c(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[a.lo_ - lo + k] = a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k)
      c[b.lo_ - lo + k] = c[b.lo_ - lo + k] + b.c_[k];
    return from_coeffs(lo, std::move(c));
  }

  friend LaurentPolyT operator-(const LaurentPolyT& a) {
    LaurentPolyT r = a;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend LaurentPolyT operator-(const LaurentPolyT& a, const LaurentPolyT& b) {
    return a + (-b);
  }

  friend LaurentPolyT operator*(const LaurentPolyT& a, const LaurentPolyT& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPolyT{};
    std::vector<C> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return from_coeffs(a.lo_ + b.lo_, std::move(c));
  }

  friend LaurentPolyT operator*(const C& s, const LaurentPolyT& a) {
    return LaurentPolyT(C(s)) * a;
  }

  friend bool operator==(const LaurentPolyT& a, const LaurentPolyT& b) {
    return a.lo_ == b.lo_ && a.c_ == b.c_;
  }
  friend bool operator!=(const LaurentPolyT& a, const LaurentPolyT& b) { return !(a == b); }

  LaurentPolyT pow(unsigned e) const {
    LaurentPolyT r{C(1)};
    LaurentPolyT base = *this;
    while (e) {
      if (e & 1u) r = r * base;
      base = base * base;
      e >>= 1u;
    }
    return r;
  }

  /// Substitution x -> x^-1.
  LaurentPolyT bar() const {
    if (is_zero()) return {};
    std::vector<C> rev(c_.rbegin(), c_.rend());
    return from_coeffs(-hi(), std::move(rev));
  }

  bool is_bar_invariant() const { return *this == bar(); }

  /// Multiply by x^k.
  LaurentPolyT shifted(int k) const {
    LaurentPolyT r = *this;
    if (!r.is_zero()) r.lo_ += k;
    return r;
  }

 private:
  void trim() {
    std::size_t front = 0;
    while (front < c_.size() && detail::coeff_is_zero(c_[front])) ++front;
    if (front == c_.size()) {
      c_.clear();
      lo_ = 0;
      return;
    }
    std::size_t back = c_.size();
    while (back > front && detail::coeff_is_zero(c_[back - 1])) --back;
    if (front > 0 || back < c_.size()) {
      std::vector<C> t(c_.begin() + front, c_.begin() + back);
      c_ = std::move(t);
      lo_ += static_cast<int>(front);
    }
  }

  int lo_ = 0;
  std::vector<C> c_;
};

using LaurentPoly = LaurentPolyT<Int>;

/// Polynomial in delta = q + q^-1 with integer coefficients, ascending order.
class DeltaPoly {
 public:
  DeltaPoly() = default;
  explicit DeltaPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

  bool is_zero() const { return c_.empty(); }
  const std::vector<Int>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  friend bool operator==(const DeltaPoly& a, const DeltaPoly& b) { return a.c_ == b.c_; }

  friend DeltaPoly operator+(const DeltaPoly& a, const DeltaPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return DeltaPoly(std::move(c));
  }

  friend DeltaPoly operator-(const DeltaPoly& a) {
    DeltaPoly r = a;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend DeltaPoly operator-(const DeltaPoly& a, const DeltaPoly& b) { return a + (-b); }

  friend DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return DeltaPoly(std::move(c));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

/// Quantum integer [n] = q^(n-1) + q^(n-3) + ... + q^(1-n), n >= 1.
inline LaurentPoly qint(int n) {
  if (n < 1) throw index_out_of_range("qint requires n >= 1");
  std::vector<Int> c(static_cast<std::size_t>(2 * n - 1));
  for (int k = 0; k < n; ++k) c[static_cast<std::size_t>(2 * k)] = 1;
  return LaurentPoly::from_coeffs(1 - n, std::move(c));
}

inline LaurentPoly from_delta(const DeltaPoly& p) {
  LaurentPoly delta = qint(2);  // q + q^-1
  LaurentPoly out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k] == 0) continue;
    out = out + LaurentPoly(p.coeffs()[k]) * delta.pow(static_cast<unsigned>(k));
  }
  return out;
}

/// Rewrite a bar-invariant Laurent polynomial as a polynomial in delta.
inline DeltaPoly to_delta(const LaurentPoly& p) {
  if (!p.is_bar_invariant()) throw not_bar_invariant("polynomial is not symmetric under q <-> 1/q");
  LaurentPoly delta = qint(2);
  LaurentPoly rem = p;
  std::vector<Int> out;
  while (!rem.is_zero() && rem.hi() > 0) {
    int d = rem.hi();
    Int c = rem.coeff(d);
    if (static_cast<int>(out.size()) < d + 1) out.resize(static_cast<std::size_t>(d + 1));
    out[static_cast<std::size_t>(d)] += c;
    rem = rem - LaurentPoly(c) * delta.pow(static_cast<unsigned>(d));
  }
  if (!rem.is_zero()) {
    if (out.empty()) out.resize(1);
    out[0] += rem.coeff(0);
  }
  return DeltaPoly(std::move(out));
}

/// Exact division in Z[q,q^-1]; throws not_divisible when b does not divide a.
inline LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw division_by_zero("exact_div by zero");
  if (a.is_zero()) return {};
  int qlo = a.lo() - b.lo();
  int deg_a = a.hi() - a.lo();
  int deg_b = b.hi() - b.lo();
  if (deg_a < deg_b) throw not_divisible("degree too small");
  std::vector<Int> rem(a.raw_coeffs());
  const std::vector<Int>& div = b.raw_coeffs();
  std::vector<Int> quot(static_cast<std::size_t>(deg_a - deg_b + 1));
  for (int k = deg_a - deg_b; k >= 0; --k) {
    Int& lead = rem[static_cast<std::size_t>(k + deg_b)];
    if (lead == 0) continue;
    if (lead % div.back() != 0) throw not_divisible("leading coefficient does not divide");
    Int f = lead / div.back();
    quot[static_cast<std::size_t>(k)] = f;
    for (int j = 0; j <= deg_b; ++j)
      rem[static_cast<std::size_t>(k + j)] -= f * div[static_cast<std::size_t>(j)];
  }
  for (const Int& r : rem)
    if (r != 0) throw not_divisible("nonzero remainder");
  return LaurentPoly::from_coeffs(qlo, std::move(quot));
}

enum class WeightLabel { trivial, vector_rep, adjoint, spin, lambda2 };

/// Quantum dimensions from the summands of the spin square; all divisions
/// are exact in Z[q,q^-1].
inline LaurentPoly quantum_dim(WeightLabel w) {
  switch (w) {
    case WeightLabel::trivial:
      return LaurentPoly(Int(1));
    case WeightLabel::vector_rep:
      return exact_div(qint(10) * qint(7), qint(5) * qint(2));
    case WeightLabel::adjoint:
      return exact_div(qint(12) * qint(7) * qint(6), qint(4) * qint(3) * qint(2));
    case WeightLabel::spin:
      return exact_div(qint(10) * qint(6) * qint(2), qint(5) * qint(3) * qint(1));
    case WeightLabel::lambda2:
      return exact_div(qint(12) * qint(10) * qint(7), qint(6) * qint(4) * qint(1));
  }
  throw error("invalid weight label");
}

inline Rational eval_at(const LaurentPoly& p, const Rational& q0) {
  if (q0 == 0) throw pole_at_point("evaluation at q = 0");
  Rational acc = 0;
  if (p.is_zero()) return acc;
  for (int e = p.lo(); e <= p.hi(); ++e) {
    Int c = p.coeff(e);
    if (c != 0) acc += Rational(c) * rational_pow(q0, e);
  }
  return acc;
}

std::string to_string(const LaurentPoly& p);
std::string to_string(const DeltaPoly& p);

}  // namespace spin7

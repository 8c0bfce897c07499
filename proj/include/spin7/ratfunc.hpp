#pragma once

#include <string>
#include <utility>

#include "spin7/laurent.hpp"

namespace spin7 {

/// Gcd in Z[q,q^-1], canonicalized to lowest exponent 0 and positive
/// leading coefficient. Includes the integer content.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Reduced fraction of Laurent polynomials in q. The denominator is kept
/// with lowest exponent 0 and positive leading coefficient so equality is
/// structural.
class RatFunc {
 public:
  RatFunc() : den_(Int(1)) {}
  RatFunc(int v) : num_(Int(v)), den_(Int(1)) {}  // NOLINT: intentional implicit
  explicit RatFunc(Int v) : num_(std::move(v)), den_(Int(1)) {}
  explicit RatFunc(LaurentPoly num) : num_(std::move(num)), den_(Int(1)) {}
  RatFunc(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a) {
    RatFunc r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw division_by_zero("RatFunc division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc bar() const { return RatFunc(num_.bar(), den_.bar()); }

  Rational eval(const Rational& q0) const {
    Rational d = eval_at(den_, q0);
    if (d == 0) throw pole_at_point("denominator vanishes at evaluation point");
    return eval_at(num_, q0) / d;
  }

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

inline RatFunc rf_qint(int n) { return RatFunc(qint(n)); }
inline RatFunc q_power(int k) { return RatFunc(LaurentPoly::monomial(Int(1), k)); }

std::string to_string(const RatFunc& f);

}  // namespace spin7

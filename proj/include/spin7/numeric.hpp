#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace spin7 {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

inline Rational rational_pow(const Rational& x, long e) {
  using boost::multiprecision::pow;
  if (e >= 0) {
    Int n = pow(boost::multiprecision::numerator(x), static_cast<unsigned>(e));
    Int d = pow(boost::multiprecision::denominator(x), static_cast<unsigned>(e));
    return Rational(n, d);
  }
  Int n = pow(boost::multiprecision::denominator(x), static_cast<unsigned>(-e));
  Int d = pow(boost::multiprecision::numerator(x), static_cast<unsigned>(-e));
  return Rational(n, d);
}

}  // namespace spin7

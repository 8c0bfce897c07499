#include "spin7/ratfunc.hpp"

#include <sstream>

namespace spin7 {

namespace {

Int content(const LaurentPoly& p) {
  Int g = 0;
  for (const Int& c : p.raw_coeffs()) g = int_gcd(g, c);
  return g;
}

// Shift so the lowest exponent is 0 (q is a unit, so this preserves gcds).
LaurentPoly poly_part(const LaurentPoly& p) { return p.shifted(-p.lo()); }

LaurentPoly primitive_part(const LaurentPoly& p) {
  Int c = content(p);
  if (c == 0) return p;
  if (c < 0) c = -c;
  if (p.raw_coeffs().back() < 0) c = -c;
  return exact_div(p, LaurentPoly(c));
}

// Pseudo-remainder of a by b (both lowest-exponent 0, b nonzero).
LaurentPoly pseudo_rem(LaurentPoly a, const LaurentPoly& b) {
  int db = b.hi();
  Int lead_b = b.raw_coeffs().back();
  while (!a.is_zero() && a.hi() >= db) {
    Int lead_a = a.raw_coeffs().back();
    int shift = a.hi() - db;
    a = LaurentPoly(lead_b) * a - LaurentPoly(lead_a) * b.shifted(shift);
    a = poly_part(a);  // strip unit powers of q as they appear
  }
  return a;
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b.is_zero() ? LaurentPoly{} : primitive_part(poly_part(b)) * LaurentPoly(boost::multiprecision::abs(content(b)));
  if (b.is_zero()) return primitive_part(poly_part(a)) * LaurentPoly(boost::multiprecision::abs(content(a)));
  Int cont = int_gcd(content(a), content(b));
  LaurentPoly x = primitive_part(poly_part(a));
  LaurentPoly y = primitive_part(poly_part(b));
  if (x.hi() < y.hi()) std::swap(x, y);
  while (!y.is_zero()) {
    LaurentPoly r = pseudo_rem(x, y);
    x = y;
    y = r.is_zero() ? LaurentPoly{} : primitive_part(r);
  }
  LaurentPoly g = primitive_part(x) * LaurentPoly(cont);
  if (g.raw_coeffs().back() < 0) g = -g;
  return g;
}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw division_by_zero("zero denominator");
  if (num.is_zero()) {
    num_ = LaurentPoly{};
    den_ = LaurentPoly(Int(1));
    return;
  }
  if (den.term_span() == 1) {
    // Unit times constant: shift the power onto the numerator and divide
    // out the integer content exactly where possible.
    Int c = den.raw_coeffs()[0];
    num = num.shifted(-den.lo());
    if (c < 0) {
      c = -c;
      num = -num;
    }
    if (c != 1) {
      Int shared = c;
      for (const Int& v : num.raw_coeffs()) shared = int_gcd(shared, v);
      if (shared > 1) {
        num = exact_div(num, LaurentPoly(shared));
        c /= shared;
      }
    }
    num_ = std::move(num);
    den_ = LaurentPoly(c);
    return;
  }
  LaurentPoly g = laurent_gcd(num, den);
  if (!g.is_one()) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  // Move the leftover unit q^k of the denominator onto the numerator.
  num = num.shifted(-den.lo());
  den = den.shifted(-den.lo());
  if (den.raw_coeffs().back() < 0) {
    num = -num;
    den = -den;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = p.hi(); e >= p.lo(); --e) {
    Int c = p.coeff(e);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Int a = boost::multiprecision::abs(c);
    if (e == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

std::string to_string(const DeltaPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = p.degree(); e >= 0; --e) {
    Int c = p.coeffs()[static_cast<std::size_t>(e)];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Int a = boost::multiprecision::abs(c);
    if (e == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "d";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

std::string to_string(const RatFunc& f) {
  if (f.is_polynomial()) return "(" + to_string(f.num()) + ")";
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace spin7

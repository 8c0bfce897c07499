#include "spin7/parse.hpp"

#include <cctype>
#include <sstream>

namespace spin7 {

namespace {

class Parser {
 public:
  Parser(const std::string& text, int n) : text_(text), n_(n) {}

  AlgElement run() {
    AlgElement e = expr();
    skip_ws();
    if (pos_ != text_.size()) throw parse_error("unexpected trailing input", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  long long parse_int(bool allow_sign) {
    skip_ws();
    std::size_t start = pos_;
    if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) throw parse_error("expected an integer", start);
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  AlgElement expr() {
    bool negate = eat('-');
    AlgElement acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (eat('+')) {
        acc = acc + term();
      } else if (eat('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  AlgElement term() {
    AlgElement acc = factor();
    while (true) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        std::size_t at = pos_;
        AlgElement divisor = factor();
        acc = divide(acc, divisor, at);
      } else {
        return acc;
      }
    }
  }

  AlgElement divide(const AlgElement& a, const AlgElement& b, std::size_t at) {
    RatFunc num = scalar_of(a, at), den = scalar_of(b, at);
    if (den.is_zero()) throw parse_error("division by zero", at);
    return AlgElement::unit(n_, num / den);
  }

  RatFunc scalar_of(const AlgElement& e, std::size_t at) {
    if (e.is_zero()) return RatFunc(0);
    if (e.term_count() == 1 && e.terms().begin()->first.empty())
      return e.terms().begin()->second;
    throw parse_error("'/' is only defined between coefficients", at);
  }

  AlgElement factor() {
    skip_ws();
    if (pos_ >= text_.size()) throw parse_error("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      AlgElement inner = expr();
      if (!eat(')')) throw parse_error("expected ')'", pos_);
      return inner;
    }
    if (c == '[') {
      ++pos_;
      long long m = parse_int(false);
      if (!eat(']')) throw parse_error("expected ']'", pos_);
      if (m < 1) throw parse_error("quantum integer index must be positive", pos_);
      return AlgElement::unit(n_, RatFunc(qint(static_cast<int>(m))));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = parse_int(false);
      return AlgElement::unit(n_, RatFunc(Int(v)));
    }
    if (c == 'q' || c == 'd') {
      ++pos_;
      long long e = 1;
      if (eat('^')) e = parse_int(true);
      LaurentPoly base = c == 'q' ? LaurentPoly::monomial(Int(1), 1) : qint(2);
      LaurentPoly value{Int(1)};
      long long reps = e < 0 ? -e : e;
      for (long long k = 0; k < reps; ++k) value = value * base;
      RatFunc coeff = e >= 0 ? RatFunc(value) : RatFunc(LaurentPoly(Int(1)), value);
      return AlgElement::unit(n_, coeff);
    }
    if (c == 'U' || c == 'K' || c == 'H') {
      std::size_t at = pos_;
      ++pos_;
      long long idx = parse_int(false);
      GenKind kind = c == 'U' ? GenKind::U : c == 'K' ? GenKind::K : GenKind::H;
      if (idx < 1 || idx > n_ - 1)
        throw index_out_of_range("generator " + std::string(1, c) + std::to_string(idx) +
                                 " is out of range for n=" + std::to_string(n_) +
                                 " (at position " + std::to_string(at) + ")");
      return AlgElement::generator(n_, Gen{kind, static_cast<int>(idx)});
    }
    throw parse_error(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string text_;
  std::size_t pos_ = 0;
  int n_;
};

}  // namespace

AlgElement parse(const std::string& text, int n) { return Parser(text, n).run(); }

std::string to_string(const AlgElement& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    if (!first) os << " + ";
    os << to_string(c);
    if (!w.empty()) os << "*" << to_string(w);
    first = false;
  }
  return os.str();
}

}  // namespace spin7

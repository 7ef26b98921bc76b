#include "gtsing/expression.hpp"

#include <cctype>

#include "gtsing/error.hpp"

namespace gtsing {

std::string var_name(VarId v) { return "x[" + std::to_string(v.row) + "][" + std::to_string(v.col) + "]"; }

namespace {

std::string monomial_text(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < Monomial::kMaxVars; ++i) {
    unsigned e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(var_at(i));
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, int n) : text_(text), n_(n) {}

  RationalFunction parse() {
    RationalFunction f = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Integer integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  int small_integer() {
    Integer v = integer();
    if (!v.fits_sint_p() || v > 1000000) fail("integer too large");
    return static_cast<int>(v.get_si());
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    while (true) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        RationalFunction d = unary();
        if (d.is_zero()) fail("division by zero");
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (!accept('^')) return base;
    bool negative = accept('-');
    int e = small_integer();
    if (negative && base.is_zero()) fail("zero raised to a negative power");
    return pow(base, negative ? -e : e);
  }

  RationalFunction atom() {
    skip_space();
    if (accept('(')) {
      RationalFunction f = expr();
      expect(')');
      return f;
    }
    if (pos_ < text_.size() && text_[pos_] == 'x') {
      ++pos_;
      expect('[');
      int k = small_integer();
      expect(']');
      expect('[');
      int i = small_integer();
      expect(']');
      VarId v{k, i};
      if (!valid_var(v, n_ > 0 ? n_ : kMaxOrder)) fail("variable " + var_name(v) + " out of range");
      return RationalFunction::variable(v);
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) return RationalFunction(Rational(integer()));
    fail("expected a number, variable or '('");
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coef;
    bool negative = c < 0;
    if (negative) c = -c;
    if (negative) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    first = false;
    std::string mono = monomial_text(t.mono);
    if (mono.empty()) {
      out += to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += to_string(c) + "*" + mono;
    }
  }
  return out;
}

std::string to_string(const RationalFunction& f) {
  if (f.is_polynomial()) return to_string(f.num());
  std::string num = to_string(f.num());
  if (f.num().size() > 1) num = "(" + num + ")";
  return num + "/(" + to_string(f.den()) + ")";
}

RationalFunction parse_expression(std::string_view text, int n) { return Parser(text, n).parse(); }

}  // namespace gtsing

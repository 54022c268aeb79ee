#ifndef HYPERTORIC_PARSE_HPP
#define HYPERTORIC_PARSE_HPP

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypertoric/algebra.hpp"
#include "hypertoric/polynomial.hpp"

namespace hypertoric {

// Recursive-descent parsers for the canonical strings.  Grammar:
//   sum     := ['-'] product (('+' | '-') product)*
//   product := factor ('*' factor)*
//   factor  := rational | variable ['^' int] | 'r' '[' ints ']' | '(' sum ')' ['^' int]
// Element products are evaluated with the algebra multiplication, so any
// emitted normal form re-parses to an equal element.

namespace detail {

class Lexer {
 public:
  explicit Lexer(std::string text) : text_(std::move(text)) {}

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + why);
  }

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

  void advance() { ++pos_; }

  bool done() {
    skip_ws();
    return pos_ == text_.size();
  }

  long long parse_int() {
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected integer");
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return negative ? -v : v;
  }

  Rational parse_rational() {
    const long long num = parse_int();
    long long den = 1;
    if (eat('/')) den = parse_int();
    return make_rational(num, den);
  }

 private:
  std::string text_;
  std::size_t pos_ = 0;
};

// Shared sum/product/power structure; Derived supplies parse_atom().
template <typename Derived, typename Value>
class ExpressionParser : public Lexer {
 public:
  using Lexer::Lexer;

  Value run() {
    Value v = parse_sum();
    if (!done()) fail("trailing input");
    return v;
  }

 protected:
  Value parse_sum() {
    bool negate = eat('-');
    Value acc = parse_product();
    if (negate) acc = self().negate(std::move(acc));
    while (true) {
      if (eat('+'))
        acc = self().add(std::move(acc), parse_product());
      else if (eat('-'))
        acc = self().add(std::move(acc), self().negate(parse_product()));
      else
        break;
    }
    return acc;
  }

  Value parse_product() {
    Value acc = parse_power();
    while (eat('*')) acc = self().mul(std::move(acc), parse_power());
    return acc;
  }

  Value parse_power() {
    Value base = [&] {
      if (eat('(')) {
        Value inner = parse_sum();
        if (!eat(')')) fail("expected ')'");
        return inner;
      }
      return self().parse_atom();
    }();
    if (!eat('^')) return base;
    const long long e = parse_int();
    if (e < 0) fail("negative exponent");
    Value acc = self().one();
    for (long long i = 0; i < e; ++i) acc = self().mul(std::move(acc), base);
    return acc;
  }

 private:
  Derived& self() { return static_cast<Derived&>(*this); }
};

class PolyParser : public ExpressionParser<PolyParser, GTPoly> {
 public:
  PolyParser(int n, std::string text)
      : ExpressionParser(std::move(text)), n_(n) {}

  GTPoly one() { return GTPoly::constant(n_, 1); }
  GTPoly negate(GTPoly p) { return -std::move(p); }
  GTPoly add(GTPoly a, const GTPoly& b) { return std::move(a) + b; }
  GTPoly mul(const GTPoly& a, const GTPoly& b) { return a * b; }

  GTPoly parse_atom() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)))
      return GTPoly::constant(n_, parse_rational());
    if (c == 'h') {
      advance();
      return GTPoly::hbar(n_);
    }
    if (c == 'x' || c == 'y') {
      advance();
      const long long idx = parse_int();
      if (idx < 1 || idx > n_) fail("variable index out of range");
      return c == 'x' ? GTPoly::x(n_, static_cast<int>(idx)) : GTPoly::y(n_, static_cast<int>(idx));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

 private:
  int n_;
};

class AlgebraParser : public ExpressionParser<AlgebraParser, AlgebraElement> {
 public:
  AlgebraParser(DatumPtr datum, std::string text)
      : ExpressionParser(std::move(text)), datum_(std::move(datum)) {}

  AlgebraElement one() { return identity(datum_); }
  AlgebraElement negate(AlgebraElement e) { return std::move(e) * Rational(-1); }
  AlgebraElement add(AlgebraElement a, const AlgebraElement& b) { return std::move(a) + b; }
  AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) { return multiply(a, b); }

  AlgebraElement parse_atom() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)))
      return AlgebraElement::gt(datum_, GTPoly::constant(datum_->n(), parse_rational()));
    if (c == 'h') {
      advance();
      return AlgebraElement::gt(datum_, GTPoly::hbar(datum_->n()));
    }
    if (c == 'x') {
      advance();
      const long long idx = parse_int();
      if (idx < 1 || idx > datum_->n()) fail("variable index out of range");
      return AlgebraElement::gt(datum_, GTPoly::x(datum_->n(), static_cast<int>(idx)));
    }
    if (c == 'r') {
      advance();
      if (!eat('[')) fail("expected '[' after r");
      IntVec lambda;
      if (peek() != ']') {
        lambda.push_back(parse_int());
        while (eat(',')) lambda.push_back(parse_int());
      }
      if (!eat(']')) fail("expected ']'");
      if (static_cast<int>(lambda.size()) != datum_->k()) fail("monopole weight has wrong length");
      return monopole(datum_, lambda);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

 private:
  DatumPtr datum_;
};

}  // namespace detail

inline AlgebraElement parse_element(const DatumPtr& datum, const std::string& text) {
  return detail::AlgebraParser(datum, text).run();
}

inline GTPoly parse_poly(int n, const std::string& text) {
  return detail::PolyParser(n, text).run();
}

}  // namespace hypertoric

#endif

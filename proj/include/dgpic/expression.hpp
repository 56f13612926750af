#pragma once

// Recursive-descent parser for ring expressions such as "x1*x2 - 2/3*x2^2"
// or "a*b - c*d". The ring is supplied by the caller, so the same grammar
// serves noncommutative polynomials and commutative parameter polynomials.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power ('*' power)*
//   power  := atom ('^' integer)?
//   atom   := number ['/' number] | identifier | '(' expr ')'

#include <cctype>
#include <functional>
#include <string>
#include <string_view>

#include "dgpic/error.hpp"
#include "dgpic/scalar.hpp"

namespace dgpic {

template <class T>
struct ExpressionOps {
  std::function<T(const Scalar&)> scalar;
  std::function<T(const std::string&)> identifier;
  std::function<T(const T&, const T&)> multiply;
};

namespace detail {

template <class T>
class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const Field& field, const ExpressionOps<T>& ops)
      : text_(text), field_(field), ops_(ops) {}

  T parse() {
    T value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError,
                why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
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

  T expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    T value = term();
    if (negate) value = -value;
    for (;;) {
      if (accept('+')) {
        value = value + term();
      } else if (accept('-')) {
        value = value - term();
      } else {
        return value;
      }
    }
  }

  T term() {
    T value = power();
    while (accept('*')) value = ops_.multiply(value, power());
    return value;
  }

  T power() {
    T base = atom();
    if (!accept('^')) return base;
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    unsigned long exp = std::stoul(std::string(text_.substr(start, pos_ - start)));
    T result = ops_.scalar(field_.one());
    for (unsigned long i = 0; i < exp; ++i) result = ops_.multiply(result, base);
    return result;
  }

  std::string number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  T atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      T value = expr();
      if (!accept(')')) fail("expected ')'");
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string literal = number();
      skip_space();
      // "a/b" is a rational literal; '/' is not a general operator.
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_space();
        std::string den = number();
        if (den.empty()) fail("expected denominator");
        literal += "/" + den;
      }
      return ops_.scalar(field_.parse(literal));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return ops_.identifier(std::string(text_.substr(start, pos_ - start)));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  Field field_;
  const ExpressionOps<T>& ops_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class T>
T parse_expression(std::string_view text, const Field& field, const ExpressionOps<T>& ops) {
  return detail::ExpressionParser<T>(text, field, ops).parse();
}

}  // namespace dgpic

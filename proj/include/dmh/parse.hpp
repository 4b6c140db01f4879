#pragma once

// Small recursive-descent reader for arithmetic expressions such as
// "M(MN-1)/(N(N^2-1))" or "(5t^2+5t)/3". Juxtaposition multiplies;
// '^' takes a non-negative integer exponent and binds tightest.

#include "dmh/error.hpp"
#include "dmh/rational.hpp"

#include <cctype>
#include <map>
#include <string>
#include <string_view>

namespace dmh {

template <class T>
class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const std::map<char, T>& vars) : vars_(vars) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  T parse() {
    if (s_.empty()) fail("empty expression");
    T v = expr();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, why + " in '" + s_ + "'");
  }
  bool at(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  bool starts_factor() const {
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || vars_.count(c) != 0;
  }

  T expr() {
    T v = term();
    while (at('+') || at('-')) {
      const char op = s_[pos_++];
      T rhs = term();
      v = op == '+' ? v + rhs : v - rhs;
    }
    return v;
  }

  T term() {
    T v = unary();
    for (;;) {
      if (at('*')) {
        ++pos_;
        v = v * unary();
      } else if (at('/')) {
        ++pos_;
        v = v / power();
      } else if (starts_factor()) {
        v = v * power();
      } else {
        return v;
      }
    }
  }

  T unary() {
    if (at('-')) {
      ++pos_;
      return -unary();
    }
    if (at('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  T power() {
    T base = primary();
    if (!at('^')) return base;
    ++pos_;
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent expected");
    const unsigned long e = std::stoul(s_.substr(start, pos_ - start));
    T r = T(Rational(1));
    for (unsigned long i = 0; i < e; ++i) r = r * base;
    return r;
  }

  T primary() {
    if (at('(')) {
      ++pos_;
      T v = expr();
      if (!at(')')) fail("missing ')'");
      ++pos_;
      return v;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return T(Rational(Integer(s_.substr(start, pos_ - start))));
    }
    if (pos_ < s_.size()) {
      auto it = vars_.find(s_[pos_]);
      if (it != vars_.end()) {
        ++pos_;
        return it->second;
      }
    }
    fail(pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "unexpected end");
  }

  std::string s_;
  std::size_t pos_ = 0;
  const std::map<char, T>& vars_;
};

template <class T>
T parse_expression(std::string_view text, const std::map<char, T>& vars) {
  return ExpressionParser<T>(text, vars).parse();
}

}  // namespace dmh

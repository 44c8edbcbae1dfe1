#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "coxcat/qt_rational.hpp"

namespace coxcat {

/// Recursive-descent parser for rational-function expressions in q and t:
/// sums/differences of terms, '*' and '/', '^' with integer exponents,
/// parentheses, integer literals. Accepts everything QT::str() prints.
class QTParser {
 public:
  explicit QTParser(const std::string& s) : s_(s) {}

  QT parse() {
    QT v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

  // Exposed for parsers that embed expressions (the symmetric-function grammar).
  QT expr() {
    QT v = term();
    while (true) {
      skip();
      if (peek() == '+') { ++pos_; v += term(); }
      else if (peek() == '-') { ++pos_; v -= term(); }
      else return v;
    }
  }

  std::size_t position() const { return pos_; }
  void set_position(std::size_t p) { pos_ = p; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

 private:
  QT term() {
    QT v = unary();
    while (true) {
      skip();
      if (peek() == '*') { ++pos_; v *= unary(); }
      else if (peek() == '/') { ++pos_; v /= unary(); }
      else return v;
    }
  }

  QT unary() {
    skip();
    if (peek() == '-') { ++pos_; return -unary(); }
    if (peek() == '+') { ++pos_; return unary(); }
    return factor();
  }

  QT factor() {
    QT base = atom();
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      bool negexp = false;
      if (peek() == '-') { negexp = true; ++pos_; }
      long e = integer();
      QT p(1);
      for (long i = 0; i < e; ++i) p *= base;
      return negexp ? QT(1) / p : p;
    }
    return base;
  }

  QT atom() {
    skip();
    char c = peek();
    if (c == '(') {
      ++pos_;
      QT v = expr();
      expect(')');
      return v;
    }
    if (c == 'q') { ++pos_; return QT::q(); }
    if (c == 't') { ++pos_; return QT::t(); }
    if (std::isdigit(static_cast<unsigned char>(c))) return QT(Int(integer()));
    fail("expected a factor");
    return QT();  // unreachable
  }

  long integer() {
    skip();
    std::size_t j = pos_;
    while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
    if (j == pos_) fail("expected an integer");
    long v = std::stol(s_.substr(pos_, j - pos_));
    pos_ = j;
    return v;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + what +
                                " in \"" + s_ + "\"");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

inline QT parse_qt(const std::string& s) { return QTParser(s).parse(); }

}  // namespace coxcat

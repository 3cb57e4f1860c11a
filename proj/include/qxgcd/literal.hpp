#pragma once

// Text form of quadratic integers: "-70+93t", "5", "t", "-3t", "4 - t".
// 't' stands for theta. A theta term may only follow the constant term.

#include <cctype>
#include <string>
#include <string_view>
#include <utility>

#include "qxgcd/errors.hpp"
#include "qxgcd/ring.hpp"

namespace qxgcd {

namespace detail {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  QInt parse() {
    skip_space();
    if (at_end()) fail("empty element literal");
    const Int sign = take_sign();
    auto [value, is_theta] = term();
    skip_space();
    if (is_theta) {
      if (!at_end()) fail("theta term must come after the constant term");
      return {0, sign * value};
    }
    QInt out{sign * value, 0};
    if (at_end()) return out;
    if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
    const Int sign2 = take_sign();
    auto [coef, theta2] = term();
    if (!theta2) fail("second term must be a multiple of t");
    skip_space();
    if (!at_end()) fail("unexpected trailing input");
    out.x1 = sign2 * coef;
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }

  Int take_sign() {
    skip_space();
    Int sign = 1;
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      if (peek() == '-') sign = -1;
      ++pos_;
    }
    skip_space();
    return sign;
  }

  // digits, digits 't', or bare 't'
  std::pair<Int, bool> term() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
    const bool has_digits = pos_ > start;
    Int value = has_digits ? Int(std::string(text_.substr(start, pos_ - start)))
                           : Int(1);
    skip_space();
    if (!at_end() && peek() == 't') {
      ++pos_;
      return {value, true};
    }
    if (!has_digits) fail("expected an integer or 't'");
    return {value, false};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline QInt parse_element(std::string_view text) {
  return detail::LiteralParser(text).parse();
}

// Inverse of parse_element: "0", "7", "-t", "3t", "5-2t", "-1+t".
inline std::string format_element(const QInt& z) {
  auto theta_part = [](const Int& k) -> std::string {
    if (k == 1) return "t";
    if (k == -1) return "-t";
    return k.get_str() + "t";
  };
  if (z.x1 == 0) return z.x0.get_str();
  if (z.x0 == 0) return theta_part(z.x1);
  std::string out = z.x0.get_str();
  if (z.x1 > 0) out += '+';
  return out + theta_part(z.x1);
}

}  // namespace qxgcd

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "cuntzsim/cuntz.hpp"
#include "cuntzsim/errors.hpp"

namespace cuntzsim::cuntz {
namespace {

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_word(const CuntzTerm& t) {
  if (t.is_unit_word()) return "I";
  std::string out;
  for (int i : t.creations) {
    if (!out.empty()) out += ' ';
    out += "psi" + std::to_string(i);
  }
  for (auto it = t.annihilations.rbegin(); it != t.annihilations.rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += "psi" + std::to_string(*it) + "*";
  }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, int d) : text_(text), d_(d) {}

  CuntzElement run() {
    CuntzElement result(d_);
    skip_ws();
    if (at_end()) fail("empty expression");
    bool first = true;
    while (!at_end()) {
      double sign = 1.0;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1.0 : 1.0;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      result += parse_term(sign);
      first = false;
      skip_ws();
    }
    return result;
  }

 private:
  CuntzElement parse_term(double sign) {
    Complex coefficient = sign;
    bool have_coefficient = false;
    if (!at_end() && (peek() == '(' || std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.' ||
                      is_lone_i())) {
      coefficient *= parse_coefficient();
      have_coefficient = true;
      skip_ws();
    }
    std::vector<Letter> word;
    bool have_factor = false;
    while (!at_end() && peek() != '+' && peek() != '-') {
      if (text_.substr(pos_, 3) == "psi") {
        const std::size_t token = pos_;
        pos_ += 3;
        const int index = parse_index();
        bool star = false;
        if (!at_end() && peek() == '*') {
          star = true;
          ++pos_;
        }
        if (index < 1 || index > d_) {
          pos_ = token;
          fail("generator index " + std::to_string(index) + " outside 1.." + std::to_string(d_));
        }
        word.push_back(Letter{index, star});
      } else if (peek() == 'I') {
        ++pos_;
      } else {
        fail(std::string("unexpected character '") + peek() + "'");
      }
      have_factor = true;
      skip_ws();
    }
    if (!have_factor && !have_coefficient) fail("empty term");
    return CuntzElement::from_word(d_, coefficient, word);
  }

  Complex parse_coefficient() {
    if (peek() == '(') {
      ++pos_;
      skip_ws();
      Complex value = parse_signed_component();
      skip_ws();
      if (!at_end() && (peek() == '+' || peek() == '-')) value += parse_signed_component();
      skip_ws();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
      return value;
    }
    return parse_component();
  }

  // [+-] (number [i] | i)
  Complex parse_signed_component() {
    double sign = 1.0;
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      sign = peek() == '-' ? -1.0 : 1.0;
      ++pos_;
      skip_ws();
    }
    return sign * parse_component();
  }

  Complex parse_component() {
    if (is_lone_i()) {
      ++pos_;
      return {0.0, 1.0};
    }
    const double v = parse_number();
    if (!at_end() && peek() == 'i') {
      ++pos_;
      return {0.0, v};
    }
    return {v, 0.0};
  }

  double parse_number() {
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }

  int parse_index() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected generator index after 'psi'");
    int v = 0;
    std::from_chars(text_.data() + start, text_.data() + pos_, v);
    return v;
  }

  bool is_lone_i() const {
    return !at_end() && peek() == 'i' && (pos_ + 1 >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("column " + std::to_string(pos_ + 1) + ": " + what);
  }

  std::string_view text_;
  int d_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const CuntzElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < x.terms().size(); ++k) {
    const auto& t = x.terms()[k];
    const Complex c = t.coefficient;
    std::string coef;
    bool negative = false;
    if (c.imag() == 0.0) {
      negative = std::signbit(c.real());
      const double mag = std::abs(c.real());
      if (mag != 1.0) coef = format_real(mag);
    } else {
      coef = "(" + format_real(c.real()) + (std::signbit(c.imag()) ? "-" : "+") + format_real(std::abs(c.imag())) + "i)";
    }
    if (k == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string word = format_word(t);
    if (coef.empty()) {
      out += word;
    } else if (word == "I") {
      out += coef;
    } else {
      out += coef + " " + word;
    }
  }
  return out;
}

CuntzElement parse(std::string_view text, int d) { return Parser(text, d).run(); }

}  // namespace cuntzsim::cuntz

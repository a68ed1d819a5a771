#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tjurina/poly.hpp"

namespace tjurina {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := rational | var ['^' uint] | '(' expr ')' ['^' uint]
class PolyParser {
 public:
  PolyParser(std::string_view src, RingPtr ring) : src_(src), ring_(std::move(ring)) {}

  Poly parse_all() {
    Poly p = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected character '" + std::string(1, src_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc(ring_);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Poly t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  unsigned long exponent() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    auto digits = src_.substr(start, pos_ - start);
    if (digits.size() > 4) fail("exponent too large");
    return std::stoul(std::string(digits));
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  Poly factor() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      if (accept('^')) return inner.pow(unsigned(exponent()));
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      std::size_t save = pos_;
      skip_ws();
      if (pos_ < src_.size() && src_[pos_] == '/') {
        ++pos_;
        skip_ws();
        std::string den = digits();
        if (den.empty()) fail("expected denominator");
        if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
        Rational q(num + "/" + den);
        q.canonicalize();
        return Poly::constant(ring_, q);
      }
      pos_ = save;
      return Poly::constant(ring_, Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      std::string name(src_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      Monomial::Exponent e = 1;
      if (accept('^')) {
        auto v = exponent();
        if (v > 0xFFFF) fail("exponent too large");
        e = Monomial::Exponent(v);
      }
      return Poly::monomial(ring_, Monomial::variable(*idx, e));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Poly parse_poly(std::string_view src, const RingPtr& ring) {
  return detail::PolyParser(src, ring).parse_all();
}

/// Comma separated list of polynomials. An empty or blank string is the empty list.
inline std::vector<Poly> parse_poly_list(std::string_view src, const RingPtr& ring) {
  std::vector<Poly> out;
  if (src.find_first_not_of(" \t\r\n") == std::string_view::npos) return out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= src.size(); ++i) {
    if (i < src.size() && src[i] == '(') ++depth;
    if (i < src.size() && src[i] == ')') --depth;
    if (i == src.size() || (src[i] == ',' && depth == 0)) {
      try {
        out.push_back(parse_poly(src.substr(start, i - start), ring));
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at position")),
                         start + e.position());
      }
      start = i + 1;
    }
  }
  return out;
}

/// "x,y,z" -> list of names.
inline std::vector<std::string> parse_name_list(std::string_view src) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : src) {
    if (c == ',') {
      names.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  names.push_back(cur);
  return names;
}

}  // namespace tjurina

#include "ramq/parse.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "ramq/errors.hpp"

namespace ramq {

namespace {

// scale * prod base_k^e_k, kept unexpanded so factor multiplicities survive.
struct Factored {
  Complex scale = 1.0;
  std::vector<std::pair<Polynomial, int>> factors;

  Polynomial expand() const {
    Polynomial out = Polynomial::constant(scale);
    for (const auto& [base, e] : factors) out *= pow(base, e);
    return out;
  }
};

Factored from_poly(Polynomial p) {
  if (p.degree() <= 0) return {p.coeff(0), {}};
  return {1.0, {{std::move(p), 1}}};
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RationalFunction rational() {
    Factored num = expression();
    if (!peek('/')) {
      expect_end();
      return RationalFunction::from_factors(num.expand(), 1.0, {});
    }
    ++pos_;
    Factored den = expression();
    expect_end();
    if (den.scale == Complex(0.0)) throw ParseError("parse: zero denominator");
    return RationalFunction::from_factors(num.expand(), den.scale, den.factors);
  }

  Polynomial polynomial() {
    Factored p = expression();
    expect_end();
    return p.expand();
  }

 private:
  // expression := term (('+' | '-') term)*
  Factored expression() {
    Factored first = term();
    if (!peek('+') && !peek('-')) return first;
    Polynomial sum = first.expand();
    while (peek('+') || peek('-')) {
      const bool minus = text_[pos_++] == '-';
      Polynomial next = term().expand();
      if (minus) {
        sum -= next;
      } else {
        sum += next;
      }
    }
    return from_poly(std::move(sum));
  }

  // term := power (('*')? power)*
  Factored term() {
    Factored acc = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
      } else if (!starts_primary()) {
        break;
      }
      Factored rhs = power();
      acc.scale *= rhs.scale;
      for (auto& f : rhs.factors) acc.factors.push_back(std::move(f));
    }
    return acc;
  }

  // power := unary ('^' integer)?
  Factored power() {
    Factored base = unary();
    if (!peek('^')) return base;
    ++pos_;
    const int e = integer();
    Factored out{1.0, {}};
    for (int k = 0; k < e; ++k) out.scale *= base.scale;
    for (auto& [poly, k] : base.factors)
      if (e > 0) out.factors.emplace_back(std::move(poly), k * e);
    return out;
  }

  // unary := '-' unary | '+' unary | primary
  Factored unary() {
    if (peek('-')) {
      ++pos_;
      Factored f = unary();
      f.scale = -f.scale;
      return f;
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return primary();
  }

  // primary := number | 'x' | 'i' | '(' expression ')'
  Factored primary() {
    skip_space();
    if (pos_ >= text_.size()) throw error("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Factored inner = expression();
      if (!peek(')')) throw error("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      return {1.0, {{Polynomial({0.0, 1.0}), 1}}};
    }
    if (c == 'i') {
      ++pos_;
      return {Complex(0.0, 1.0), {}};
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return {number(), {}};
    throw error(std::string("unexpected character '") + c + "'");
  }

  double number() {
    skip_space();
    std::size_t end = pos_;
    while (end < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[end])) || text_[end] == '.')) ++end;
    if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
      std::size_t e = end + 1;
      if (e < text_.size() && (text_[e] == '+' || text_[e] == '-')) ++e;
      if (e < text_.size() && std::isdigit(static_cast<unsigned char>(text_[e]))) {
        end = e;
        while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      }
    }
    const std::string token(text_.substr(pos_, end - pos_));
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      throw error("malformed number '" + token + "'");
    }
    if (used != token.size()) throw error("malformed number '" + token + "'");
    pos_ = end;
    return v;
  }

  int integer() {
    skip_space();
    std::size_t end = pos_;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    int v = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + end, v);
    if (ec != std::errc() || end == pos_) throw error("expected a nonnegative integer exponent");
    (void)ptr;
    pos_ = end;
    return v;
  }

  bool starts_primary() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || c == 'x' || c == 'i' || c == '.' || std::isdigit(static_cast<unsigned char>(c));
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect_end() {
    skip_space();
    if (pos_ != text_.size()) throw error(std::string("unexpected trailing input '") + text_[pos_] + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  ParseError error(const std::string& what) const {
    return ParseError("parse error at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational(std::string_view text) { return Parser(text).rational(); }

Polynomial parse_polynomial(std::string_view text) { return Parser(text).polynomial(); }

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  char buf[64];
  for (int k = p.degree(); k >= 0; --k) {
    const Complex c = p.coeff(k);
    if (c == Complex(0.0)) continue;
    std::string coeff;
    bool negative = false;
    if (c.imag() == 0.0) {
      negative = c.real() < 0.0;
      const double a = std::abs(c.real());
      if (a != 1.0 || k == 0) {
        std::snprintf(buf, sizeof buf, "%.17g", a);
        coeff = buf;
      }
    } else {
      std::snprintf(buf, sizeof buf, "(%.17g%+.17g*i)", c.real(), c.imag());
      coeff = buf;
    }
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    std::string mono = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    if (!coeff.empty() && !mono.empty()) out += coeff + "*" + mono;
    else out += coeff + mono;
  }
  return out;
}

std::string format_rational(const RationalFunction& f) {
  return "(" + format_polynomial(f.num()) + ")/(" + format_polynomial(f.den()) + ")";
}

}  // namespace ramq

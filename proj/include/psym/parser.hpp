#pragma once

// Text form of algebra elements.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := INT | GEN ('^' SINT)? | '(' expr ')'
//   GEN    := 'a' | 'b' | 'x' | 'y'        (a = alpha, b = beta)
//
// Products are evaluated left to right with the noncommutative multiplication, so
// "y*x" parses to x*y + y. Whitespace between tokens is ignored.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "psym/algebra.hpp"
#include "psym/error.hpp"

namespace psym {

inline constexpr std::int64_t kMaxScalarExponent = 1 << 16;  // |e| on a, b
inline constexpr std::int64_t kMaxGeneratorExponent = 1024;  // e on x, y
inline constexpr std::size_t kMaxNesting = 256;

struct ElementExpr {
  enum class Kind { Integer, Generator, Power, Product, Sum, Negation };

  Kind kind = Kind::Integer;
  std::size_t position = 0;
  std::string digits;                  // Integer
  char generator = 0;                  // Generator
  std::int64_t exponent = 1;           // Power: children[0] is the base generator
  std::vector<ElementExpr> children;   // Power, Product, Sum, Negation
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  ElementExpr parse() {
    ElementExpr e = expr(0);
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  static ElementExpr node(ElementExpr::Kind kind, std::size_t position) {
    ElementExpr e;
    e.kind = kind;
    e.position = position;
    return e;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ElementExpr expr(std::size_t depth) {
    if (depth > kMaxNesting) fail("nesting too deep");
    skip_ws();
    ElementExpr sum = node(ElementExpr::Kind::Sum, pos_);
    sum.children.push_back(term(depth));
    while (true) {
      skip_ws();
      std::size_t at = pos_;
      if (accept('+')) {
        sum.children.push_back(term(depth));
      } else if (accept('-')) {
        ElementExpr neg = node(ElementExpr::Kind::Negation, at);
        neg.children.push_back(term(depth));
        sum.children.push_back(std::move(neg));
      } else {
        break;
      }
    }
    return sum.children.size() == 1 ? std::move(sum.children[0]) : std::move(sum);
  }

  ElementExpr term(std::size_t depth) {
    skip_ws();
    ElementExpr product = node(ElementExpr::Kind::Product, pos_);
    product.children.push_back(factor(depth));
    while (accept('*')) product.children.push_back(factor(depth));
    return product.children.size() == 1 ? std::move(product.children[0]) : std::move(product);
  }

  ElementExpr factor(std::size_t depth) {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ElementExpr inner = expr(depth + 1);
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      ElementExpr lit = node(ElementExpr::Kind::Integer, start);
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        lit.digits += text_[pos_++];
      return lit;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
        ++end;
      std::string_view name = text_.substr(pos_, end - pos_);
      if (name.size() != 1 || std::string_view("abxy").find(name[0]) == std::string_view::npos)
        fail("unknown symbol '" + std::string(name) + "'");
      pos_ = end;
      ElementExpr gen = node(ElementExpr::Kind::Generator, start);
      gen.generator = c;
      skip_ws();
      if (!accept('^')) return gen;
      ElementExpr power = node(ElementExpr::Kind::Power, start);
      power.exponent = signed_int(c);
      power.children.push_back(std::move(gen));
      return power;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::int64_t signed_int(char generator) {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
      negative = text_[pos_++] == '-';
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected integer exponent");
    std::int64_t value = 0;
    const bool scalar = generator == 'a' || generator == 'b';
    const std::int64_t cap = scalar ? kMaxScalarExponent : kMaxGeneratorExponent;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_++] - '0');
      if (value > cap) throw ParseError("exponent exceeds " + std::to_string(cap), start);
    }
    if (negative && !scalar)
      throw ParseError(std::string("negative exponent on ") + generator, start);
    return negative ? -value : value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline AlgebraElem evaluate(const ElementExpr& e, std::uint32_t p) {
  using Kind = ElementExpr::Kind;
  switch (e.kind) {
    case Kind::Integer: {
      std::int64_t v = 0;
      for (char d : e.digits) v = (v * 10 + (d - '0')) % p;
      return AlgebraElem::scalar(LaurentPoly::constant(p, v));
    }
    case Kind::Generator:
    case Kind::Power: {
      const char g = e.kind == Kind::Power ? e.children.at(0).generator : e.generator;
      const std::int64_t n = e.kind == Kind::Power ? e.exponent : 1;
      if (g == 'a' || g == 'b') {
        const auto k = static_cast<std::int32_t>(n);
        return AlgebraElem::scalar(LaurentPoly::monomial(p, 1, g == 'a' ? k : 0, g == 'b' ? k : 0));
      }
      if (n < 0) throw ParseError(std::string("negative exponent on ") + g, e.position);
      return alg_pow(g == 'x' ? AlgebraElem::x(p) : AlgebraElem::y(p), static_cast<std::uint64_t>(n));
    }
    case Kind::Product: {
      AlgebraElem acc = evaluate(e.children.at(0), p);
      for (std::size_t k = 1; k < e.children.size(); ++k) acc *= evaluate(e.children[k], p);
      return acc;
    }
    case Kind::Sum: {
      AlgebraElem acc = AlgebraElem::zero(p);
      for (const auto& child : e.children) acc += evaluate(child, p);
      return acc;
    }
    case Kind::Negation:
      return -evaluate(e.children.at(0), p);
  }
  throw InternalError("unhandled expression node");
}

}  // namespace detail

inline ElementExpr parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

inline AlgebraElem parse_element(std::string_view text, std::uint32_t p) {
  checked_algebra_prime(p);
  return detail::evaluate(parse_expr(text), p);
}

/// Canonical text; cells in (j, i) order. parse_element inverts it.
inline std::string render_element(const AlgebraElem& z) {
  std::string out;
  z.for_each_term([&](std::uint32_t i, std::uint32_t j, const LaurentPoly& c) {
    if (!out.empty()) out += " + ";
    std::string basis;
    auto factor = [&basis](const char* g, std::uint32_t e) {
      if (e == 0) return;
      if (!basis.empty()) basis += '*';
      basis += g;
      if (e > 1) basis += "^" + std::to_string(e);
    };
    factor("x", i);
    factor("y", j);
    if (basis.empty()) {
      out += c.to_string();
    } else if (c.size() > 1) {
      out += "(" + c.to_string() + ")*" + basis;
    } else {
      std::string coef = c.to_string();
      out += coef == "1" ? basis : coef + "*" + basis;
    }
  });
  return out.empty() ? "0" : out;
}

}  // namespace psym

#pragma once

// Sparse Laurent polynomials in two commuting variables a, b over GF(p).
// a stands for alpha, b for beta.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "psym/field.hpp"

namespace psym {

/// c * a^r * b^s with c a nonzero residue.
struct LaurentTerm {
  std::int32_t r = 0;
  std::int32_t s = 0;
  std::uint32_t c = 0;

  friend bool operator==(const LaurentTerm&, const LaurentTerm&) = default;
};

namespace detail {
// Canonical order: by b-exponent, then a-exponent.
constexpr bool exponent_less(const LaurentTerm& x, const LaurentTerm& y) noexcept {
  return std::tie(x.s, x.r) < std::tie(y.s, y.r);
}
}  // namespace detail

class LaurentPoly {
 public:
  explicit LaurentPoly(std::uint32_t p) : p_(checked_prime(p)) {}

  static LaurentPoly constant(std::uint32_t p, std::int64_t c) { return monomial(p, c, 0, 0); }

  static LaurentPoly monomial(std::uint32_t p, std::int64_t c, std::int32_t r, std::int32_t s) {
    LaurentPoly out(p);
    std::uint32_t cc = detail::reduce(c, out.p_);
    if (cc != 0) out.terms_.push_back({r, s, cc});
    return out;
  }

  /// Builds from arbitrary (possibly repeated, unsorted) terms.
  static LaurentPoly from_terms(std::uint32_t p, std::vector<LaurentTerm> terms) {
    LaurentPoly out(p);
    for (auto& t : terms) t.c %= out.p_;
    out.terms_ = std::move(terms);
    out.normalize();
    return out;
  }

  std::uint32_t p() const noexcept { return p_; }
  std::span<const LaurentTerm> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// True for zero and for c * a^0 * b^0.
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].r == 0 && terms_[0].s == 0);
  }

  std::uint32_t coefficient(std::int32_t r, std::int32_t s) const {
    LaurentTerm key{r, s, 0};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key, detail::exponent_less);
    return (it != terms_.end() && it->r == r && it->s == s) ? it->c : 0;
  }

  /// Term of minimal value under the (a^-1, b^-1)-adic valuation read right to left:
  /// largest b-exponent, then largest a-exponent. Requires nonzero.
  const LaurentTerm& leading_term() const {
    if (terms_.empty()) throw DomainError("leading term of zero polynomial");
    return terms_.back();
  }

  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    out.add_scaled_shifted(o, 1, 0, 0);
    return out;
  }

  LaurentPoly operator-(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    out.add_scaled_shifted(o, p_ - 1, 0, 0);
    return out;
  }

  LaurentPoly operator-() const { return scaled(p_ - 1); }

  LaurentPoly operator*(const LaurentPoly& o) const {
    same(o);
    if (is_zero() || o.is_zero()) return empty();
    if (o.terms_.size() == 1) {
      const auto& t = o.terms_[0];
      return scaled(t.c).shifted(t.r, t.s);
    }
    std::vector<LaurentTerm> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& u : terms_)
      for (const auto& v : o.terms_)
        prod.push_back({u.r + v.r, u.s + v.s, detail::mul_mod(u.c, v.c, p_)});
    LaurentPoly out = empty();
    out.terms_ = std::move(prod);
    out.normalize();
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    add_scaled_shifted(o, 1, 0, 0);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    add_scaled_shifted(o, p_ - 1, 0, 0);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly scaled(std::uint32_t c) const {
    c %= p_;
    LaurentPoly out = empty();
    if (c == 0) return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.c = detail::mul_mod(t.c, c, p_);
    return out;
  }
  LaurentPoly scaled(Fp c) const {
    check_modulus(c.modulus());
    return scaled(c.value());
  }

  /// Multiplies by a^dr * b^ds.
  LaurentPoly shifted(std::int32_t dr, std::int32_t ds) const {
    LaurentPoly out = *this;
    for (auto& t : out.terms_) {
      t.r += dr;
      t.s += ds;
    }
    return out;
  }

  /// this += c * a^dr * b^ds * src, merged in place.
  void add_scaled_shifted(const LaurentPoly& src, std::uint32_t c, std::int32_t dr,
                          std::int32_t ds) {
    same(src);
    c %= p_;
    if (c == 0 || src.is_zero()) return;
    std::vector<LaurentTerm> merged;
    merged.reserve(terms_.size() + src.terms_.size());
    auto a = terms_.begin();
    auto b = src.terms_.begin();
    while (a != terms_.end() || b != src.terms_.end()) {
      if (b == src.terms_.end()) {
        merged.push_back(*a++);
        continue;
      }
      LaurentTerm moved{b->r + dr, b->s + ds, detail::mul_mod(b->c, c, p_)};
      if (a == terms_.end() || detail::exponent_less(moved, *a)) {
        merged.push_back(moved);
        ++b;
      } else if (detail::exponent_less(*a, moved)) {
        merged.push_back(*a++);
      } else {
        std::uint32_t sum = detail::add_mod(a->c, moved.c, p_);
        if (sum != 0) merged.push_back({a->r, a->s, sum});
        ++a;
        ++b;
      }
    }
    terms_ = std::move(merged);
    assert(is_canonical());
  }

  LaurentPoly pow(std::uint64_t n) const {
    LaurentPoly result = constant(p_, 1);
    LaurentPoly base = *this;
    while (n) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n) base *= base;
    }
    return result;
  }

  /// Exact division by a single-term polynomial.
  LaurentPoly divided_by(const LaurentPoly& monomial) const {
    same(monomial);
    if (monomial.terms_.size() != 1)
      throw DomainError("Laurent division is only defined by single-term divisors");
    const auto& t = monomial.terms_[0];
    return scaled(detail::inv_mod(t.c, p_)).shifted(-t.r, -t.s);
  }

  bool is_canonical() const noexcept {
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      if (terms_[k].c == 0 || terms_[k].c >= p_) return false;
      if (k && !detail::exponent_less(terms_[k - 1], terms_[k])) return false;
    }
    return true;
  }

  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) {
    return x.p_ == y.p_ && x.terms_ == y.terms_;
  }

  /// "c*a^r*b^s" terms joined by " + "; unit coefficients and zero exponents omitted.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
      if (!out.empty()) out += " + ";
      out += render_term(t);
    }
    return out;
  }

  static std::string render_term(const LaurentTerm& t) {
    std::string out;
    auto append = [&out](const std::string& factor) {
      if (!out.empty()) out += '*';
      out += factor;
    };
    if (t.c != 1) append(std::to_string(t.c));
    if (t.r == 1) append("a");
    else if (t.r != 0) append("a^" + std::to_string(t.r));
    if (t.s == 1) append("b");
    else if (t.s != 0) append("b^" + std::to_string(t.s));
    if (out.empty()) out = "1";
    return out;
  }

 private:
  struct Unchecked {};
  LaurentPoly(std::uint32_t p, Unchecked) : p_(p) {}
  LaurentPoly empty() const { return LaurentPoly(p_, Unchecked{}); }

  void same(const LaurentPoly& o) const { check_modulus(o.p_); }
  void check_modulus(std::uint32_t q) const {
    if (q != p_)
      throw ConfigError("Laurent polynomials over GF(" + std::to_string(p_) + ") and GF(" +
                        std::to_string(q) + ") mixed");
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(), detail::exponent_less);
    std::vector<LaurentTerm> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!out.empty() && out.back().r == t.r && out.back().s == t.s)
        out.back().c = detail::add_mod(out.back().c, t.c, p_);
      else
        out.push_back(t);
      if (out.back().c == 0) out.pop_back();
    }
    terms_ = std::move(out);
    assert(is_canonical());
  }

  std::uint32_t p_;
  std::vector<LaurentTerm> terms_;
};

}  // namespace psym

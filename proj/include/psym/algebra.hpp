#pragma once

// The symbol p-algebra [a, b)_p generated over F = GF(p)(a, b) by x, y with
//   x^p - x = a,   y^p = b,   y x = (x + 1) y,
// stored in the normal form  sum a_{i,j} x^i y^j,  0 <= i, j < p.

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "psym/error.hpp"
#include "psym/field.hpp"
#include "psym/laurent.hpp"

namespace psym {

inline constexpr std::uint32_t kMaxAlgebraPrime = 13;

/// Throws ConfigError unless p is a prime no larger than kMaxAlgebraPrime.
inline std::uint32_t checked_algebra_prime(std::uint64_t p) {
  std::uint32_t q = checked_prime(p);
  if (q > kMaxAlgebraPrime)
    throw ConfigError("algebra operations support p <= " + std::to_string(kMaxAlgebraPrime) +
                      ", got " + std::to_string(q));
  return q;
}

namespace detail {

// (c0 + c1*a) * x^i
struct XTerm {
  std::uint32_t i;
  std::uint32_t c0;
  std::uint32_t c1;
};

// Precomputed x^u * (x + v)^w in reduced form, for all u, v, w in [0, p).
class ProductTable {
 public:
  explicit ProductTable(std::uint32_t p) : p_(p), binom_(p * p, 0), table_(p * p * p) {
    for (std::uint32_t n = 0; n < p; ++n) {
      binom_[n * p] = 1 % p;
      for (std::uint32_t k = 1; k <= n; ++k)
        binom_[n * p + k] = add_mod(binom_[(n - 1) * p + k - 1],
                                    k < n ? binom_[(n - 1) * p + k] : 0, p);
    }
    std::vector<std::uint32_t> c0(p), c1(p);
    for (std::uint32_t u = 0; u < p; ++u)
      for (std::uint32_t v = 0; v < p; ++v)
        for (std::uint32_t w = 0; w < p; ++w) {
          std::fill(c0.begin(), c0.end(), 0);
          std::fill(c1.begin(), c1.end(), 0);
          for (std::uint32_t l = 0; l <= w; ++l) {
            std::uint32_t coef = mul_mod(binomial(w, l), pow_mod(v, w - l, p), p);
            if (coef == 0) continue;
            std::uint32_t k = u + l;  // at most 2p - 2
            if (k < p) {
              c0[k] = add_mod(c0[k], coef, p);
            } else {
              // x^k = x^(k-p+1) + a * x^(k-p); one step suffices since k - p + 1 < p.
              c0[k - p + 1] = add_mod(c0[k - p + 1], coef, p);
              c1[k - p] = add_mod(c1[k - p], coef, p);
            }
          }
          auto& entry = table_[(u * p + v) * p + w];
          for (std::uint32_t i = 0; i < p; ++i)
            if (c0[i] || c1[i]) entry.push_back({i, c0[i], c1[i]});
        }
  }

  std::uint32_t binomial(std::uint32_t n, std::uint32_t k) const { return binom_[n * p_ + k]; }

  const std::vector<XTerm>& x_power_times_shift(std::uint32_t u, std::uint32_t v,
                                                std::uint32_t w) const {
    return table_[(u * p_ + v) * p_ + w];
  }

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> binom_;
  std::vector<std::vector<XTerm>> table_;
};

inline const ProductTable& product_table(std::uint32_t p) {
  static std::array<std::once_flag, kMaxAlgebraPrime + 1> flags;
  static std::array<std::unique_ptr<ProductTable>, kMaxAlgebraPrime + 1> tables;
  std::call_once(flags[p], [p] { tables[p] = std::make_unique<ProductTable>(p); });
  return *tables[p];
}

}  // namespace detail

class AlgebraElem {
 public:
  static AlgebraElem zero(std::uint32_t p) { return AlgebraElem(checked_algebra_prime(p)); }

  static AlgebraElem one(std::uint32_t p) { return scalar(LaurentPoly::constant(p, 1)); }

  static AlgebraElem scalar(const LaurentPoly& c) { return monomial(c, 0, 0); }

  /// c * x^i * y^j with 0 <= i, j < p.
  static AlgebraElem monomial(const LaurentPoly& c, std::uint32_t i, std::uint32_t j) {
    AlgebraElem out = zero(c.p());
    out.check_index(i, j);
    out.cell(i, j) = c;
    return out;
  }

  static AlgebraElem x(std::uint32_t p) { return monomial(LaurentPoly::constant(p, 1), 1 % p, 0); }
  static AlgebraElem y(std::uint32_t p) { return monomial(LaurentPoly::constant(p, 1), 0, 1 % p); }

  std::uint32_t p() const noexcept { return p_; }

  const LaurentPoly& coeff(std::uint32_t i, std::uint32_t j) const {
    check_index(i, j);
    return cells_[i + p_ * j];
  }

  /// a_{i,j} += c
  void add_term(std::uint32_t i, std::uint32_t j, const LaurentPoly& c) {
    check_index(i, j);
    cell(i, j) += c;
  }

  bool is_zero() const noexcept {
    for (const auto& c : cells_)
      if (!c.is_zero()) return false;
    return true;
  }

  std::size_t nonzero_cells() const noexcept {
    std::size_t n = 0;
    for (const auto& c : cells_) n += !c.is_zero();
    return n;
  }

  /// Visits the nonzero coefficients in (j, i) order.
  template <class F>
  void for_each_term(F&& f) const {
    for (std::uint32_t j = 0; j < p_; ++j)
      for (std::uint32_t i = 0; i < p_; ++i) {
        const auto& c = cells_[i + p_ * j];
        if (!c.is_zero()) f(i, j, c);
      }
  }

  AlgebraElem operator+(const AlgebraElem& o) const {
    AlgebraElem out = *this;
    return out += o;
  }
  AlgebraElem operator-(const AlgebraElem& o) const {
    AlgebraElem out = *this;
    return out -= o;
  }
  AlgebraElem operator-() const { return zero(p_) - *this; }
  AlgebraElem& operator+=(const AlgebraElem& o) {
    same(o);
    for (std::size_t k = 0; k < cells_.size(); ++k) cells_[k] += o.cells_[k];
    return *this;
  }
  AlgebraElem& operator-=(const AlgebraElem& o) {
    same(o);
    for (std::size_t k = 0; k < cells_.size(); ++k) cells_[k] -= o.cells_[k];
    return *this;
  }

  /// Left multiplication by a central scalar.
  AlgebraElem scaled(const LaurentPoly& c) const {
    if (c.p() != p_) throw ConfigError("scalar and element over different primes");
    AlgebraElem out = *this;
    for (auto& cell : out.cells_) cell = cell * c;
    return out;
  }

  AlgebraElem operator*(const AlgebraElem& o) const {
    same(o);
    const auto& table = detail::product_table(p_);
    AlgebraElem out(p_);
    // (x^u y^v)(x^w y^t) = x^u (x + v)^w y^(v + t)
    for (std::uint32_t v = 0; v < p_; ++v)
      for (std::uint32_t u = 0; u < p_; ++u) {
        const auto& lhs = cells_[u + p_ * v];
        if (lhs.is_zero()) continue;
        for (std::uint32_t t = 0; t < p_; ++t)
          for (std::uint32_t w = 0; w < p_; ++w) {
            const auto& rhs = o.cells_[w + p_ * t];
            if (rhs.is_zero()) continue;
            LaurentPoly coef = lhs * rhs;
            std::uint32_t j = v + t;
            std::int32_t beta_shift = 0;
            if (j >= p_) {
              j -= p_;
              beta_shift = 1;
            }
            for (const auto& xt : table.x_power_times_shift(u, v, w)) {
              auto& target = out.cell(xt.i, j);
              if (xt.c0) target.add_scaled_shifted(coef, xt.c0, 0, beta_shift);
              if (xt.c1) target.add_scaled_shifted(coef, xt.c1, 1, beta_shift);
            }
          }
      }
    return out;
  }
  AlgebraElem& operator*=(const AlgebraElem& o) { return *this = *this * o; }

  friend bool operator==(const AlgebraElem& a, const AlgebraElem& b) {
    return a.p_ == b.p_ && a.cells_ == b.cells_;
  }

 private:
  explicit AlgebraElem(std::uint32_t p)
      : p_(p), cells_(std::size_t{p} * p, LaurentPoly(p)) {}

  LaurentPoly& cell(std::uint32_t i, std::uint32_t j) { return cells_[i + p_ * j]; }

  void check_index(std::uint32_t i, std::uint32_t j) const {
    if (i >= p_ || j >= p_)
      throw ArgumentError("basis index (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") out of range for p = " + std::to_string(p_));
  }
  void same(const AlgebraElem& o) const {
    if (o.p_ != p_)
      throw ConfigError("algebra elements over p = " + std::to_string(p_) + " and p = " +
                        std::to_string(o.p_) + " mixed");
  }

  std::uint32_t p_;
  std::vector<LaurentPoly> cells_;  // a_{i,j} at i + p*j; zero polynomial = absent
};

inline AlgebraElem alg_mul(const AlgebraElem& z0, const AlgebraElem& z1) { return z0 * z1; }

inline AlgebraElem alg_pow(const AlgebraElem& z, std::uint64_t n) {
  AlgebraElem result = AlgebraElem::one(z.p());
  AlgebraElem base = z;
  while (n) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

/// True iff all support is at (0, 0), i.e. z lies in the centre F. Zero counts as scalar.
inline bool is_scalar(const AlgebraElem& z) {
  bool scalar = true;
  z.for_each_term([&](std::uint32_t i, std::uint32_t j, const LaurentPoly&) {
    if (i || j) scalar = false;
  });
  return scalar;
}

/// True iff z lies in the maximal subfield F[x] (support in column j = 0).
inline bool in_fx(const AlgebraElem& z) {
  bool inside = true;
  z.for_each_term([&](std::uint32_t, std::uint32_t j, const LaurentPoly&) {
    if (j) inside = false;
  });
  return inside;
}

/// The automorphism x -> x + 1 of F[x]; equals conjugation by y.
inline AlgebraElem sigma_fx(const AlgebraElem& lambda) {
  if (!in_fx(lambda)) throw DomainError("sigma is only defined on F[x]");
  const std::uint32_t p = lambda.p();
  const auto& table = detail::product_table(p);
  AlgebraElem out = AlgebraElem::zero(p);
  lambda.for_each_term([&](std::uint32_t i, std::uint32_t, const LaurentPoly& c) {
    for (std::uint32_t l = 0; l <= i; ++l)
      out.add_term(l, 0, c.scaled(table.binomial(i, l)));
  });
  return out;
}

}  // namespace psym

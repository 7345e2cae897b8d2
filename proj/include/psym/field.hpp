#pragma once

// Arithmetic in GF(p) for a prime p chosen at runtime.

#include <cstdint>
#include <string>

#include "psym/error.hpp"

namespace psym {

constexpr bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Throws ConfigError unless p is prime and fits the 32-bit residue type.
inline std::uint32_t checked_prime(std::uint64_t p) {
  if (p > 0x7fffffffULL || !is_prime(p))
    throw ConfigError("modulus " + std::to_string(p) + " is not a supported prime");
  return static_cast<std::uint32_t>(p);
}

namespace detail {

// Representative of v mod p in [0, p).
constexpr std::uint32_t reduce(std::int64_t v, std::uint32_t p) noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

constexpr std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

constexpr std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}

constexpr std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}

constexpr std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) noexcept {
  std::uint32_t result = 1 % p;
  while (e) {
    if (e & 1) result = mul_mod(result, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return result;
}

// Extended Euclid; a must be a nonzero residue.
inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(p) + ")");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t, p);
}

}  // namespace detail

class PrimeField;

/// Element of GF(p). Carries its modulus; mixing moduli throws ConfigError.
class Fp {
 public:
  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  Fp operator+(Fp o) const { return make(detail::add_mod(value_, o.value_, same(o))); }
  Fp operator-(Fp o) const { return make(detail::sub_mod(value_, o.value_, same(o))); }
  Fp operator*(Fp o) const { return make(detail::mul_mod(value_, o.value_, same(o))); }
  Fp operator/(Fp o) const { return *this * o.inv(); }
  Fp operator-() const { return make(value_ == 0 ? 0 : modulus_ - value_); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }

  Fp inv() const { return make(detail::inv_mod(value_, modulus_)); }
  Fp pow(std::uint64_t e) const { return make(detail::pow_mod(value_, e, modulus_)); }

  friend bool operator==(Fp a, Fp b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }

 private:
  friend class PrimeField;
  Fp(std::uint32_t value, std::uint32_t modulus) : value_(value), modulus_(modulus) {}

  Fp make(std::uint32_t v) const { return Fp(v, modulus_); }
  std::uint32_t same(Fp o) const {
    if (o.modulus_ != modulus_)
      throw ConfigError("GF(" + std::to_string(modulus_) + ") and GF(" +
                        std::to_string(o.modulus_) + ") operands mixed");
    return modulus_;
  }

  std::uint32_t value_;
  std::uint32_t modulus_;
};

/// Validated modulus; the only way to mint Fp values.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(checked_prime(p)) {}

  std::uint32_t p() const noexcept { return p_; }
  Fp operator()(std::int64_t v) const { return Fp(detail::reduce(v, p_), p_); }
  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1 % p_, p_); }

 private:
  std::uint32_t p_;
};

inline Fp fp_inv(Fp a) { return a.inv(); }

/// Sum of k^l for k = 0..p-1, reduced mod p (with 0^0 = 1).
inline Fp power_sum(std::uint64_t p, std::uint64_t l) {
  PrimeField field(p);
  Fp total = field.zero();
  for (std::uint32_t k = 0; k < field.p(); ++k) total += field(k).pow(l);
  return total;
}

}  // namespace psym

#pragma once

// The (a^-1, b^-1)-adic valuation, read right to left, extended to the algebra.
// Values live in (1/p)Z x (1/p)Z and are stored as integer numerators over p:
//   v(c a^r b^s x^i y^j) = -(p r + i, p s + j) / p.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "psym/algebra.hpp"
#include "psym/forms.hpp"
#include "psym/zerosum.hpp"

namespace psym {

struct Value {
  bool finite = false;  // false encodes v(0)
  std::int64_t pu = 0;  // p * first coordinate (a-direction)
  std::int64_t pw = 0;  // p * second coordinate (b-direction)

  static Value infinite() { return {}; }
  static Value of(std::int64_t pu, std::int64_t pw) { return {true, pu, pw}; }

  /// Right-to-left lexicographic: second coordinate decides first. Infinity is maximal.
  friend std::strong_ordering operator<=>(const Value& x, const Value& y) {
    if (!x.finite || !y.finite) return y.finite <=> x.finite;
    if (auto c = x.pw <=> y.pw; c != 0) return c;
    return x.pu <=> y.pu;
  }
  friend bool operator==(const Value& x, const Value& y) { return (x <=> y) == 0; }

  friend Value operator+(const Value& x, const Value& y) {
    if (!x.finite || !y.finite) return infinite();
    return of(x.pu + y.pu, x.pw + y.pw);
  }
};

namespace detail {
inline std::string fraction(std::int64_t num, std::uint32_t p) {
  if (num % p == 0) return std::to_string(num / static_cast<std::int64_t>(p));
  return std::to_string(num) + "/" + std::to_string(p);
}
}  // namespace detail

inline std::string to_string(const Value& v, std::uint32_t p) {
  if (!v.finite) return "inf";
  return "(" + detail::fraction(v.pu, p) + ", " + detail::fraction(v.pw, p) + ")";
}

/// c * a^r * b^s * x^i * y^j.
struct Monomial {
  Fp c;
  std::int32_t r = 0;
  std::int32_t s = 0;
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  std::uint32_t p() const { return c.modulus(); }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline Monomial make_monomial(std::uint32_t p, std::int64_t c, std::int32_t r, std::int32_t s,
                              std::uint32_t i, std::uint32_t j) {
  PrimeField field(p);
  Monomial m{field(c), r, s, i, j};
  if (m.c.is_zero()) throw ArgumentError("monomial coefficient must be nonzero");
  if (i >= p || j >= p) throw ArgumentError("monomial exponents of x and y must lie in [0, p)");
  return m;
}

inline AlgebraElem to_element(const Monomial& m) {
  return AlgebraElem::monomial(LaurentPoly::monomial(m.p(), m.c.value(), m.r, m.s), m.i, m.j);
}

inline std::string to_string(const Monomial& m) {
  std::string out = LaurentPoly::render_term({m.r, m.s, m.c.value()});
  auto factor = [&](const char* g, std::uint32_t e) {
    if (e == 0) return;
    out = (out == "1" ? std::string() : out + "*") + g + (e == 1 ? "" : "^" + std::to_string(e));
  };
  factor("x", m.i);
  factor("y", m.j);
  return out;
}

inline Value mono_value(const Monomial& m) {
  const std::int64_t p = m.p();
  return Value::of(-(p * m.r + m.i), -(p * m.s + m.j));
}

/// Class of a value modulo Z x Z, as the pair (i, j) = -p v mod p.
inline GPair value_class_of(const Value& v, std::uint32_t p) {
  if (!v.finite) throw DomainError("value class of zero");
  return {detail::reduce(-v.pu, p), detail::reduce(-v.pw, p)};
}

/// Unique minimal-value monomial of z, if z is nonzero.
inline std::optional<Monomial> find_leading_monomial(const AlgebraElem& z) {
  std::optional<Monomial> best;
  Value best_value = Value::infinite();
  PrimeField field(z.p());
  z.for_each_term([&](std::uint32_t i, std::uint32_t j, const LaurentPoly& c) {
    // within one cell the largest (s, r) has minimal value
    const auto& t = c.leading_term();
    Monomial m{field(t.c), t.r, t.s, i, j};
    Value v = mono_value(m);
    if (v < best_value) {
      best_value = v;
      best = m;
    }
  });
  return best;
}

inline Value value(const AlgebraElem& z) {
  auto m = find_leading_monomial(z);
  return m ? mono_value(*m) : Value::infinite();
}

inline Monomial leading_monomial(const AlgebraElem& z) {
  auto m = find_leading_monomial(z);
  if (!m) throw DomainError("leading monomial of zero");
  return *m;
}

/// Leading monomial of m0 * m1 in closed form: exponents of x, y wrap modulo p and carry
/// into a, b respectively.
inline Monomial mono_mul_tilde(const Monomial& m0, const Monomial& m1) {
  const std::uint32_t p = m0.p();
  if (m1.p() != p) throw ConfigError("monomials over different primes");
  const std::uint32_t i_sum = m0.i + m1.i;
  const std::uint32_t j_sum = m0.j + m1.j;
  Monomial out{m0.c * m1.c, 0, 0, i_sum % p, j_sum % p};
  out.r = m0.r + m1.r + static_cast<std::int32_t>((i_sum - out.i) / p);
  out.s = m0.s + m1.s + static_cast<std::int32_t>((j_sum - out.j) / p);
  return out;
}

using BigInt = boost::multiprecision::cpp_int;

/// (d_1 + ... + d_m)! / (d_1! ... d_m!), exactly.
inline BigInt multinomial(std::span<const std::uint32_t> d) {
  BigInt result = 1;
  std::uint64_t n = 0;
  for (std::uint32_t dk : d)
    for (std::uint32_t t = 1; t <= dk; ++t) {
      ++n;
      result *= n;
      result /= t;  // exact: running value is a product of binomials
    }
  return result;
}

inline BigInt multinomial(const MultiIndex& d) { return multinomial(std::span(d.d)); }

struct Prop33Report {
  std::uint32_t p = 0;
  std::vector<GPair> classes;
  std::size_t excluded = 0;  // index into classes left out of S
  ZeroSumSolution solution;  // over classes minus the excluded one
  MultiIndex d;              // over all classes, 0 at the excluded one
  LaurentPoly trace;
  BigInt n;                  // number of words in the star product
  std::uint32_t expected_coefficient = 0;  // -n mod p
  std::int32_t expected_r = 0;
  std::int32_t expected_s = 0;
  bool check_passed = false;

  explicit Prop33Report(std::uint32_t prime) : p(prime), trace(prime) {}
};

/// For p + 2 distinct classes (i_k, j_k), builds v_k = x^{i_k} y^{j_k}, finds exponents
/// with sum d <= p - 1 and sum d_k (i_k, j_k) = (p - 1, 0), and checks that the trace of
/// the star product has leading term -n a^r b^s with n the multinomial count.
inline Prop33Report prop33_witness(std::uint32_t p, std::span<const GPair> classes) {
  checked_algebra_prime(p);
  if (classes.size() != std::size_t{p} + 2)
    throw ArgumentError("expected p + 2 = " + std::to_string(p + 2) + " classes, got " +
                        std::to_string(classes.size()));
  for (const auto& c : classes)
    if (c.u >= p || c.w >= p) throw ArgumentError("class coordinate outside [0, p)");
  {
    std::vector<GPair> sorted(classes.begin(), classes.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ArgumentError("classes must be distinct");
  }

  Prop33Report report(p);
  report.classes.assign(classes.begin(), classes.end());
  auto zero = std::find(classes.begin(), classes.end(), GPair{});
  report.excluded = zero != classes.end()
                        ? static_cast<std::size_t>(zero - classes.begin())
                        : static_cast<std::size_t>(
                              std::max_element(classes.begin(), classes.end()) - classes.begin());

  ZeroSumInstance inst{p, {}, GPair{p - 1, 0}};
  for (std::size_t k = 0; k < classes.size(); ++k)
    if (k != report.excluded) inst.S.push_back(classes[k]);
  report.solution = solve(inst);

  report.d.d.assign(classes.size(), 0);
  for (std::size_t k = 0, q = 0; k < classes.size(); ++k)
    if (k != report.excluded) report.d.d[k] = report.solution.d[q++];

  std::vector<AlgebraElem> vs;
  std::int64_t i_total = 0, j_total = 0;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    vs.push_back(AlgebraElem::monomial(LaurentPoly::constant(p, 1), classes[k].u, classes[k].w));
    i_total += std::int64_t{report.d.d[k]} * classes[k].u;
    j_total += std::int64_t{report.d.d[k]} * classes[k].w;
  }
  report.trace = trace(star(vs, report.d));
  report.n = multinomial(report.d);
  const auto n_mod = static_cast<std::uint32_t>(report.n % p);
  report.expected_coefficient = n_mod == 0 ? 0 : p - n_mod;
  report.expected_r = static_cast<std::int32_t>((i_total - (p - 1)) / p);
  report.expected_s = static_cast<std::int32_t>(j_total / p);

  if (!report.trace.is_zero() && report.expected_coefficient != 0) {
    const auto& lead = report.trace.leading_term();
    report.check_passed = lead.c == report.expected_coefficient && lead.r == report.expected_r &&
                          lead.s == report.expected_s;
  }
  return report;
}

}  // namespace psym

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

#include "psym/algebra.hpp"
#include "psym/zerosum.hpp"

namespace psym::testing {

/// Seed for randomized suites; PSYM_SEED overrides the default.
inline std::uint64_t suite_seed(std::uint64_t fallback = 20240611) {
  if (const char* env = std::getenv("PSYM_SEED")) return std::strtoull(env, nullptr, 10);
  return fallback;
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin() { return uniform(0, 1) == 1; }
  std::mt19937_64& engine() { return rng_; }

  std::uint32_t nonzero_residue(std::uint32_t p) { return static_cast<std::uint32_t>(uniform(1, p - 1)); }

  /// Up to max_terms terms, exponents in [-span, span].
  LaurentPoly poly(std::uint32_t p, int max_terms = 3, int span = 2) {
    std::vector<LaurentTerm> terms;
    int n = static_cast<int>(uniform(0, max_terms));
    for (int k = 0; k < n; ++k)
      terms.push_back({static_cast<std::int32_t>(uniform(-span, span)),
                       static_cast<std::int32_t>(uniform(-span, span)), nonzero_residue(p)});
    return LaurentPoly::from_terms(p, terms);
  }

  LaurentPoly nonzero_poly(std::uint32_t p, int max_terms = 3, int span = 2) {
    for (;;) {
      auto c = poly(p, max_terms, span);
      if (!c.is_zero()) return c;
    }
  }

  /// Sparse element with up to max_cells nonzero cells.
  AlgebraElem element(std::uint32_t p, int max_cells = 3, int max_terms = 2, int span = 2) {
    AlgebraElem z = AlgebraElem::zero(p);
    int n = static_cast<int>(uniform(0, max_cells));
    for (int k = 0; k < n; ++k)
      z.add_term(static_cast<std::uint32_t>(uniform(0, p - 1)),
                 static_cast<std::uint32_t>(uniform(0, p - 1)), poly(p, max_terms, span));
    return z;
  }

  AlgebraElem nonzero_element(std::uint32_t p, int max_cells = 3, int max_terms = 2, int span = 2) {
    for (;;) {
      auto z = element(p, max_cells, max_terms, span);
      if (!z.is_zero()) return z;
    }
  }

  /// Element of F[x].
  AlgebraElem fx_element(std::uint32_t p, int max_terms = 2, int span = 2) {
    AlgebraElem z = AlgebraElem::zero(p);
    for (std::uint32_t i = 0; i < p; ++i)
      if (coin()) z.add_term(i, 0, poly(p, max_terms, span));
    return z;
  }

  AlgebraElem monomial_element(std::uint32_t p, int span = 2) {
    return AlgebraElem::monomial(
        LaurentPoly::monomial(p, nonzero_residue(p), static_cast<std::int32_t>(uniform(-span, span)),
                              static_cast<std::int32_t>(uniform(-span, span))),
        static_cast<std::uint32_t>(uniform(0, p - 1)), static_cast<std::uint32_t>(uniform(0, p - 1)));
  }

  ZeroSumInstance zerosum_instance(std::uint32_t p) {
    std::vector<GPair> all;
    for (std::uint32_t u = 0; u < p; ++u)
      for (std::uint32_t w = 0; w < p; ++w)
        if (u || w) all.push_back({u, w});
    std::shuffle(all.begin(), all.end(), rng_);
    ZeroSumInstance inst{p, std::vector<GPair>(all.begin(), all.begin() + p + 1), {}};
    inst.g = all[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(all.size()) - 1))];
    return inst;
  }

 private:
  std::mt19937_64 rng_;
};

/// Every d with sum d <= max_weight, by plain recursion; for frozen-value derivation.
inline std::vector<std::vector<std::uint32_t>> all_bounded_vectors(std::size_t len, std::uint32_t max_weight) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur(len, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::uint32_t left) -> void {
    if (pos == len) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, max_weight);
  return out;
}

}  // namespace psym::testing

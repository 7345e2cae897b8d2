#pragma once

// Trace and norm forms, symmetrized ("star") products and the trace criterion
// for p-central subspaces.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "psym/algebra.hpp"

namespace psym {

/// Exponent vector (d_1, ..., d_m) of a star product.
struct MultiIndex {
  std::vector<std::uint32_t> d;

  std::uint64_t weight() const { return std::accumulate(d.begin(), d.end(), std::uint64_t{0}); }
  std::size_t size() const { return d.size(); }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

struct PCentralWitness {
  MultiIndex index;
  LaurentPoly trace;
};

struct PCentralVerdict {
  bool is_p_central = true;
  std::optional<PCentralWitness> witness;  // set iff !is_p_central
};

/// Reduced trace: -a_{p-1,0}.
inline LaurentPoly trace(const AlgebraElem& z) {
  return -z.coeff(z.p() - 1, 0);
}

namespace detail {

inline LaurentPoly scalar_part(const AlgebraElem& z, const char* what) {
  if (!is_scalar(z)) throw InternalError(std::string(what) + " produced a non-scalar result");
  return z.coeff(0, 0);
}

}  // namespace detail

/// lambda + sigma(lambda) + ... + sigma^{p-1}(lambda) for lambda in F[x].
inline LaurentPoly trace_fx(const AlgebraElem& lambda) {
  if (!in_fx(lambda)) throw DomainError("trace_fx requires an element of F[x]");
  AlgebraElem sum = lambda;
  AlgebraElem term = lambda;
  for (std::uint32_t k = 1; k < lambda.p(); ++k) {
    term = sigma_fx(term);
    sum += term;
  }
  return detail::scalar_part(sum, "trace_fx");
}

/// lambda * sigma(lambda) * ... * sigma^{p-1}(lambda) for lambda in F[x].
inline LaurentPoly norm_fx(const AlgebraElem& lambda) {
  if (!in_fx(lambda)) throw DomainError("norm_fx requires an element of F[x]");
  AlgebraElem product = lambda;
  AlgebraElem term = lambda;
  for (std::uint32_t k = 1; k < lambda.p(); ++k) {
    term = sigma_fx(term);
    product *= term;
  }
  return detail::scalar_part(product, "norm_fx");
}

namespace detail {

inline std::uint32_t common_prime(std::span<const AlgebraElem> vs) {
  if (vs.empty()) throw ArgumentError("empty element sequence");
  for (const auto& v : vs)
    if (v.p() != vs[0].p()) throw ConfigError("elements over different primes");
  return vs[0].p();
}

}  // namespace detail

/// Sum of all distinct words with d_k copies of vs[k].
///
/// Dynamic programme over sub-multi-indices e <= d: star(e) = sum_k star(e - delta_k) * v_k.
/// Every word is counted once, classified by its last letter.
inline AlgebraElem star(std::span<const AlgebraElem> vs, const MultiIndex& d) {
  if (vs.size() != d.size())
    throw ArgumentError("star: " + std::to_string(vs.size()) + " elements but " +
                        std::to_string(d.size()) + " exponents");
  const std::uint32_t p = detail::common_prime(vs);
  const std::size_t m = vs.size();

  std::vector<std::size_t> stride(m);
  std::size_t cells = 1;
  for (std::size_t k = 0; k < m; ++k) {
    stride[k] = cells;
    cells *= std::size_t{d.d[k]} + 1;
  }

  std::vector<AlgebraElem> table(cells, AlgebraElem::zero(p));
  table[0] = AlgebraElem::one(p);
  std::vector<std::uint32_t> e(m, 0);
  for (std::size_t idx = 1; idx < cells; ++idx) {
    // advance the mixed-radix counter to idx
    for (std::size_t k = 0; k < m; ++k) {
      if (e[k] < d.d[k]) {
        ++e[k];
        break;
      }
      e[k] = 0;
    }
    AlgebraElem acc = AlgebraElem::zero(p);
    for (std::size_t k = 0; k < m; ++k)
      if (e[k] > 0) acc += table[idx - stride[k]] * vs[k];
    table[idx] = std::move(acc);
  }
  return table[cells - 1];
}

inline constexpr std::uint64_t kStarNaiveMaxWeight = 8;

/// Same as star, by explicit enumeration of the multiset permutations.
inline AlgebraElem star_naive(std::span<const AlgebraElem> vs, const MultiIndex& d) {
  if (vs.size() != d.size()) throw ArgumentError("star_naive: length mismatch");
  if (d.weight() > kStarNaiveMaxWeight)
    throw ArgumentError("star_naive: weight " + std::to_string(d.weight()) + " exceeds " +
                        std::to_string(kStarNaiveMaxWeight));
  const std::uint32_t p = detail::common_prime(vs);

  std::vector<std::size_t> word;
  for (std::size_t k = 0; k < d.size(); ++k) word.insert(word.end(), d.d[k], k);

  AlgebraElem sum = AlgebraElem::zero(p);
  do {
    AlgebraElem product = AlgebraElem::one(p);
    for (std::size_t k : word) product *= vs[k];
    sum += product;
  } while (std::next_permutation(word.begin(), word.end()));
  return sum;
}

/// All multi-indices of length m and the given weight, lexicographically descending:
/// (w,0,...,0) first, (0,...,0,w) last.
inline std::vector<MultiIndex> multi_indices_of_weight(std::size_t m, std::uint32_t weight) {
  std::vector<MultiIndex> out;
  if (m == 0) {
    if (weight == 0) out.push_back({});
    return out;
  }
  std::vector<std::uint32_t> cur(m, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::uint32_t left) -> void {
    if (pos + 1 == m) {
      cur[pos] = left;
      out.push_back({cur});
      return;
    }
    for (std::uint32_t v = left + 1; v-- > 0;) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, weight);
  return out;
}

/// Checks Tr(v_1^{d_1} * ... * v_m^{d_m}) = 0 for every 1 <= sum d <= p - 1.
/// Multi-indices are tried in graded lexicographic order, so the reported witness is
/// the first failing one in that order.
inline PCentralVerdict p_central_test(std::span<const AlgebraElem> vs) {
  const std::uint32_t p = detail::common_prime(vs);
  const std::size_t m = vs.size();

  // star products of the previous weight, keyed by exponent vector
  std::map<std::vector<std::uint32_t>, AlgebraElem> previous;
  previous.emplace(std::vector<std::uint32_t>(m, 0), AlgebraElem::one(p));

  for (std::uint32_t w = 1; w + 1 <= p; ++w) {
    std::map<std::vector<std::uint32_t>, AlgebraElem> layer;
    for (auto& idx : multi_indices_of_weight(m, w)) {
      AlgebraElem acc = AlgebraElem::zero(p);
      auto e = idx.d;
      for (std::size_t k = 0; k < m; ++k) {
        if (e[k] == 0) continue;
        --e[k];
        acc += previous.at(e) * vs[k];
        ++e[k];
      }
      LaurentPoly tr = trace(acc);
      if (!tr.is_zero()) return {false, PCentralWitness{std::move(idx), std::move(tr)}};
      layer.emplace(std::move(idx.d), std::move(acc));
    }
    previous = std::move(layer);
  }
  return {true, std::nullopt};
}

}  // namespace psym

#pragma once

// Bounded representations in G = Z/p x Z/p.
//
// Given p + 1 distinct nonzero s_1..s_{p+1} and a nonzero target g, find non-negative
// d_1..d_{p+1} with sum d <= p - 1 and sum d_k s_k = g. The constructive solver follows
// the line-counting case split; oracle_solve is an independent shortest-path search.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "psym/error.hpp"
#include "psym/field.hpp"

namespace psym {

struct GPair {
  std::uint32_t u = 0;
  std::uint32_t w = 0;

  bool is_zero() const noexcept { return u == 0 && w == 0; }
  friend auto operator<=>(const GPair&, const GPair&) = default;
};

struct ZeroSumInstance {
  std::uint32_t p = 0;
  std::vector<GPair> S;
  GPair g;
};

enum class Branch { P2Direct, Case1TwoLines, Case2aThreeLinesIndependent, Case2bRepeatedLine, Oracle };

inline const char* to_string(Branch b) {
  switch (b) {
    case Branch::P2Direct: return "p2-direct";
    case Branch::Case1TwoLines: return "case1-two-lines";
    case Branch::Case2aThreeLinesIndependent: return "case2a-three-lines-independent";
    case Branch::Case2bRepeatedLine: return "case2b-repeated-line";
    case Branch::Oracle: return "oracle";
  }
  return "unknown";
}

inline std::optional<Branch> branch_from_string(const std::string& s) {
  for (Branch b : {Branch::P2Direct, Branch::Case1TwoLines, Branch::Case2aThreeLinesIndependent,
                   Branch::Case2bRepeatedLine, Branch::Oracle})
    if (s == to_string(b)) return b;
  return std::nullopt;
}

struct ZeroSumSolution {
  std::vector<std::uint32_t> d;
  Branch branch = Branch::Oracle;

  std::uint64_t weight() const { return std::accumulate(d.begin(), d.end(), std::uint64_t{0}); }
};

namespace detail {

inline GPair scale(GPair s, std::uint32_t k, std::uint32_t p) {
  return {mul_mod(s.u, k % p, p), mul_mod(s.w, k % p, p)};
}

inline GPair add(GPair a, GPair b, std::uint32_t p) {
  return {add_mod(a.u, b.u, p), add_mod(a.w, b.w, p)};
}

// (e1, e2) with e1*s1 + e2*s2 = g; s1, s2 must be independent.
inline std::pair<std::uint32_t, std::uint32_t> coordinates(GPair g, GPair s1, GPair s2,
                                                           std::uint32_t p) {
  const std::uint32_t det = sub_mod(mul_mod(s1.u, s2.w, p), mul_mod(s2.u, s1.w, p), p);
  if (det == 0) throw InternalError("coordinates requested in a dependent pair");
  const std::uint32_t inv = inv_mod(det, p);
  std::uint32_t e1 = mul_mod(sub_mod(mul_mod(g.u, s2.w, p), mul_mod(s2.u, g.w, p), p), inv, p);
  std::uint32_t e2 = mul_mod(sub_mod(mul_mod(s1.u, g.w, p), mul_mod(g.u, s1.w, p), p), inv, p);
  return {e1, e2};
}

// The k with t = k*s, for t on the line of the nonzero s.
inline std::uint32_t multiple_of(GPair t, GPair s, std::uint32_t p) {
  return s.u != 0 ? mul_mod(t.u, inv_mod(s.u, p), p) : mul_mod(t.w, inv_mod(s.w, p), p);
}

inline void check_pair(GPair s, std::uint32_t p, const char* what) {
  if (s.u >= p || s.w >= p)
    throw ArgumentError(std::string(what) + " has a coordinate outside [0, p)");
}

}  // namespace detail

/// Canonical generator of the cyclic subgroup <s>: first nonzero coordinate scaled to 1.
inline GPair line_of(GPair s, std::uint32_t p) {
  detail::check_pair(s, p, "line_of argument");
  if (s.is_zero()) throw ArgumentError("line_of: zero element spans no line");
  std::uint32_t lead = s.u != 0 ? s.u : s.w;
  return detail::scale(s, detail::inv_mod(lead, p), p);
}

/// Throws ArgumentError unless the instance is well formed.
inline void validate_instance(const ZeroSumInstance& inst) {
  checked_prime(inst.p);
  if (inst.S.size() != std::size_t{inst.p} + 1)
    throw ArgumentError("S must hold p + 1 = " + std::to_string(inst.p + 1) + " elements, got " +
                        std::to_string(inst.S.size()));
  for (const auto& s : inst.S) {
    detail::check_pair(s, inst.p, "element of S");
    if (s.is_zero()) throw ArgumentError("S contains the zero element");
  }
  std::vector<GPair> sorted = inst.S;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ArgumentError("S contains a repeated element");
  detail::check_pair(inst.g, inst.p, "target g");
  if (inst.g.is_zero()) throw ArgumentError("target g must be nonzero");
}

/// phiSum(t) = t + sum_k ((b_k - a_k t) mod p).
inline std::uint64_t phi_sum(std::uint32_t p, std::span<const std::int64_t> a,
                             std::span<const std::int64_t> b, std::uint32_t t) {
  std::uint64_t total = t;
  for (std::size_t k = 0; k < a.size(); ++k)
    total += detail::reduce(b[k] - a[k] * static_cast<std::int64_t>(t), p);
  return total;
}

/// Non-negative d_1..d_{n+1} with d_k + d_{n+1} a_k = b_k (mod p) and
/// sum d <= n(p-1)/2. Picks the smallest admissible d_{n+1}.
inline std::vector<std::uint32_t> prop42_solve(std::uint32_t p, std::span<const std::int64_t> a,
                                               std::span<const std::int64_t> b) {
  checked_prime(p);
  if (p == 2) throw ArgumentError("prop42_solve requires an odd prime");
  if (a.size() != b.size() || a.empty())
    throw ArgumentError("prop42_solve: a and b must be nonempty and of equal length");
  std::int64_t a_sum = 0;
  for (auto ak : a) {
    if (detail::reduce(ak, p) == 0) throw ArgumentError("prop42_solve: a_k divisible by p");
    a_sum += detail::reduce(ak, p);
  }
  if (detail::reduce(a_sum, p) == 1) throw ArgumentError("prop42_solve: sum a_k = 1 (mod p)");

  const std::size_t n = a.size();
  const std::uint64_t bound = n * (p - 1) / 2;
  for (std::uint32_t t = 0; t < p; ++t) {
    if (phi_sum(p, a, b, t) > bound) continue;
    std::vector<std::uint32_t> d(n + 1);
    for (std::size_t k = 0; k < n; ++k)
      d[k] = detail::reduce(b[k] - a[k] * static_cast<std::int64_t>(t), p);
    d[n] = t;
    return d;
  }
  throw InternalError("prop42_solve: no t with phiSum(t) <= n(p-1)/2");
}

namespace detail {

// s1, s2, s3 pairwise independent, s3 = a s1 + b s2 with a + b != 1. d over (s1, s2, s3).
inline std::vector<std::uint32_t> solve_triple(GPair g, GPair s1, GPair s2, GPair s3,
                                               std::uint32_t p) {
  auto [a, b] = coordinates(s3, s1, s2, p);
  auto [e1, e2] = coordinates(g, s1, s2, p);
  const std::int64_t as[] = {a, b};
  const std::int64_t bs[] = {e1, e2};
  return prop42_solve(p, as, bs);
}

// s2 on <s1>, s4 on <s3>, the two lines distinct. d over (s1, s2, s3, s4), each half
// of weight at most (p-1)/2.
inline std::vector<std::uint32_t> solve_two_lines(GPair g, GPair s1, GPair s2, GPair s3, GPair s4,
                                                  std::uint32_t p) {
  const std::uint32_t a = multiple_of(s2, s1, p);
  const std::uint32_t b = multiple_of(s4, s3, p);
  if (a <= 1 || b <= 1) throw InternalError("two-line case: multiplier is 0 or 1");
  auto [e1, e3] = coordinates(g, s1, s3, p);
  if (e1 == 0) return {0, 0, e3, 0};
  if (e3 == 0) return {e1, 0, 0, 0};
  const std::int64_t a1[] = {a}, b1[] = {e1};
  const std::int64_t a2[] = {b}, b2[] = {e3};
  auto first = prop42_solve(p, a1, b1);
  auto second = prop42_solve(p, a2, b2);
  if (first[0] + first[1] > (p - 1) / 2 || second[0] + second[1] > (p - 1) / 2)
    throw InternalError("two-line case: half bound violated");
  return {first[0], first[1], second[0], second[1]};
}

}  // namespace detail

/// true iff sum d <= p - 1 and sum d_k s_k = g.
inline bool verify(const ZeroSumInstance& inst, const ZeroSumSolution& sol) {
  if (sol.d.size() != inst.S.size())
    throw ArgumentError("verify: " + std::to_string(sol.d.size()) + " coefficients for " +
                        std::to_string(inst.S.size()) + " elements");
  std::uint64_t weight = 0;
  GPair acc;
  for (std::size_t k = 0; k < inst.S.size(); ++k) {
    weight += sol.d[k];
    acc = detail::add(acc, detail::scale(inst.S[k], sol.d[k] % inst.p, inst.p), inst.p);
  }
  return weight + 1 <= inst.p && acc == inst.g;
}

/// Constructive solver, split by how many lines S occupies.
///
/// Elements are taken in input order: within a line, the earliest two; lines are ranked by
/// the first index at which they occur.
inline ZeroSumSolution solve(const ZeroSumInstance& inst) {
  validate_instance(inst);
  const std::uint32_t p = inst.p;
  const std::size_t count = inst.S.size();
  ZeroSumSolution sol;
  sol.d.assign(count, 0);

  if (p == 2) {
    auto it = std::find(inst.S.begin(), inst.S.end(), inst.g);
    if (it == inst.S.end()) throw InternalError("p = 2: target missing from S");
    sol.d[it - inst.S.begin()] = 1;
    sol.branch = Branch::P2Direct;
    return sol;
  }

  // group indices of S by line, lines in order of first appearance
  std::vector<GPair> line_keys;
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t k = 0; k < count; ++k) {
    GPair line = line_of(inst.S[k], p);
    auto it = std::find(line_keys.begin(), line_keys.end(), line);
    if (it == line_keys.end()) {
      line_keys.push_back(line);
      members.push_back({k});
    } else {
      members[it - line_keys.begin()].push_back(k);
    }
  }

  auto assign = [&](std::initializer_list<std::size_t> idx, const std::vector<std::uint32_t>& d) {
    std::size_t pos = 0;
    for (std::size_t k : idx) sol.d[k] = d[pos++];
  };

  if (line_keys.size() < 2) throw InternalError("S occupies fewer than two lines");

  if (line_keys.size() == 2) {
    if (members[0].size() < 2 || members[1].size() < 2)
      throw InternalError("two occupied lines but one holds a single element");
    const std::size_t i1 = members[0][0], i2 = members[0][1];
    const std::size_t i3 = members[1][0], i4 = members[1][1];
    auto d = detail::solve_two_lines(inst.g, inst.S[i1], inst.S[i2], inst.S[i3], inst.S[i4], p);
    assign({i1, i2, i3, i4}, d);
    sol.branch = Branch::Case1TwoLines;
  } else if (line_keys.size() == count) {
    const std::size_t i1 = 0, i2 = 1;
    std::optional<std::size_t> i3;
    for (std::size_t k = 2; k < count && !i3; ++k) {
      auto [a, b] = detail::coordinates(inst.S[k], inst.S[i1], inst.S[i2], p);
      if (detail::add_mod(a, b, p) != 1) i3 = k;
    }
    if (!i3) throw InternalError("all lines distinct but every element has a + b = 1");
    auto d = detail::solve_triple(inst.g, inst.S[i1], inst.S[i2], inst.S[*i3], p);
    assign({i1, i2, *i3}, d);
    sol.branch = Branch::Case2aThreeLinesIndependent;
  } else {
    auto shared = std::find_if(members.begin(), members.end(),
                               [](const auto& m) { return m.size() >= 2; });
    if (shared == members.end()) throw InternalError("repeated-line case without a shared line");
    const std::size_t i3 = (*shared)[0], i4 = (*shared)[1];
    std::vector<std::size_t> others;
    for (const auto& m : members)
      if (&m != &*shared && others.size() < 2) others.push_back(m[0]);
    const std::size_t i1 = others[0], i2 = others[1];
    auto [a3, b3] = detail::coordinates(inst.S[i3], inst.S[i1], inst.S[i2], p);
    const std::size_t pick = detail::add_mod(a3, b3, p) != 1 ? i3 : i4;
    if (pick == i4) {
      auto [a4, b4] = detail::coordinates(inst.S[i4], inst.S[i1], inst.S[i2], p);
      if (detail::add_mod(a4, b4, p) == 1)
        throw InternalError("repeated line: both s3 and s4 have a + b = 1");
    }
    auto d = detail::solve_triple(inst.g, inst.S[i1], inst.S[i2], inst.S[pick], p);
    assign({i1, i2, pick}, d);
    sol.branch = Branch::Case2bRepeatedLine;
  }

  if (!verify(inst, sol))
    throw InternalError(std::string("solver branch ") + to_string(sol.branch) +
                        " produced an invalid representation");
  return sol;
}

/// Minimal-weight representation by breadth-first search over G, or nullopt if none
/// has weight <= p - 1.
inline std::optional<ZeroSumSolution> oracle_solve(const ZeroSumInstance& inst) {
  validate_instance(inst);
  const std::uint32_t p = inst.p;
  const std::size_t cells = std::size_t{p} * p;
  constexpr std::uint32_t kUnseen = ~0u;
  auto index = [p](GPair x) { return std::size_t{x.u} * p + x.w; };

  std::vector<std::uint32_t> dist(cells, kUnseen);
  std::vector<std::uint32_t> via(cells, 0);  // generator used to arrive
  std::vector<GPair> frontier{GPair{}};
  dist[0] = 0;
  for (std::uint32_t w = 0; w + 1 < p && dist[index(inst.g)] == kUnseen; ++w) {
    std::vector<GPair> next;
    for (GPair x : frontier)
      for (std::uint32_t k = 0; k < inst.S.size(); ++k) {
        GPair y = detail::add(x, inst.S[k], p);
        if (dist[index(y)] != kUnseen) continue;
        dist[index(y)] = w + 1;
        via[index(y)] = k;
        next.push_back(y);
      }
    frontier = std::move(next);
  }
  if (dist[index(inst.g)] == kUnseen) return std::nullopt;

  ZeroSumSolution sol;
  sol.d.assign(inst.S.size(), 0);
  sol.branch = Branch::Oracle;
  for (GPair x = inst.g; !x.is_zero();) {
    std::uint32_t k = via[index(x)];
    ++sol.d[k];
    x = detail::add(x, detail::scale(inst.S[k], p - 1, p), p);
  }
  return sol;
}

inline constexpr std::uint32_t kMaxFullEnumerationPrime = 5;

struct ExhaustOptions {
  /// 0 selects full enumeration; otherwise that many random instances.
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0 = hardware concurrency
  bool check_oracle = false;
};

struct ExhaustReport {
  std::uint32_t p = 0;
  bool sampled = false;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::map<std::string, std::uint64_t> branch_histogram;
  std::uint64_t max_weight = 0;
  std::uint64_t elapsed_ms = 0;
  bool oracle_checked = false;
};

namespace detail {

struct ExhaustTally {
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::map<Branch, std::uint64_t> branches;
  std::uint64_t max_weight = 0;

  void run(const ZeroSumInstance& inst, bool check_oracle) {
    ++instances;
    try {
      ZeroSumSolution sol = solve(inst);
      ++branches[sol.branch];
      max_weight = std::max(max_weight, sol.weight());
      bool ok = verify(inst, sol);
      if (ok && check_oracle) {
        auto oracle = oracle_solve(inst);
        ok = oracle && verify(inst, *oracle) && oracle->weight() <= sol.weight();
      }
      failures += !ok;
    } catch (const InternalError&) {
      ++failures;
    }
  }

  void merge(const ExhaustTally& o) {
    instances += o.instances;
    failures += o.failures;
    for (auto [b, n] : o.branches) branches[b] += n;
    max_weight = std::max(max_weight, o.max_weight);
  }
};

inline std::vector<GPair> nonzero_elements(std::uint32_t p) {
  std::vector<GPair> out;
  for (std::uint32_t u = 0; u < p; ++u)
    for (std::uint32_t w = 0; w < p; ++w)
      if (u || w) out.push_back({u, w});
  return out;
}

}  // namespace detail

/// Runs solve + verify on every instance for p (all (p+1)-subsets of nonzero elements
/// in lexicographic order, every nonzero target), or on random instances in sampled mode.
inline ExhaustReport exhaust(std::uint32_t p, const ExhaustOptions& opt = {}) {
  checked_prime(p);
  if (opt.samples == 0 && p > kMaxFullEnumerationPrime)
    throw ArgumentError("full enumeration is limited to p <= " +
                        std::to_string(kMaxFullEnumerationPrime) + "; request samples instead");
  const auto start = std::chrono::steady_clock::now();
  const auto elements = detail::nonzero_elements(p);
  const std::size_t k = std::size_t{p} + 1;
  detail::ExhaustTally total;

  if (opt.samples == 0) {
    // all k-subsets, as index vectors in lexicographic order
    std::vector<std::vector<std::uint32_t>> subsets;
    std::vector<std::uint32_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0u);
    const std::uint32_t n = static_cast<std::uint32_t>(elements.size());
    while (true) {
      subsets.push_back(idx);
      std::size_t pos = k;
      while (pos-- > 0 && idx[pos] == n - k + pos) {}
      if (pos == static_cast<std::size_t>(-1)) break;
      ++idx[pos];
      for (std::size_t q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }

    unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    std::vector<detail::ExhaustTally> tallies(threads);
    std::atomic<std::size_t> cursor{0};
    constexpr std::size_t kChunk = 256;
    auto worker = [&](detail::ExhaustTally& tally) {
      ZeroSumInstance inst{p, std::vector<GPair>(k), {}};
      for (std::size_t begin; (begin = cursor.fetch_add(kChunk)) < subsets.size();) {
        const std::size_t end = std::min(subsets.size(), begin + kChunk);
        for (std::size_t s = begin; s < end; ++s) {
          for (std::size_t q = 0; q < k; ++q) inst.S[q] = elements[subsets[s][q]];
          for (GPair g : elements) {
            inst.g = g;
            tally.run(inst, opt.check_oracle);
          }
        }
      }
    };
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, std::ref(tallies[t]));
      worker(tallies[0]);
    }
    for (const auto& t : tallies) total.merge(t);
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::size_t> pick_g(0, elements.size() - 1);
    ZeroSumInstance inst{p, {}, {}};
    for (std::uint64_t s = 0; s < opt.samples; ++s) {
      inst.S.clear();
      std::sample(elements.begin(), elements.end(), std::back_inserter(inst.S), k, rng);
      std::shuffle(inst.S.begin(), inst.S.end(), rng);
      inst.g = elements[pick_g(rng)];
      total.run(inst, opt.check_oracle);
    }
  }

  ExhaustReport report;
  report.p = p;
  report.sampled = opt.samples != 0;
  report.instances = total.instances;
  report.failures = total.failures;
  for (auto [b, n] : total.branches) report.branch_histogram[to_string(b)] = n;
  report.max_weight = total.max_weight;
  report.oracle_checked = opt.check_oracle;
  report.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
          .count());
  return report;
}

}  // namespace psym

#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "mobius/arith.hpp"
#include "mobius/bounds.hpp"
#include "mobius/errors.hpp"
#include "mobius/pointed.hpp"

namespace mobius {

/// One-indexed permutation word tau(1),...,tau(n).  Text form "3 1 2".
struct Permutation {
  std::vector<int> word;

  int n() const { return static_cast<int>(word.size()); }

  void validate() const {
    std::vector<char> seen(word.size() + 1, 0);
    for (int v : word) {
      if (v < 1 || v > n() || seen[v])
        fail(errc::invalid_input, "not a permutation: " + str());
      seen[v] = 1;
    }
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(word[i]);
    }
    return s;
  }
};

/// {i : tau(i) > tau(i+1)}, ascending.
inline std::vector<int> descent_set(const Permutation& tau) {
  std::vector<int> d;
  for (int i = 1; i < tau.n(); ++i)
    if (tau.word[i - 1] > tau.word[i]) d.push_back(i);
  return d;
}

/// Consecutive gaps of the augmented descent set; parts sum to n.
inline std::vector<int> descent_composition(const Permutation& tau) {
  std::vector<int> comp;
  int prev = 0;
  for (int s : descent_set(tau)) {
    comp.push_back(s - prev);
    prev = s;
  }
  comp.push_back(tau.n() - prev);
  return comp;
}

namespace detail {

/// Counts of permutations of S_n by descent-set bitmask (bit i-1 set for a
/// descent at position i).  Cached per n; safe under concurrent calls.
inline const std::unordered_map<std::uint32_t, std::int64_t>& descent_mask_census(int n) {
  if (n < 0 || n > 20) fail(errc::out_of_range, "descent census n out of range");
  static std::mutex lock;
  static std::map<int, std::unordered_map<std::uint32_t, std::int64_t>> cache;
  std::lock_guard<std::mutex> g(lock);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::unordered_map<std::uint32_t, std::int64_t> counts;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    std::uint32_t mask = 0;
    for (int i = 1; i < n; ++i)
      if (w[i - 1] > w[i]) mask |= std::uint32_t{1} << (i - 1);
    ++counts[mask];
  } while (std::next_permutation(w.begin(), w.end()));
  if (n == 0) counts[0] = 1;  // the empty permutation
  return cache.emplace(n, std::move(counts)).first->second;
}

inline std::uint32_t partial_sum_mask(const PointedComposition& c) {
  std::uint32_t mask = 0;
  for (int s : c.partial_sums()) mask |= std::uint32_t{1} << (s - 1);
  return mask;
}

}  // namespace detail

/// Multinomial n!/(c_1!...c_k!) of a pointed composition: the number of
/// permutations with descent set contained in the partial sums of c.
inline std::int64_t multinomial(int n, const PointedComposition& c) {
  std::vector<std::int64_t> parts(c.interior.begin(), c.interior.end());
  parts.push_back(c.pointed);
  return multinomial(n, parts);
}

/// beta by direct enumeration of S_n (descent set must equal the partial
/// sums of c); the definitional route.
inline std::int64_t beta_by_enumeration(const PointedComposition& c,
                                        int enum_bound = default_bounds().enumeration) {
  c.validate();
  const int n = c.n();
  if (n > enum_bound) fail(errc::bound_exceeded, "enumeration bound: n = " + std::to_string(n));
  if (c.total_parts() >= 2 && c.pointed == 0) return 0;  // descent at n is impossible
  const auto& census = detail::descent_mask_census(n);
  auto it = census.find(detail::partial_sum_mask(c));
  return it == census.end() ? 0 : it->second;
}

/// beta by inclusion-exclusion over the coarsenings of c:
/// beta(c) = Sum_{c <= d} (-1)^{rho(c,d)} * (n choose d).
/// No special cases: when c ends in 0 the signed sum telescopes to 0.
inline std::int64_t beta_by_inclusion_exclusion(const PointedComposition& c) {
  c.validate();
  const int n = c.n();
  const int cuts = static_cast<int>(c.interior.size());
  std::int64_t total = 0;
  for (std::uint32_t keep = 0; keep < (std::uint32_t{1} << cuts); ++keep) {
    // Coarsening d: merge away every cut not in `keep`.
    std::vector<std::int64_t> parts;
    std::int64_t run = 0;
    for (int i = 0; i < cuts; ++i) {
      run = checked_add(run, c.interior[i]);
      if (keep & (std::uint32_t{1} << i)) {
        parts.push_back(run);
        run = 0;
      }
    }
    parts.push_back(checked_add(run, c.pointed));
    const int dropped = cuts - __builtin_popcount(keep);  // rho(c, d)
    total = checked_add(total, checked_mul(neg_one_pow(dropped), multinomial(n, parts)));
  }
  return total;
}

/// beta via the fixed-last-point view: permutations tau in S_{n+1} with
/// tau(n+1) = n+1 and descent composition (c_1,...,c_{k-1},c_k+1).
inline std::int64_t beta_fixed_last(const PointedComposition& c,
                                    int enum_bound = default_bounds().enumeration) {
  c.validate();
  const int n = c.n();
  if (n > enum_bound) fail(errc::bound_exceeded, "enumeration bound: n = " + std::to_string(n));
  std::vector<int> target(c.interior);
  target.push_back(c.pointed + 1);
  std::int64_t count = 0;
  std::vector<int> w(n + 1);
  std::iota(w.begin(), w.end(), 1);  // w[n] = n+1 stays fixed
  do {
    Permutation tau{w};
    if (descent_composition(tau) == target) ++count;
  } while (std::next_permutation(w.begin(), w.end() - 1));
  return count;
}

/// The beta statistic: enumeration below the bound, inclusion-exclusion
/// above it (both agree everywhere).
inline std::int64_t beta(const PointedComposition& c,
                         int enum_bound = default_bounds().enumeration) {
  c.validate();
  if (c.n() <= enum_bound) return beta_by_enumeration(c, enum_bound);
  return beta_by_inclusion_exclusion(c);
}

/// Counts of all n! permutations grouped by (non-pointed) descent
/// composition; Sum of counts = n!.
inline std::map<std::vector<int>, std::int64_t> enumerate_by_descent_composition(
    int n, int enum_bound = default_bounds().enumeration) {
  if (n < 0 || n > enum_bound)
    fail(errc::bound_exceeded, "enumeration bound: n = " + std::to_string(n));
  std::map<std::vector<int>, std::int64_t> out;
  if (n == 0) {
    out.emplace(std::vector<int>{}, 1);  // the empty permutation
    return out;
  }
  for (const auto& [mask, count] : detail::descent_mask_census(n)) {
    std::vector<int> comp;
    int prev = 0;
    for (int i = 1; i < n; ++i)
      if (mask & (std::uint32_t{1} << (i - 1))) {
        comp.push_back(i - prev);
        prev = i;
      }
    comp.push_back(n - prev);
    out.emplace(std::move(comp), count);
  }
  return out;
}

}  // namespace mobius

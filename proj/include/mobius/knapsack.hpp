#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mobius/arith.hpp"
#include "mobius/bounds.hpp"
#include "mobius/enumerate.hpp"
#include "mobius/errors.hpp"
#include "mobius/pointed.hpp"

namespace mobius {

/// Recognition record for one multiset of positive integers: a knapsack
/// partition is one whose sub-multisets all have distinct sums, i.e. the
/// number of distinct sums meets its combinatorial capacity
/// prod_i (mult_i + 1).
struct KnapsackCertificate {
  std::vector<int> lambda;  // ascending
  std::int64_t distinct_sums = 0;
  std::int64_t capacity = 0;
  bool knapsack = false;
};

namespace detail {

/// Multiplicities of the distinct values, ascending by value.
inline std::vector<std::pair<int, int>> value_counts(
    const std::vector<int>& lambda) {
  std::map<int, int> counts;
  for (int v : lambda) {
    if (v <= 0) fail(errc::malformed_partition, "parts must be positive");
    ++counts[v];
  }
  return {counts.begin(), counts.end()};
}

}  // namespace detail

inline KnapsackCertificate is_knapsack(std::vector<int> lambda) {
  std::sort(lambda.begin(), lambda.end());
  auto groups = detail::value_counts(lambda);

  KnapsackCertificate cert;
  cert.lambda = std::move(lambda);
  cert.capacity = 1;
  std::int64_t total = 0;
  for (auto [value, mult] : groups) {
    cert.capacity = checked_mul(cert.capacity, mult + 1);
    total += std::int64_t{value} * mult;
  }

  std::vector<char> seen(static_cast<std::size_t>(total) + 1, 0);
  seen[0] = 1;
  std::int64_t distinct = 1;
  std::int64_t reach = 0;  // sums occupy [0, reach] sparsely
  for (auto [value, mult] : groups) {
    for (std::int64_t s = reach; s >= 0; --s) {
      if (!seen[s]) continue;
      for (int c = 1; c <= mult; ++c) {
        std::int64_t t = s + std::int64_t{value} * c;
        if (!seen[t]) {
          seen[t] = 1;
          ++distinct;
        }
      }
    }
    reach += std::int64_t{value} * mult;
  }
  cert.distinct_sums = distinct;
  cert.knapsack = distinct == cert.capacity;
  return cert;
}

/// Multiset e_1^{m_1} ... e_q^{m_q} where each value dominates the full
/// weighted sum of the earlier ones: sum_{i<j} m_i e_i < e_j.  Such multisets
/// are always knapsack partitions (a sub-multiset is recovered greedily from
/// its sum, largest value first).
inline std::vector<int> family_weighted(const std::vector<int>& values,
                                        const std::vector<int>& mults) {
  if (values.size() != mults.size())
    fail(errc::size_mismatch, "values and multiplicities differ in length");
  if (values.empty()) fail(errc::invalid_input, "need at least one value");
  std::int64_t weighted = 0;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] <= 0 || mults[j] <= 0)
      fail(errc::invalid_input, "values and multiplicities must be positive");
    if (j > 0 && weighted >= values[j])
      fail(errc::condition_violated,
           "value " + std::to_string(values[j]) +
               " does not exceed the weighted sum " + std::to_string(weighted) +
               " of the earlier values");
    weighted = checked_add(weighted, checked_mul(values[j], mults[j]));
  }
  std::vector<int> lambda;
  for (std::size_t j = 0; j < values.size(); ++j)
    lambda.insert(lambda.end(), mults[j], values[j]);
  std::sort(lambda.begin(), lambda.end());
  if (!is_knapsack(lambda).knapsack)
    fail(errc::construction_mismatch,
         "weighted family produced a non-knapsack partition");
  return lambda;
}

/// Image of a knapsack partition under x -> j*x mod q for a prime q larger
/// than the partition's sum; multiplication by a unit preserves distinctness
/// of all sub-multiset sums modulo q, and sums stay below q, so the image is
/// again a knapsack partition.
inline std::vector<int> family_modular(const std::vector<int>& lambda, int q,
                                       int j) {
  auto cert = is_knapsack(lambda);
  if (!cert.knapsack)
    fail(errc::not_knapsack, "input partition is not a knapsack partition");
  if (!is_prime(q)) fail(errc::not_prime, std::to_string(q) + " is not prime");
  std::int64_t total = 0;
  for (int v : cert.lambda) total += v;
  if (q <= total)
    fail(errc::sum_too_large, "modulus must exceed the partition sum " +
                                  std::to_string(total));
  if (j < 1 || j >= q) fail(errc::out_of_range, "need 1 <= j < q");
  std::vector<int> image;
  image.reserve(cert.lambda.size());
  for (int v : cert.lambda)
    image.push_back(static_cast<int>(std::int64_t{j} * v % q));
  std::sort(image.begin(), image.end());
  if (!is_knapsack(image).knapsack)
    fail(errc::construction_mismatch,
         "modular family produced a non-knapsack partition");
  return image;
}

/// The compositions attached to a knapsack partition with pointed part m:
/// group the parts of lambda so that every group has pairwise-distinct
/// members, order the groups, and record the group sums followed by the
/// pointed entry m.
struct VSet {
  std::vector<int> lambda;  // ascending
  int m = 0;
  std::vector<PointedComposition> members;  // sorted
};

inline VSet build_V(std::vector<int> lambda, int m) {
  if (m < 0) fail(errc::out_of_range, "pointed part must be nonnegative");
  auto cert = is_knapsack(lambda);
  if (!cert.knapsack)
    fail(errc::not_knapsack, "compositions are attached only to knapsack partitions");
  lambda = cert.lambda;

  VSet out;
  out.lambda = lambda;
  out.m = m;
  const int p = static_cast<int>(lambda.size());

  std::set<PointedComposition> acc;
  for_each_set_partition(p, [&](const std::vector<int>& rgs) {
    auto blocks = rgs_blocks(rgs);  // 1-based part indices
    std::vector<int> sums;
    sums.reserve(blocks.size());
    for (const auto& b : blocks) {
      int sum = 0;
      for (std::size_t t = 0; t + 1 < b.size(); ++t)
        if (lambda[b[t] - 1] == lambda[b[t + 1] - 1]) return;  // repeat inside
      for (int idx : b) sum += lambda[idx - 1];
      sums.push_back(sum);
    }
    std::sort(sums.begin(), sums.end());
    do {
      PointedComposition c;
      c.interior = sums;
      c.pointed = m;
      acc.insert(std::move(c));
    } while (std::next_permutation(sums.begin(), sums.end()));
  });
  out.members.assign(acc.begin(), acc.end());
  return out;
}

/// Recognition sweep over every integer partition of n, reverse
/// lexicographic; only the knapsack partitions are returned.
inline std::vector<KnapsackCertificate> census(
    int n, int bound = default_bounds().census) {
  if (n < 0) fail(errc::out_of_range, "n must be nonnegative");
  if (n > bound)
    fail(errc::bound_exceeded,
         "n=" + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  std::vector<KnapsackCertificate> out;
  for (const auto& parts : integer_partitions(n)) {
    auto cert = is_knapsack(parts);
    if (cert.knapsack) out.push_back(std::move(cert));
  }
  return out;
}

}  // namespace mobius

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mobius/arith.hpp"
#include "mobius/bounds.hpp"
#include "mobius/enumerate.hpp"
#include "mobius/errors.hpp"
#include "mobius/knapsack.hpp"
#include "mobius/pointed.hpp"
#include "mobius/pointed_posets.hpp"
#include "mobius/poset.hpp"

namespace mobius {

/// Set partition of {1,...,ground} whose blocks are linearly ordered.
/// Elements inside a block are kept ascending; block order is significant.
struct OrderedSetPartition {
  std::vector<std::vector<int>> blocks;
  int ground = 0;

  std::size_t block_count() const { return blocks.size(); }

  void validate() const {
    std::vector<char> seen(static_cast<std::size_t>(ground) + 1, 0);
    int count = 0;
    for (const auto& b : blocks) {
      if (b.empty()) fail(errc::invalid_input, "empty block");
      if (!std::is_sorted(b.begin(), b.end()))
        fail(errc::invalid_input, "block elements must be ascending");
      for (int e : b) {
        if (e < 1 || e > ground)
          fail(errc::invalid_input, "element out of ground set");
        if (seen[e]) fail(errc::invalid_input, "repeated element");
        seen[e] = 1;
        ++count;
      }
    }
    if (count != ground)
      fail(errc::invalid_input, "blocks do not cover the ground set");
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (i) s += '/';
      for (std::size_t j = 0; j < blocks[i].size(); ++j) {
        if (j) s += '.';
        s += std::to_string(blocks[i][j]);
      }
    }
    return s;
  }

  static OrderedSetPartition parse(const std::string& text) {
    if (detail::trim(text).empty())
      fail(errc::invalid_input, "empty ordered set partition literal");
    OrderedSetPartition w;
    int count = 0;
    for (const auto& btok : detail::split(text, '/')) {
      std::vector<int> block;
      for (const auto& tok : detail::split(btok, '.')) {
        block.push_back(detail::parse_int(tok, errc::invalid_input));
        ++count;
      }
      std::sort(block.begin(), block.end());
      w.blocks.push_back(std::move(block));
    }
    w.ground = count;
    w.validate();
    return w;
  }

  bool operator==(const OrderedSetPartition& o) const {
    return ground == o.ground && blocks == o.blocks;
  }
};

inline constexpr const char* kBottomLabel = "0hat";

/// Ordered set partitions of {1,...,p} under merging of adjacent blocks,
/// with an artificial bottom element below the p! finest (all-singleton)
/// orderings.  Graded: the bottom has rank 0 and an element with j blocks
/// has rank p - j + 1; every interval is Eulerian.
inline FinitePoset build_Q(int p, int bound = default_bounds().q) {
  if (p < 1) fail(errc::out_of_range, "p must be positive");
  if (p > bound)
    fail(errc::bound_exceeded,
         "p=" + std::to_string(p) + " exceeds bound " + std::to_string(bound));

  std::vector<std::string> labels{kBottomLabel};
  std::vector<std::pair<std::string, std::string>> covers;
  for_each_ordered_set_partition(p, [&](const std::vector<std::vector<int>>& blocks) {
    OrderedSetPartition w{blocks, p};
    const std::string from = w.str();
    labels.push_back(from);
    const std::size_t k = blocks.size();
    if (k == static_cast<std::size_t>(p)) covers.emplace_back(kBottomLabel, from);
    for (std::size_t i = 0; i + 1 < k; ++i) {
      OrderedSetPartition up;
      up.ground = p;
      for (std::size_t t = 0; t < k; ++t) {
        if (t == i + 1) continue;
        up.blocks.push_back(blocks[t]);
        if (t == i) {
          auto& b = up.blocks.back();
          b.insert(b.end(), blocks[i + 1].begin(), blocks[i + 1].end());
          std::sort(b.begin(), b.end());
        }
      }
      covers.emplace_back(from, up.str());
    }
  });

  FinitePoset poset = FinitePoset::from_cover_relations(labels, covers);
  poset.set_annotation("family", "Q");
  poset.set_annotation("p", std::to_string(p));
  return poset;
}

/// Checks that mu(x, y) == (-1)^(rank difference) on every interval.
inline bool verify_eulerian(int p, int bound = default_bounds().eulerian) {
  if (p > bound)
    fail(errc::bound_exceeded,
         "p=" + std::to_string(p) + " exceeds bound " + std::to_string(bound));
  FinitePoset q = build_Q(p, bound);
  for (FinitePoset::Index x = 0; x < q.size(); ++x) {
    const auto& row = q.mobius_row(x);
    for (FinitePoset::Index y = 0; y < q.size(); ++y) {
      if (!q.leq(x, y)) continue;
      if (row[y] != neg_one_pow(q.rank(y) - q.rank(x))) return false;
    }
  }
  return true;
}

/// True when every block of coarse is the union of one or more consecutive
/// blocks of fine (the order relation of build_Q, bottom element aside).
inline bool coarsens(const OrderedSetPartition& coarse,
                     const OrderedSetPartition& fine) {
  if (coarse.ground != fine.ground)
    fail(errc::size_mismatch, "ordered partitions of different ground sets");
  std::size_t t = 0;
  for (const auto& cb : coarse.blocks) {
    std::vector<int> merged;
    while (merged.size() < cb.size()) {
      if (t == fine.blocks.size()) return false;
      merged.insert(merged.end(), fine.blocks[t].begin(), fine.blocks[t].end());
      ++t;
    }
    std::sort(merged.begin(), merged.end());
    if (merged != cb) return false;
  }
  return t == fine.blocks.size();
}

/// Some block holds two positions carrying equal lambda values.
inline bool is_boundary(const OrderedSetPartition& w,
                        const std::vector<int>& lambda) {
  if (static_cast<int>(lambda.size()) != w.ground)
    fail(errc::size_mismatch, "lambda length differs from the ground set");
  for (const auto& b : w.blocks)
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        if (lambda[b[i] - 1] == lambda[b[j] - 1]) return true;
  return false;
}

/// Block sums of lambda along w, followed by the pointed entry m.
inline PointedComposition iso_f(const OrderedSetPartition& w,
                                const std::vector<int>& lambda, int m) {
  if (static_cast<int>(lambda.size()) != w.ground)
    fail(errc::size_mismatch, "lambda length differs from the ground set");
  PointedComposition c;
  for (const auto& b : w.blocks) {
    int sum = 0;
    for (int e : b) sum += lambda[e - 1];
    c.interior.push_back(sum);
  }
  c.pointed = m;
  c.validate();
  return c;
}

/// Ordered set partitions of the positions of lambda in which equal values
/// appear in ascending-position order (across and within blocks).  For a
/// knapsack partition these are exactly the orderings whose block sums are
/// pairwise recoverable, so w -> iso_f(w, lambda, m) is injective on them.
inline std::vector<OrderedSetPartition> r_members(
    const std::vector<int>& lambda) {
  if (!std::is_sorted(lambda.begin(), lambda.end()))
    fail(errc::invalid_input, "lambda must be ascending");
  const int p = static_cast<int>(lambda.size());
  std::vector<OrderedSetPartition> out;
  for_each_ordered_set_partition(p, [&](const std::vector<std::vector<int>>& blocks) {
    std::vector<int> block_of(p + 1, 0);
    for (std::size_t t = 0; t < blocks.size(); ++t)
      for (int e : blocks[t]) block_of[e] = static_cast<int>(t);
    for (int i = 1; i < p; ++i)
      if (lambda[i - 1] == lambda[i] && block_of[i] > block_of[i + 1]) return;
    out.push_back({blocks, p});
  });
  return out;
}

/// Filter of build_Q(p) holding the r_members orderings.
inline PosetFilter build_R(const FinitePoset& q,
                           const std::vector<int>& lambda) {
  detail::require_annotation(q, "family", "Q");
  const int p = detail::annotated_int(q, "p");
  if (static_cast<int>(lambda.size()) != p)
    fail(errc::size_mismatch, "lambda length differs from the ground set");
  if (!std::is_sorted(lambda.begin(), lambda.end()))
    fail(errc::invalid_input, "lambda must be ascending");
  PosetFilter f;
  f.parent = &q;
  for (FinitePoset::Index x = 0; x < q.size(); ++x) {
    if (q.label(x) == kBottomLabel) continue;
    OrderedSetPartition w = OrderedSetPartition::parse(q.label(x));
    std::vector<int> block_of(p + 1, 0);
    for (std::size_t t = 0; t < w.blocks.size(); ++t)
      for (int e : w.blocks[t]) block_of[e] = static_cast<int>(t);
    bool ok = true;
    for (int i = 1; i < p && ok; ++i)
      if (lambda[i - 1] == lambda[i] && block_of[i] > block_of[i + 1]) ok = false;
    if (ok) f.members.push_back(x);
  }
  return f;
}

namespace detail {

/// Unique sub-multiset of the remaining parts summing to target, as counts
/// per group of value_counts order; nullopt when none exists.  Uniqueness is
/// the knapsack property of the full multiset, which survives taking
/// sub-multisets.
inline bool pick_decomposition(const std::vector<int>& values,
                               std::vector<int>& remaining, int target,
                               std::vector<int>& use, std::size_t g = 0) {
  if (target == 0) {
    use.resize(values.size(), 0);
    std::fill(use.begin() + g, use.end(), 0);
    return true;
  }
  if (g == values.size()) return false;
  int cap = std::min(remaining[g], target / values[g]);
  for (int c = cap; c >= 0; --c) {
    use.resize(values.size(), 0);
    use[g] = c;
    if (pick_decomposition(values, remaining, target - c * values[g], use,
                           g + 1))
      return true;
  }
  return false;
}

}  // namespace detail

/// Mobius value mu(0hat, c) inside C_n(F) with the bottom adjoined, where F
/// is generated by the single pointed partition (lambda, m) and lambda is a
/// knapsack partition.  Evaluated combinatorially: decompose each interior
/// entry of c by its unique expression in the unused parts of lambda, then
///   - entries that cannot be expressed, or a pointed entry below m, mean c
///     lies outside the ideal (an error);
///   - pointed entry above m: value 0 (the atoms force the pointed part m);
///   - otherwise 0 when some entry repeats a part (boundary ordering), and
///     (-1)^(p - k) when all entries are repeat-free, with k the number of
///     entries of c including the pointed one.
inline std::int64_t mu_via_gamma(const std::vector<int>& lambda, int m,
                                 const PointedComposition& c) {
  if (m < 0) fail(errc::out_of_range, "pointed part must be nonnegative");
  auto cert = is_knapsack(lambda);
  if (!cert.knapsack)
    fail(errc::not_knapsack, "lambda is not a knapsack partition");
  c.validate();
  const int p = static_cast<int>(cert.lambda.size());
  std::int64_t n = m;
  for (int v : cert.lambda) n += v;
  if (c.n() != n)
    fail(errc::not_in_ideal, "composition is of " + std::to_string(c.n()) +
                                 ", not " + std::to_string(n));
  if (c.pointed < m)
    fail(errc::not_in_ideal, "pointed entry falls below " + std::to_string(m));

  auto groups = detail::value_counts(cert.lambda);
  std::vector<int> values, remaining;
  for (auto [v, cnt] : groups) {
    values.push_back(v);
    remaining.push_back(cnt);
  }

  bool on_boundary = false;
  for (int entry : c.interior) {
    std::vector<int> use;
    if (!detail::pick_decomposition(values, remaining, entry, use))
      fail(errc::not_in_ideal, "entry " + std::to_string(entry) +
                                   " is not a sum of unused parts");
    for (std::size_t g = 0; g < values.size(); ++g) {
      remaining[g] -= use[g];
      if (use[g] > 1) on_boundary = true;
    }
  }
  if (c.pointed > m) return 0;
  return on_boundary ? 0 : neg_one_pow(p - c.total_parts());
}

}  // namespace mobius

#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mobius/bounds.hpp"
#include "mobius/enumerate.hpp"
#include "mobius/errors.hpp"
#include "mobius/pointed.hpp"
#include "mobius/poset.hpp"

namespace mobius {

namespace detail {

inline void require_annotation(const FinitePoset& poset, const std::string& key,
                               const std::string& want) {
  auto got = poset.annotation(key);
  if (!got || *got != want)
    fail(errc::invalid_input,
         "poset is not annotated with " + key + "=" + want);
}

inline int annotated_int(const FinitePoset& poset, const std::string& key) {
  auto got = poset.annotation(key);
  if (!got) fail(errc::invalid_input, "poset lacks annotation " + key);
  return parse_int(*got, errc::invalid_input);
}

}  // namespace detail

/// Pointed integer partitions of n ordered by merging: covers merge two
/// ordinary parts or absorb an ordinary part into the pointed part.  Graded
/// by number of parts (pointed part included); bottom (1^n, 0), top (n).
inline FinitePoset build_I(int n, int bound = default_bounds().i) {
  if (n < 0) fail(errc::out_of_range, "n must be nonnegative");
  if (n > bound)
    fail(errc::bound_exceeded,
         "n=" + std::to_string(n) + " exceeds bound " + std::to_string(bound));

  std::vector<std::string> labels;
  std::vector<PointedPartition> elems;
  for (int m = 0; m <= n; ++m) {
    for (const auto& parts : integer_partitions(n - m)) {
      PointedPartition pp;
      pp.parts = parts;
      std::sort(pp.parts.begin(), pp.parts.end());
      pp.pointed = m;
      labels.push_back(pp.str());
      elems.push_back(std::move(pp));
    }
  }

  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& pp : elems) {
    std::set<std::string> ups;
    const auto& a = pp.parts;
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        PointedPartition up;
        up.pointed = pp.pointed;
        up.parts.reserve(a.size() - 1);
        for (std::size_t t = 0; t < a.size(); ++t)
          if (t != i && t != j) up.parts.push_back(a[t]);
        up.parts.push_back(a[i] + a[j]);
        std::sort(up.parts.begin(), up.parts.end());
        ups.insert(up.str());
      }
      PointedPartition up;
      up.pointed = pp.pointed + a[i];
      for (std::size_t t = 0; t < a.size(); ++t)
        if (t != i) up.parts.push_back(a[t]);
      ups.insert(up.str());
    }
    for (const auto& to : ups) covers.emplace_back(pp.str(), to);
  }

  FinitePoset poset = FinitePoset::from_cover_relations(labels, covers);
  poset.set_annotation("family", "I");
  poset.set_annotation("n", std::to_string(n));
  return poset;
}

/// Pointed set partitions of {1,...,n}: a partition of the ground set into
/// ordinary blocks plus one distinguished (possibly empty) zero block.
/// Equivalent to ordinary set partitions of {1,...,n+1} with the block of
/// n+1 playing the zero role, which is how the elements are enumerated.
/// Covers merge two ordinary blocks or absorb an ordinary block into the
/// zero block.
inline FinitePoset build_Pi(int n, int bound = default_bounds().pi) {
  if (n < 0) fail(errc::out_of_range, "n must be nonnegative");
  if (n > bound)
    fail(errc::bound_exceeded,
         "n=" + std::to_string(n) + " exceeds bound " + std::to_string(bound));

  std::vector<std::string> labels;
  std::vector<PointedSetPartition> elems;
  for_each_set_partition(n + 1, [&](const std::vector<int>& rgs) {
    auto blocks = rgs_blocks(rgs);
    PointedSetPartition p;
    p.ground = n;
    for (auto& b : blocks) {
      if (b.back() == n + 1) {
        b.pop_back();
        p.zero = std::move(b);
      } else {
        p.blocks.push_back(std::move(b));
      }
    }
    p.canonicalize();
    labels.push_back(p.str());
    elems.push_back(std::move(p));
  });

  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& p : elems) {
    const auto& bl = p.blocks;
    for (std::size_t i = 0; i < bl.size(); ++i) {
      for (std::size_t j = i + 1; j < bl.size(); ++j) {
        PointedSetPartition up;
        up.ground = p.ground;
        up.zero = p.zero;
        for (std::size_t t = 0; t < bl.size(); ++t)
          if (t != i && t != j) up.blocks.push_back(bl[t]);
        std::vector<int> merged(bl[i]);
        merged.insert(merged.end(), bl[j].begin(), bl[j].end());
        up.blocks.push_back(std::move(merged));
        up.canonicalize();
        covers.emplace_back(p.str(), up.str());
      }
      PointedSetPartition up;
      up.ground = p.ground;
      up.zero = p.zero;
      up.zero.insert(up.zero.end(), bl[i].begin(), bl[i].end());
      for (std::size_t t = 0; t < bl.size(); ++t)
        if (t != i) up.blocks.push_back(bl[t]);
      up.canonicalize();
      covers.emplace_back(p.str(), up.str());
    }
  }

  FinitePoset poset = FinitePoset::from_cover_relations(labels, covers);
  poset.set_annotation("family", "Pi");
  poset.set_annotation("n", std::to_string(n));
  return poset;
}

/// Pointed compositions of n: interior entries are positive, the last
/// (pointed) entry may be zero.  Encoded by the set of proper partial sums,
/// so the poset is the boolean lattice of subsets of {1,...,n} under reverse
/// inclusion; covers merge two adjacent entries (drop one partial sum).
inline FinitePoset build_C(int n, int bound = default_bounds().c) {
  if (n < 0) fail(errc::out_of_range, "n must be nonnegative");
  if (n > bound)
    fail(errc::bound_exceeded,
         "n=" + std::to_string(n) + " exceeds bound " + std::to_string(bound));

  auto from_cuts = [n](const std::vector<int>& cuts) {
    PointedComposition c;
    int prev = 0;
    for (int s : cuts) {
      c.interior.push_back(s - prev);
      prev = s;
    }
    c.pointed = n - prev;
    return c;
  };

  std::vector<std::string> labels;
  const std::uint64_t total = std::uint64_t{1} << n;
  labels.reserve(total);
  std::vector<std::vector<int>> all_cuts;
  all_cuts.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<int> cuts;
    for (int s = 1; s <= n; ++s)
      if (mask >> (s - 1) & 1) cuts.push_back(s);
    labels.push_back(from_cuts(cuts).str());
    all_cuts.push_back(std::move(cuts));
  }

  std::vector<std::pair<std::string, std::string>> covers;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const auto& cuts = all_cuts[mask];
    for (std::size_t t = 0; t < cuts.size(); ++t) {
      std::vector<int> fewer;
      for (std::size_t u = 0; u < cuts.size(); ++u)
        if (u != t) fewer.push_back(cuts[u]);
      covers.emplace_back(labels[mask], from_cuts(fewer).str());
    }
  }

  FinitePoset poset = FinitePoset::from_cover_relations(labels, covers);
  poset.set_annotation("family", "C");
  poset.set_annotation("n", std::to_string(n));
  return poset;
}

/// Type of a set-partition or composition poset element, read back from its
/// label.
inline PointedPartition element_type(const FinitePoset& poset,
                                     FinitePoset::Index x) {
  auto family = poset.annotation("family");
  if (!family) fail(errc::invalid_input, "poset lacks annotation family");
  if (*family == "Pi")
    return PointedSetPartition::parse(poset.label(x)).type();
  if (*family == "C") return PointedComposition::parse(poset.label(x)).type();
  if (*family == "I") return PointedPartition::parse(poset.label(x));
  fail(errc::invalid_input, "unsupported family " + *family);
}

/// Induced subposet of the elements whose type lies in the filter F of the
/// matching pointed-integer-partition poset.
inline FinitePoset restrict_by_type(const FinitePoset& poset,
                                    const PosetFilter& F) {
  if (F.parent == nullptr || F.empty())
    fail(errc::empty_filter, "filter has no members");
  detail::require_annotation(*F.parent, "family", "I");
  const int fn = detail::annotated_int(*F.parent, "n");
  const int pn = detail::annotated_int(poset, "n");
  if (fn != pn)
    fail(errc::mismatched_n, "filter is over n=" + std::to_string(fn) +
                                 " but poset has n=" + std::to_string(pn));

  std::unordered_set<std::string> allowed;
  for (std::size_t idx : F.members) allowed.insert(F.parent->label(idx));

  std::vector<FinitePoset::Index> keep;
  for (FinitePoset::Index x = 0; x < poset.size(); ++x)
    if (allowed.count(element_type(poset, x).str())) keep.push_back(x);
  return poset.induced(keep);
}

/// Filter of a pointed-integer-partition poset consisting of the elements
/// with at most k parts in total (the pointed part always counts, even when
/// it is zero).
inline PosetFilter filter_by_max_parts(const FinitePoset& I, int k) {
  detail::require_annotation(I, "family", "I");
  const int n = detail::annotated_int(I, "n");
  if (k < 1 || k > n + 1)
    fail(errc::out_of_range, "k must be between 1 and n+1");
  PosetFilter F;
  F.parent = &I;
  for (FinitePoset::Index x = 0; x < I.size(); ++x)
    if (PointedPartition::parse(I.label(x)).total_parts() <= k)
      F.members.push_back(x);
  return F;
}

}  // namespace mobius

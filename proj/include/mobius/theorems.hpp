#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mobius/arith.hpp"
#include "mobius/bounds.hpp"
#include "mobius/errors.hpp"
#include "mobius/knapsack.hpp"
#include "mobius/permutations.hpp"
#include "mobius/pointed.hpp"
#include "mobius/pointed_posets.hpp"
#include "mobius/poset.hpp"

namespace mobius {

namespace detail {

inline int filter_n(const PosetFilter& F) {
  if (F.parent == nullptr || F.empty())
    fail(errc::empty_filter, "filter has no members");
  require_annotation(*F.parent, "family", "I");
  return annotated_int(*F.parent, "n");
}

}  // namespace detail

/// mu(0hat, 1hat) of the type-restricted pointed set partition poset with an
/// artificial bottom adjoined, straight from the recursive definition.
/// A prebuilt pointed set partition poset of the right n may be supplied to
/// amortize construction across many filters.
inline std::int64_t mu_bruteforce(const PosetFilter& F,
                                  const Bounds& bounds = default_bounds(),
                                  const FinitePoset* prebuilt_pi = nullptr) {
  const int n = detail::filter_n(F);
  FinitePoset local;
  if (prebuilt_pi == nullptr) {
    local = build_Pi(n, bounds.pi);
    prebuilt_pi = &local;
  } else {
    detail::require_annotation(*prebuilt_pi, "family", "Pi");
    if (detail::annotated_int(*prebuilt_pi, "n") != n)
      fail(errc::mismatched_n, "prebuilt poset has the wrong n");
  }
  FinitePoset restricted = restrict_by_type(*prebuilt_pi, F).adjoin_bottom();
  auto bot = restricted.bottom();
  auto top = restricted.top();
  if (!bot || !top) fail(errc::invalid_input, "restriction lost its extremes");
  return restricted.mobius(*bot, *top);
}

/// Same value through the descent-statistic identity: sum over the
/// type-restricted pointed compositions c of
///   (-1)^(parts(c) - 1) * mu(0hat, c) * beta(c),
/// with mu taken in the restricted composition poset plus a bottom.
inline std::int64_t mu_theorem1(const PosetFilter& F,
                                const Bounds& bounds = default_bounds(),
                                const FinitePoset* prebuilt_c = nullptr) {
  const int n = detail::filter_n(F);
  FinitePoset local;
  if (prebuilt_c == nullptr) {
    local = build_C(n, bounds.c);
    prebuilt_c = &local;
  } else {
    detail::require_annotation(*prebuilt_c, "family", "C");
    if (detail::annotated_int(*prebuilt_c, "n") != n)
      fail(errc::mismatched_n, "prebuilt poset has the wrong n");
  }
  FinitePoset restricted = restrict_by_type(*prebuilt_c, F).adjoin_bottom();
  auto bot = restricted.bottom();
  if (!bot) fail(errc::invalid_input, "restriction lost its bottom");
  const auto& row = restricted.mobius_row(*bot);

  std::int64_t total = 0;
  for (FinitePoset::Index x = 0; x < restricted.size(); ++x) {
    if (x == *bot || row[x] == 0) continue;
    PointedComposition c = PointedComposition::parse(restricted.label(x));
    std::int64_t term = checked_mul(row[x], beta(c, bounds.enumeration));
    term = checked_mul(term, neg_one_pow(c.total_parts() - 1));
    total = checked_add(total, term);
  }
  return total;
}

/// Same value once more for a single knapsack generator (lambda, m):
/// (-1)^(|lambda| - 1) times the sum of beta over the attached compositions.
inline std::int64_t mu_knapsack(const std::vector<int>& lambda, int m,
                                const Bounds& bounds = default_bounds()) {
  VSet v = build_V(lambda, m);
  std::int64_t sum = 0;
  for (const auto& c : v.members)
    sum = checked_add(sum, beta(c, bounds.enumeration));
  return checked_mul(neg_one_pow(static_cast<int>(v.lambda.size()) - 1), sum);
}

/// Closed form for the generator (r^p, m) with n = r*p + m: the value is
/// (-1)^(p+1) * beta(r, ..., r, m).
inline std::int64_t mu_r_divisible(int n, int r, int m,
                                   const Bounds& bounds = default_bounds()) {
  if (r < 1) fail(errc::out_of_range, "r must be positive");
  if (m < 0) fail(errc::out_of_range, "m must be nonnegative");
  if (n <= m || (n - m) % r != 0)
    fail(errc::divisibility_mismatch,
         "n - m must be a positive multiple of r");
  const int p = (n - m) / r;
  PointedComposition c;
  c.interior.assign(p, r);
  c.pointed = m;
  return checked_mul(neg_one_pow(p + 1), beta(c, bounds.enumeration));
}

/// Stirling numbers of the second kind, S(0,0) = 1.
inline std::int64_t stirling2(int n, int k) {
  if (n < 0 || k < 0) fail(errc::out_of_range, "negative argument");
  if (k > n) return 0;
  std::vector<std::int64_t> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;  // S(0, 0)
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, n); j >= 1; --j)
      row[j] = checked_add(checked_mul(j, row[j]), row[j - 1]);
    row[0] = 0;  // S(i, 0)
  }
  return row[k];
}

/// Eulerian numbers indexed so that A(n, j) counts the permutations of
/// {1,...,n} with exactly j-1 descents, 1 <= j <= n; A(0, j) = 0.
inline std::int64_t eulerian(int n, int j) {
  if (n < 0) fail(errc::out_of_range, "negative argument");
  if (j < 1 || j > n) return 0;
  std::vector<std::int64_t> row(static_cast<std::size_t>(n) + 2, 0);
  row[1] = 1;  // A(1, 1)
  for (int i = 2; i <= n; ++i)
    for (int t = i; t >= 1; --t)
      row[t] = checked_add(checked_mul(t, row[t]),
                           checked_mul(i - t + 1, row[t - 1]));
  return row[j];
}

/// Both closed forms for the Mobius value of the at-most-k-parts filter:
/// a Stirling-number alternating sum and an Eulerian-number binomial sum.
struct TwoSidedValue {
  std::int64_t stirling_side = 0;
  std::int64_t eulerian_side = 0;
  bool equal = false;
};

inline TwoSidedValue verify_eulerian_stirling(int n, int k) {
  if (n < 1 || k < 1 || k > n + 1)
    fail(errc::out_of_range, "need 1 <= k <= n+1");
  TwoSidedValue v;
  for (int j = 1; j <= k; ++j) {
    std::int64_t s = checked_mul(factorial(j - 1), stirling2(n + 1, j));
    v.stirling_side =
        checked_add(v.stirling_side, checked_mul(neg_one_pow(j), s));
    std::int64_t e = checked_mul(binomial(n - j, n - k), eulerian(n, j));
    v.eulerian_side = checked_add(v.eulerian_side, e);
  }
  v.eulerian_side = checked_mul(neg_one_pow(k), v.eulerian_side);
  v.equal = v.stirling_side == v.eulerian_side;
  return v;
}

/// One filter, every applicable evaluation route, and their agreement.
struct MobiusReport {
  int n = 0;
  std::vector<PointedPartition> generators;
  std::optional<std::int64_t> bruteforce;
  std::optional<std::int64_t> theorem1;
  std::optional<std::int64_t> knapsack;
  bool agree = true;
};

inline MobiusReport compute_report(int n,
                                   const std::vector<std::string>& generators,
                                   const Bounds& bounds = default_bounds()) {
  MobiusReport report;
  report.n = n;
  std::vector<std::string> labels;
  for (const auto& text : generators) {
    PointedPartition g = PointedPartition::parse(text);
    if (g.n() != n)
      fail(errc::mismatched_n,
           "generator " + g.str() + " is a partition of " +
               std::to_string(g.n()) + ", not " + std::to_string(n));
    labels.push_back(g.str());
    report.generators.push_back(std::move(g));
  }
  if (labels.empty()) fail(errc::empty_filter, "no filter generators");

  FinitePoset I = build_I(n, bounds.i);
  PosetFilter F = I.filter_generated(labels);

  if (n <= bounds.pi) report.bruteforce = mu_bruteforce(F, bounds);
  if (n <= bounds.c) report.theorem1 = mu_theorem1(F, bounds);
  if (report.generators.size() == 1) {
    const auto& g = report.generators.front();
    if (is_knapsack(g.parts).knapsack)
      report.knapsack = mu_knapsack(g.parts, g.pointed, bounds);
  }

  if (!report.bruteforce && !report.theorem1 && !report.knapsack)
    fail(errc::bound_exceeded, "no evaluation route within bounds for n=" +
                                   std::to_string(n));

  std::optional<std::int64_t> first;
  for (auto v : {report.bruteforce, report.theorem1, report.knapsack}) {
    if (!v) continue;
    if (!first) first = v;
    else if (*first != *v) report.agree = false;
  }
  return report;
}

}  // namespace mobius

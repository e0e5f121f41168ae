#pragma once

#include <cstdint>
#include <vector>

#include "mobius/errors.hpp"

namespace mobius {

/// All Mobius/statistic values are exact 64-bit integers; every arithmetic
/// step traps overflow instead of wrapping.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    fail(errc::arithmetic_overflow, "64-bit add overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    fail(errc::arithmetic_overflow, "64-bit subtract overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(errc::arithmetic_overflow, "64-bit multiply overflow");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

/// (-1)^e without pow.
inline std::int64_t neg_one_pow(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

inline std::int64_t factorial(int n) {
  if (n < 0) fail(errc::out_of_range, "factorial of negative argument");
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

/// Exact binomial coefficient; 0 outside the Pascal triangle.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step.
    r = checked_mul(r, n - k + i) / i;
  }
  return r;
}

/// Multinomial coefficient n! / (parts[0]! * ... * parts[k-1]!).
/// pre: parts nonnegative and sum to n.
inline std::int64_t multinomial(std::int64_t n, const std::vector<std::int64_t>& parts) {
  std::int64_t sum = 0;
  for (std::int64_t p : parts) {
    if (p < 0) fail(errc::out_of_range, "negative multinomial part");
    sum = checked_add(sum, p);
  }
  if (sum != n) fail(errc::sum_mismatch, "multinomial parts do not sum to n");
  std::int64_t r = 1;
  std::int64_t rest = n;
  for (std::int64_t p : parts) {
    r = checked_mul(r, binomial(rest, p));
    rest -= p;
  }
  return r;
}

inline bool is_prime(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

}  // namespace mobius

#pragma once

namespace mobius {

/// Default size guards for the exhaustive builders.  These are configuration
/// values, not hard limits; callers may pass larger bounds knowingly (the
/// brute-force cost is Bell-number / factorial sized).
struct Bounds {
  int i = 20;           // build_I: |I_n| is Sum p(j), j <= n
  int pi = 9;           // build_Pi: Bell(n+1) elements
  int c = 16;           // build_C: 2^n elements
  int q = 7;            // build_Q: ordered-Bell(p) + 1 elements
  int eulerian = 5;     // verify_eulerian: all-interval sweep of Q_p
  int enumeration = 10; // permutation enumeration: n! words
  int census = 40;      // knapsack census over integer partitions
};

inline const Bounds& default_bounds() {
  static const Bounds b{};
  return b;
}

}  // namespace mobius

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "mobius/arith.hpp"
#include "mobius/theorems.hpp"

using namespace mobius;

TEST_CASE("descent formula agrees with the poset recursion") {
  for (int n = 0; n <= 5; ++n) {
    FinitePoset I = build_I(n);
    FinitePoset Pi = build_Pi(n);
    FinitePoset C = build_C(n);
    for (FinitePoset::Index g = 0; g < I.size(); ++g) {
      PosetFilter F = I.filter_generated({I.label(g)});
      CHECK(mu_bruteforce(F, default_bounds(), &Pi) ==
            mu_theorem1(F, default_bounds(), &C));
    }
  }
}

TEST_CASE("descent formula on multi-generator filters") {
  FinitePoset I = build_I(5);
  FinitePoset Pi = build_Pi(5);
  FinitePoset C = build_C(5);
  const std::vector<std::vector<std::string>> gens{
      {"1,4|0", "2,3|0"},
      {"1,1,3|0", "1,2|2"},
      {"2,3|0", "1,1,1|2", "5|0"},
      {"1,1,1,1,1|0", "|5"},
  };
  for (const auto& g : gens) {
    PosetFilter F = I.filter_generated(g);
    CHECK(mu_bruteforce(F, default_bounds(), &Pi) ==
          mu_theorem1(F, default_bounds(), &C));
  }
}

TEST_CASE("knapsack closed form matches both general routes") {
  for (int total = 0; total <= 6; ++total)
    for (const KnapsackCertificate& cert : census(total))
      for (int m = 0; total + m <= 6; ++m) {
        const int n = total + m;
        FinitePoset I = build_I(n);
        PointedPartition gen(cert.lambda, m);
        PosetFilter F = I.filter_generated({gen.str()});
        std::int64_t kn = mu_knapsack(cert.lambda, m);
        CHECK(kn == mu_bruteforce(F));
        CHECK(kn == mu_theorem1(F));
      }
}

TEST_CASE("full filters kill the Mobius value") {
  for (int n = 1; n <= 5; ++n) {
    FinitePoset I = build_I(n);
    std::vector<std::string> all;
    for (FinitePoset::Index x = 0; x < I.size(); ++x)
      all.push_back(I.label(x));
    PosetFilter F = I.filter_generated(all);
    CHECK(F.size() == I.size());
    CHECK(mu_bruteforce(F) == 0);
    CHECK(mu_theorem1(F) == 0);

    // the poset recursion collapses because the restriction has one atom:
    // only the discrete pointed set partition has the all-ones type
    FinitePoset restricted = restrict_by_type(build_Pi(n), F);
    FinitePoset with_bottom = restricted.adjoin_bottom("0hat");
    CHECK(with_bottom.atoms().size() == 1);
  }
}

TEST_CASE("at-most-k-parts filters have two closed forms") {
  FinitePoset I4 = build_I(4);
  const std::vector<std::int64_t> frozen{-1, 14, -36, 24, 0};
  for (int k = 1; k <= 5; ++k) {
    PosetFilter F = filter_by_max_parts(I4, k);
    std::int64_t bf = mu_bruteforce(F);
    std::int64_t th = mu_theorem1(F);
    TwoSidedValue two = verify_eulerian_stirling(4, k);
    CHECK(bf == frozen[k - 1]);
    CHECK(th == frozen[k - 1]);
    CHECK(two.equal);
    CHECK(two.stirling_side == frozen[k - 1]);
  }

  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n + 1; ++k) {
      TwoSidedValue two = verify_eulerian_stirling(n, k);
      CHECK(two.equal);
      CHECK(two.stirling_side == two.eulerian_side);
      if (k == n)
        CHECK(two.stirling_side == checked_mul(neg_one_pow(n), factorial(n)));
      if (k == n + 1) CHECK(two.stirling_side == 0);
    }
  for (int n = 1; n <= 6; ++n) {
    FinitePoset I = build_I(n);
    for (int k = 1; k <= n + 1; ++k) {
      PosetFilter F = filter_by_max_parts(I, k);
      CHECK(mu_bruteforce(F) == verify_eulerian_stirling(n, k).stirling_side);
    }
  }
  CHECK_THROWS_AS(verify_eulerian_stirling(4, 6), error);
  CHECK_THROWS_AS(verify_eulerian_stirling(0, 1), error);
}

TEST_CASE("equal-part filters via the divisibility closed form") {
  CHECK(mu_r_divisible(7, 2, 1) == 272);
  CHECK(mu_r_divisible(4, 2, 0) == 0);
  CHECK(mu_r_divisible(6, 2, 2) == -61);
  CHECK(mu_r_divisible(3, 1, 0) ==
        mu_bruteforce(build_I(3).filter_generated({"1,1,1|0"})));
  CHECK_THROWS_AS(mu_r_divisible(7, 2, 0), error);  // 7 not even
  CHECK_THROWS_AS(mu_r_divisible(5, 3, 1), error);
  CHECK_THROWS_AS(mu_r_divisible(3, 2, 3), error);  // nothing left to split

  // the closed form is the knapsack formula at a one-value multiset
  for (int r = 1; r <= 3; ++r)
    for (int p = 1; p <= 3; ++p)
      for (int m = 0; m <= 3; ++m) {
        std::vector<int> lambda(p, r);  // one-value multisets are knapsack
        CHECK(mu_r_divisible(r * p + m, r, m) == mu_knapsack(lambda, m));
      }
}

TEST_CASE("special value tables") {
  CHECK(stirling2(5, 2) == 15);
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(4, 0) == 0);
  CHECK(stirling2(6, 3) == 90);
  CHECK(stirling2(3, 5) == 0);
  CHECK_THROWS_AS(stirling2(-1, 0), error);

  CHECK(eulerian(4, 2) == 11);
  CHECK(eulerian(1, 1) == 1);
  CHECK(eulerian(4, 1) == 1);
  CHECK(eulerian(4, 4) == 1);
  CHECK(eulerian(4, 5) == 0);
  CHECK(eulerian(0, 1) == 0);
  for (int n = 1; n <= 9; ++n) {
    std::int64_t total = 0;
    for (int j = 1; j <= n; ++j) total += eulerian(n, j);
    CHECK(total == factorial(n));
  }
  // symmetry A(n, j) = A(n, n+1-j)
  for (int n = 1; n <= 9; ++n)
    for (int j = 1; j <= n; ++j) CHECK(eulerian(n, j) == eulerian(n, n + 1 - j));
}

TEST_CASE("reports bundle the independent routes") {
  MobiusReport r = compute_report(3, {"1,2|0"});
  REQUIRE(r.bruteforce.has_value());
  REQUIRE(r.theorem1.has_value());
  REQUIRE(r.knapsack.has_value());
  CHECK(*r.bruteforce == 0);
  CHECK(*r.theorem1 == 0);
  CHECK(*r.knapsack == 0);
  CHECK(r.agree);
  CHECK(r.generators.size() == 1);

  r = compute_report(0, {"|0"});
  CHECK(*r.bruteforce == -1);
  CHECK(*r.theorem1 == -1);
  CHECK(*r.knapsack == -1);
  CHECK(r.agree);

  r = compute_report(7, {"1,1,1,4|0"});
  CHECK(r.agree);
  CHECK(*r.knapsack == *r.bruteforce);

  // two generators: no single knapsack closed form applies
  r = compute_report(4, {"1,3|0", "2,2|0"});
  CHECK(r.bruteforce.has_value());
  CHECK(r.theorem1.has_value());
  CHECK_FALSE(r.knapsack.has_value());
  CHECK(r.agree);

  // non-knapsack generator: closed form again unavailable
  r = compute_report(4, {"1,1,2|0"});
  CHECK_FALSE(r.knapsack.has_value());
  CHECK(r.agree);

  CHECK_THROWS_AS(compute_report(4, {}), error);
  CHECK_THROWS_AS(compute_report(4, {""}), error);
  CHECK_THROWS_AS(compute_report(4, {"1,2|0"}), error);  // wrong total

  // out of reach for every route at the given bounds
  Bounds tight = default_bounds();
  tight.pi = 3;
  tight.c = 3;
  CHECK_THROWS_AS(compute_report(4, {"1,3|0", "2,2|0"}, tight), error);

  // large n: recursion bows out, formulas still answer
  Bounds wide = default_bounds();
  MobiusReport big = compute_report(10, {"10|0"}, wide);
  CHECK_FALSE(big.bruteforce.has_value());
  CHECK(big.theorem1.has_value());
  CHECK(big.knapsack.has_value());
  CHECK(*big.knapsack == *big.theorem1);
  CHECK(big.agree);
}

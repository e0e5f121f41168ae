#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "mobius/poset.hpp"

using namespace mobius;

namespace {

FinitePoset diamond() {
  return FinitePoset::from_cover_relations(
      {"bot", "a", "b", "top"},
      {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}});
}

FinitePoset boolean_cube() {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int mask = 0; mask < 8; ++mask) labels.push_back("s" + std::to_string(mask));
  for (int mask = 0; mask < 8; ++mask)
    for (int b = 0; b < 3; ++b)
      if (!(mask >> b & 1))
        covers.emplace_back("s" + std::to_string(mask),
                            "s" + std::to_string(mask | 1 << b));
  return FinitePoset::from_cover_relations(labels, covers);
}

FinitePoset random_poset(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size_dist(2, 40);
  const int n = size_dist(rng);
  std::uniform_real_distribution<double> prob_dist(0.05, 0.4);
  std::bernoulli_distribution flip(prob_dist(rng));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (flip(rng)) edges.emplace_back(labels[i], labels[j]);
  return FinitePoset::from_cover_relations(labels, edges);
}

}  // namespace

TEST_CASE("cover relation construction and lookup") {
  FinitePoset p = diamond();
  REQUIRE(p.size() == 4);
  CHECK(p.leq("bot", "top"));
  CHECK(p.leq("bot", "bot"));
  CHECK(p.leq("a", "top"));
  CHECK_FALSE(p.leq("a", "b"));
  CHECK_FALSE(p.leq("top", "bot"));
  CHECK(p.less("bot", "a"));
  CHECK_FALSE(p.less("a", "a"));
  CHECK(p.contains("a"));
  CHECK_FALSE(p.contains("z"));
  CHECK_THROWS_MATCHES(p.index_of("z"), error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("z")));
  CHECK(p.covers().size() == 4);
  CHECK(p.relation_count() == 4 + 4 + 1);  // strict pairs + reflexive
}

TEST_CASE("duplicate labels, cycles, and self-loops are rejected") {
  CHECK_THROWS_AS(
      FinitePoset::from_cover_relations({"a", "a"}, {}), error);
  CHECK_THROWS_AS(FinitePoset::from_cover_relations(
                      {"a", "b"}, {{"a", "b"}, {"b", "a"}}),
                  error);
  CHECK_THROWS_AS(
      FinitePoset::from_cover_relations({"a"}, {{"a", "a"}}), error);
  CHECK_THROWS_AS(
      FinitePoset::from_cover_relations({"a"}, {{"a", "b"}}), error);
}

TEST_CASE("transitive edges are pruned and counted") {
  FinitePoset p = FinitePoset::from_cover_relations(
      {"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"x", "z"}});
  CHECK(p.covers().size() == 2);
  CHECK(p.pruned_cover_count() == 1);
  CHECK(p.leq("x", "z"));

  FinitePoset q = diamond();
  CHECK(q.pruned_cover_count() == 0);
}

TEST_CASE("mobius values on the boolean cube") {
  FinitePoset p = boolean_cube();
  REQUIRE(p.size() == 8);
  CHECK(p.mobius("s0", "s7") == -1);
  CHECK(p.mobius("s0", "s3") == 1);
  CHECK(p.mobius("s0", "s1") == -1);
  CHECK(p.mobius("s0", "s0") == 1);
  CHECK_THROWS_AS(p.mobius("s1", "s2"), error);
  CHECK(p.is_lattice());
  CHECK(p.is_graded());
  CHECK(p.rank(p.index_of("s7")) == 3);
  CHECK(p.atoms().size() == 3);
}

TEST_CASE("extremes, atoms, and intervals") {
  FinitePoset p = diamond();
  REQUIRE(p.bottom().has_value());
  REQUIRE(p.top().has_value());
  CHECK(p.label(*p.bottom()) == "bot");
  CHECK(p.label(*p.top()) == "top");
  CHECK(p.minimal_elements().size() == 1);
  CHECK(p.maximal_elements().size() == 1);
  auto atoms = p.atoms();
  REQUIRE(atoms.size() == 2);
  auto iv = p.interval(p.index_of("bot"), p.index_of("top"));
  CHECK(iv.size() == 4);
  auto iv2 = p.interval(p.index_of("a"), p.index_of("top"));
  CHECK(iv2.size() == 2);

  FinitePoset two = FinitePoset::from_cover_relations({"a", "b"}, {});
  CHECK_FALSE(two.bottom().has_value());
  CHECK_FALSE(two.top().has_value());
}

TEST_CASE("adjoining a bottom") {
  FinitePoset two = FinitePoset::from_cover_relations({"a", "b"}, {});
  FinitePoset p = two.adjoin_bottom();
  REQUIRE(p.size() == 3);
  REQUIRE(p.bottom().has_value());
  CHECK(p.label(*p.bottom()) == "0hat");
  CHECK(p.atoms().size() == 2);
  CHECK(p.mobius("0hat", "a") == -1);
  CHECK(p.mobius("0hat", "b") == -1);

  FinitePoset chain = FinitePoset::from_cover_relations(
      {"x", "y"}, {{"x", "y"}});
  FinitePoset c = chain.adjoin_bottom();
  CHECK(c.mobius("0hat", "y") == 0);  // three-chain

  CHECK_THROWS_AS(p.adjoin_bottom("a"), error);
}

TEST_CASE("gradedness detection") {
  FinitePoset graded = boolean_cube();
  CHECK(graded.is_graded());
  FinitePoset skew = FinitePoset::from_cover_relations(
      {"0", "a", "b", "1"},
      {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "1"}});
  // the 0 -> 1 edge is transitive, leaving a graded chain
  CHECK(skew.is_graded());
  FinitePoset bad = FinitePoset::from_cover_relations(
      {"0", "a", "b", "c", "1"},
      {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
  CHECK_FALSE(bad.is_graded());
  CHECK_THROWS_AS(bad.rank(bad.index_of("1")), error);
}

TEST_CASE("lattice detection") {
  CHECK(boolean_cube().is_lattice());
  CHECK(diamond().is_lattice());
  // two incomparable upper bounds with no least one
  FinitePoset p = FinitePoset::from_cover_relations(
      {"0", "a", "b", "c", "d", "1"},
      {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"},
       {"b", "d"}, {"c", "1"}, {"d", "1"}});
  CHECK_FALSE(p.is_lattice());
}

TEST_CASE("induced subposets compress the order") {
  FinitePoset cube = boolean_cube();
  std::vector<FinitePoset::Index> keep{
      cube.index_of("s0"), cube.index_of("s3"), cube.index_of("s7")};
  FinitePoset chain = cube.induced(keep);
  REQUIRE(chain.size() == 3);
  CHECK(chain.leq("s0", "s7"));
  CHECK(chain.leq("s3", "s7"));
  CHECK(chain.covers().size() == 2);
  CHECK(chain.mobius("s0", "s7") == 0);
}

TEST_CASE("filters are upward closed and recover generators") {
  for (std::uint64_t seed : {11u, 22u, 33u}) {
    FinitePoset p = random_poset(seed);
    std::mt19937_64 rng(seed * 97);
    std::uniform_int_distribution<std::size_t> pick(0, p.size() - 1);
    std::set<std::string> gens{p.label(pick(rng)), p.label(pick(rng))};
    PosetFilter f = p.filter_generated({gens.begin(), gens.end()});
    for (FinitePoset::Index y = 0; y < p.size(); ++y) {
      bool above = false;
      for (const auto& g : gens)
        if (p.leq(p.index_of(g), y)) above = true;
      CHECK(f.contains(y) == above);
    }
    for (std::size_t g : f.generators()) {
      for (std::size_t other : f.members)
        if (other != g) CHECK_FALSE(p.leq(other, g));
    }
  }
  FinitePoset p = diamond();
  CHECK_THROWS_AS(p.filter_generated({}), error);
}

TEST_CASE("mobius rows invert zeta on seeded posets") {
  for (std::uint64_t seed : {101u, 202u, 303u, 404u}) {
    FinitePoset p = random_poset(seed);
    for (FinitePoset::Index x = 0; x < p.size(); ++x) {
      const auto& row = p.mobius_row(x);
      for (FinitePoset::Index y = 0; y < p.size(); ++y) {
        if (!p.leq(x, y)) {
          CHECK(row[y] == 0);
          continue;
        }
        std::int64_t conv = 0, conv2 = 0;
        for (FinitePoset::Index z = 0; z < p.size(); ++z) {
          if (p.leq(x, z) && p.leq(z, y)) {
            conv += row[z];
            conv2 += p.mobius_row(z)[y];
          }
        }
        std::int64_t want = x == y ? 1 : 0;
        CHECK(conv == want);
        CHECK(conv2 == want);
      }
    }
    for (const auto& [lo, hi] : p.covers())
      CHECK(p.interval(lo, hi).size() == 2);
  }
}

TEST_CASE("concurrent mobius row access is consistent") {
  FinitePoset p = boolean_cube();
  FinitePoset copy = p;  // rows computed independently
  std::vector<std::vector<std::int64_t>> expect;
  for (FinitePoset::Index x = 0; x < copy.size(); ++x)
    expect.push_back(copy.mobius_row(x));

  std::vector<std::thread> workers;
  std::atomic<int> mismatches{0};
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([&, t] {
      for (int round = 0; round < 50; ++round) {
        FinitePoset::Index x = (t + round) % p.size();
        if (p.mobius_row(x) != expect[x]) ++mismatches;
      }
    });
  }
  for (auto& w : workers) w.join();
  CHECK(mismatches == 0);
}

TEST_CASE("annotations survive derived posets") {
  FinitePoset p = diamond();
  p.set_annotation("family", "test");
  p.set_annotation("n", "4");
  CHECK(p.annotation("family") == std::optional<std::string>("test"));
  CHECK_FALSE(p.annotation("missing").has_value());
  FinitePoset sub = p.induced({0, 1});
  CHECK(sub.annotation("family") == std::optional<std::string>("test"));
  FinitePoset bot = p.adjoin_bottom();
  CHECK(bot.annotation("n") == std::optional<std::string>("4"));
}

TEST_CASE("interval sums of mobius vanish") {
  FinitePoset p = random_poset(777);
  for (FinitePoset::Index x = 0; x < p.size(); ++x) {
    const auto& row = p.mobius_row(x);
    for (FinitePoset::Index y = 0; y < p.size(); ++y) {
      if (!p.leq(x, y) || x == y) continue;
      std::int64_t sum = 0;
      for (FinitePoset::Index z : p.interval(x, y)) sum += row[z];
      CHECK(sum == 0);
    }
  }
}

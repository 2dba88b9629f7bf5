#include <doctest.h>

#include <cmath>

#include "linarr/crossings.hpp"
#include "linarr/predictors.hpp"
#include "linarr/random_trees.hpp"
#include "oracles.hpp"

using namespace linarr;

namespace {

const LabeledTree& sentence_tree() {
  static const auto tree = build_tree(7, {{1, 2}, {2, 6}, {6, 7}, {2, 3}, {3, 5}, {4, 5}});
  return tree;
}

}  // namespace

TEST_CASE("edges_cross") {
  CHECK(edges_cross({1, 3}, {2, 4}));
  CHECK(edges_cross({2, 4}, {1, 3}));
  CHECK_FALSE(edges_cross({1, 4}, {2, 3}));
  CHECK_FALSE(edges_cross({2, 3}, {1, 4}));
  CHECK_FALSE(edges_cross({1, 2}, {3, 4}));
}

TEST_CASE("count_crossings on the relative-clause sentences") {
  const auto in_situ = count_crossings(sentence_tree(), LinearArrangement::identity(7));
  CHECK(in_situ.total == 0);
  REQUIRE(in_situ.relative.has_value());
  CHECK(*in_situ.relative == 0.0);

  const auto extraposed = count_crossings(sentence_tree(), LinearArrangement({2, 3, 5, 6, 7, 4, 1}));
  CHECK(extraposed.total == 1);
  REQUIRE(extraposed.relative.has_value());
  CHECK(*extraposed.relative == doctest::Approx(1.0 / 9.0));
  // The crossing pair is woman~who (2,3) and arrived~yesterday (6,7).
  const auto& edges = sentence_tree().edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const bool involved = edges[i] == Edge(2, 3) || edges[i] == Edge(6, 7);
    CHECK(extraposed.per_edge[i] == (involved ? 1 : 0));
  }
}

TEST_CASE("stars never cross and have no relative count") {
  Rng rng(3);
  const auto star = build_tree(6, {{3, 1}, {3, 2}, {3, 4}, {3, 5}, {3, 6}});
  for (int i = 0; i < 50; ++i) {
    const auto c = count_crossings(star, random_arrangement(6, rng));
    CHECK(c.total == 0);
    CHECK_FALSE(c.relative.has_value());
  }
}

TEST_CASE("count_crossings agrees with the interleaving oracle and its invariants") {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const int n = rng.uniform(1, 25);
    const auto t = aldous_broder(n, rng);
    const auto arr = random_arrangement(n, rng);
    const auto c = count_crossings(t, arr);
    REQUIRE(c.total == oracle::crossings(oracle::edge_pairs(t), oracle::positions(arr)));
    REQUIRE(c.total >= 0);
    REQUIRE(c.total <= c_max(t));
    REQUIRE(count_crossings(t, arr.reversed()).total == c.total);
    std::int64_t per_edge_sum = 0;
    for (auto x : c.per_edge) per_edge_sum += x;
    REQUIRE(per_edge_sum == 2 * c.total);
    if (c.relative) {
      REQUIRE(*c.relative >= 0.0);
      REQUIRE(*c.relative <= 1.0);
    }
    REQUIRE(crossing_total(t, arr) == c.total);
  }
}

TEST_CASE("crossing_total stops early") {
  const auto t = build_tree(6, {{1, 4}, {2, 5}, {3, 6}, {1, 2}, {2, 3}});
  const auto identity = LinearArrangement::identity(6);
  const auto full = crossing_total(t, identity);
  REQUIRE(full >= 2);
  CHECK(crossing_total(t, identity, 0) == 1);
}

TEST_CASE("no crossings below four vertices") {
  for (int n = 1; n <= 3; ++n) {
    for_each_labeled_tree(n, [&](const LabeledTree& t) {
      std::vector<Position> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i + 1;
      do {
        REQUIRE(count_crossings(t, LinearArrangement(perm)).total == 0);
      } while (std::next_permutation(perm.begin(), perm.end()));
    });
  }
}

TEST_CASE("mean C over random arrangements approaches E0") {
  Rng rng(99);
  const auto t = aldous_broder(10, rng);
  const int samples = 100000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double c = static_cast<double>(crossing_total(t, random_arrangement(10, rng)));
    sum += c;
    sum_sq += c * c;
  }
  const double mean = sum / samples;
  const double se = std::sqrt((sum_sq / samples - mean * mean) / (samples - 1));
  CHECK(std::abs(mean - e0(t)) <= 3.0 * se);
}

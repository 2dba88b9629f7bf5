#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include <boost/math/distributions/chi_squared.hpp>

#include "linarr/crossings.hpp"
#include "linarr/predictors.hpp"
#include "linarr/random_trees.hpp"
#include "oracles.hpp"

using namespace linarr;

namespace {

std::vector<Edge> key(const LabeledTree& t) { return t.edges(); }

double chi_square_uniform(int n, std::int64_t samples, std::uint64_t seed, std::size_t& categories) {
  std::map<std::vector<Edge>, std::int64_t> counts;
  for_each_labeled_tree(n, [&](const LabeledTree& t) { counts[key(t)] = 0; });
  categories = counts.size();
  Rng rng(seed);
  for (std::int64_t i = 0; i < samples; ++i) ++counts.at(key(aldous_broder(n, rng)));
  const double expected = static_cast<double>(samples) / static_cast<double>(categories);
  double stat = 0.0;
  for (const auto& [_, c] : counts) stat += (c - expected) * (c - expected) / expected;
  return stat;
}

struct MeanSe {
  double mean;
  double se;
};

template <typename F>
MeanSe sample_mean(int count, F&& draw) {
  double sum = 0.0;
  double sq = 0.0;
  for (int i = 0; i < count; ++i) {
    const double x = draw();
    sum += x;
    sq += x * x;
  }
  const double mean = sum / count;
  return {mean, std::sqrt((sq / count - mean * mean) / (count - 1))};
}

}  // namespace

TEST_CASE("Rng streams are deterministic and distinct") {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) REQUIRE(a.next() == b.next());
  Rng c = Rng::derive(42, 0);
  Rng d = Rng::derive(42, 1);
  CHECK(c.next() != d.next());
  Rng e(1);
  for (int i = 0; i < 1000; ++i) {
    const int x = e.uniform(3, 5);
    REQUIRE(x >= 3);
    REQUIRE(x <= 5);
  }
  CHECK_THROWS_AS(e.below(0), std::invalid_argument);
}

TEST_CASE("aldous_broder small cases") {
  Rng rng(1);
  CHECK(aldous_broder(1, rng).edges().empty());
  const auto two = aldous_broder(2, rng);
  REQUIRE(two.edges().size() == 1);
  CHECK(two.edges()[0] == Edge(1, 2));
  CHECK_THROWS_AS(aldous_broder(0, rng), std::invalid_argument);
}

TEST_CASE("identity arrangement") {
  CHECK(identity_arrangement(3).positions() == std::vector<Position>{1, 2, 3});
  CHECK(identity_arrangement(1).positions() == std::vector<Position>{1});
}

TEST_CASE("Pruefer enumeration yields every labeled tree once") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<Edge>> seen;
    std::int64_t visits = 0;
    for_each_labeled_tree(n, [&](const LabeledTree& t) {
      seen.insert(key(t));
      ++visits;
    });
    const auto expected = static_cast<std::int64_t>(n <= 2 ? 1 : std::pow(n, n - 2));
    CHECK(visits == expected);
    CHECK(static_cast<std::int64_t>(seen.size()) == expected);
    if (n >= 3) {
      std::set<std::vector<Edge>> independent;
      for (const auto& edges : oracle::all_trees(n)) independent.insert(key(build_tree(n, edges)));
      CHECK(independent == seen);
    }
  }
}

TEST_CASE("aldous_broder is uniform over labeled trees") {
  const double alpha = 0.001;
  std::size_t categories = 0;
  const double stat4 = chi_square_uniform(4, 16000, 2024, categories);
  CHECK(categories == 16);
  const boost::math::chi_squared dist4(static_cast<double>(categories - 1));
  CHECK(stat4 < boost::math::quantile(boost::math::complement(dist4, alpha)));

  const double stat5 = chi_square_uniform(5, 125000, 2025, categories);
  CHECK(categories == 125);
  const boost::math::chi_squared dist5(static_cast<double>(categories - 1));
  CHECK(stat5 < boost::math::quantile(boost::math::complement(dist5, alpha)));
}

TEST_CASE("degree moment and E0 means match the closed forms") {
  for (int n : {5, 10, 20}) {
    Rng rng = Rng::derive(77, static_cast<std::uint64_t>(n));
    const auto k2 = sample_mean(10000, [&] { return degree_second_moment(aldous_broder(n, rng)); });
    CAPTURE(n);
    CHECK(std::abs(k2.mean - expected_k2_random_tree(n)) <= 3.0 * k2.se);
    const auto mean_e0 = sample_mean(10000, [&] { return e0(aldous_broder(n, rng)); });
    CHECK(std::abs(mean_e0.mean - expected_e0_random_tree(n)) <= 3.0 * mean_e0.se);
  }
}

TEST_CASE("sample_conditioned") {
  SamplerConfig config;
  config.n = 4;
  config.seed = 5;
  config.max_crossings = 3;
  // Every 4-vertex tree has C <= C_max <= 1.
  Rng rng(5);
  for (int i = 0; i < 100; ++i) CHECK(sample_conditioned(config, rng).attempts == 1);

  config.max_crossings = 0;
  for (int i = 0; i < 100; ++i) {
    const auto s = sample_conditioned(config, rng);
    CHECK(s.crossings == 0);
    CHECK(crossing_total(s.tree, identity_arrangement(4)) == 0);
  }

  config.n = 12;
  config.max_crossings = 3;
  config.seed = 8;
  const auto hard = sample_conditioned(config);
  CHECK(hard.crossings <= 3);
  CHECK(hard.attempts > 1);

  config.max_crossings = 0;
  config.max_attempts = 5;
  CHECK_THROWS_AS(sample_conditioned(config), SamplerExhausted);
  config.max_attempts = 0;
  CHECK_THROWS_AS(sample_conditioned(config), std::invalid_argument);
}

TEST_CASE("sampling is deterministic under a seed") {
  SamplerConfig config{12, 99, 3, 10'000'000};
  Rng a(99);
  Rng b(99);
  for (int i = 0; i < 5; ++i) {
    const auto x = sample_conditioned(config, a);
    const auto y = sample_conditioned(config, b);
    REQUIRE(x.tree == y.tree);
    REQUIRE(x.attempts == y.attempts);
  }
}

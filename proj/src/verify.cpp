#include "linarr/verify.hpp"

#include <cmath>
#include <sstream>

#include "linarr/predictors.hpp"
#include "linarr/random_trees.hpp"
#include "linarr/report.hpp"

namespace linarr {

namespace {

struct MeanAndError {
  double mean = 0.0;
  double standard_error = 0.0;
};

template <typename Sample>
MeanAndError monte_carlo(std::int64_t samples, Sample&& draw) {
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    const double x = draw();
    sum += x;
    sum_sq += x * x;
  }
  const double count = static_cast<double>(samples);
  const double mean = sum / count;
  const double variance = std::max(0.0, (sum_sq - count * mean * mean) / (count - 1.0));
  return {mean, std::sqrt(variance / count)};
}

CheckResult within_three_se(std::string name, const MeanAndError& estimate, double expected) {
  const double gap = std::abs(estimate.mean - expected);
  std::ostringstream os;
  os << "mean " << format_double(estimate.mean) << " vs " << format_double(expected) << " (|gap| "
     << format_double(gap) << ", 3 SE " << format_double(3.0 * estimate.standard_error) << ")";
  return {std::move(name), gap <= 3.0 * estimate.standard_error, os.str()};
}

}  // namespace

std::vector<CheckResult> run_self_checks(const SelfCheckOptions& options) {
  std::vector<CheckResult> results;

  const Rational third(Rational(1) / Rational(3));
  for (int n = 4; n <= options.n_max; ++n) {
    const Rational value = verify_identity(n);
    results.push_back({"identity n=" + std::to_string(n), value == third,
                       "sum p(cross|d1,d2) p(d1,d2) = " + format_rational(value)});
  }

  std::int64_t potential = 0;
  std::int64_t trees = 0;
  for_each_labeled_tree(4, [&](const LabeledTree& tree) {
    potential += c_max(tree);
    ++trees;
  });
  const Rational mean_e0 = Rational(potential) / Rational(3 * trees);
  results.push_back({"exhaustive E[E0[C]] n=4", mean_e0 == Rational(1) / Rational(4),
                     "average over " + std::to_string(trees) + " labeled trees = " +
                         format_rational(mean_e0)});

  for (int n : options.monte_carlo_sizes) {
    Rng k2_rng = Rng::derive(options.seed, 2 * static_cast<std::uint64_t>(n));
    const auto k2 = monte_carlo(options.samples, [&] {
      return degree_second_moment(aldous_broder(n, k2_rng));
    });
    results.push_back(
        within_three_se("E[<k^2>] n=" + std::to_string(n), k2, expected_k2_random_tree(n)));

    Rng e0_rng = Rng::derive(options.seed, 2 * static_cast<std::uint64_t>(n) + 1);
    const auto mean_e0_mc = monte_carlo(options.samples, [&] {
      return e0(aldous_broder(n, e0_rng));
    });
    results.push_back(
        within_three_se("E[E0[C]] n=" + std::to_string(n), mean_e0_mc, expected_e0_random_tree(n)));
  }
  return results;
}

}  // namespace linarr

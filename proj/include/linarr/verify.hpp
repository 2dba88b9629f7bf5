#ifndef LINARR_VERIFY_HPP
#define LINARR_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace linarr {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelfCheckOptions {
  int n_max = 12;
  /// Random trees per Monte-Carlo check.
  std::int64_t samples = 10'000;
  std::uint64_t seed = 1;
  std::vector<int> monte_carlo_sizes{5, 10, 20};
};

/// Exact crossing identity for 4..n_max, the exhaustive n = 4 average of
/// E0[C], and Monte-Carlo checks of the random-tree closed forms.
std::vector<CheckResult> run_self_checks(const SelfCheckOptions& options);

}  // namespace linarr

#endif  // LINARR_VERIFY_HPP

#ifndef LINARR_RANDOM_TREES_HPP
#define LINARR_RANDOM_TREES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "linarr/tree.hpp"

namespace linarr {

/// Seedable 64-bit stream. Child streams are derived from (seed, index) so
/// parallel work is reproducible regardless of scheduling. Bounded draws
/// use rejection on the raw engine output, so sequences are identical
/// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Independent stream number `index` under master seed `seed`.
  static Rng derive(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::mt19937_64 engine_;
};

/// Uniform random labeled tree on 1..n by the Aldous-Broder random walk on
/// the complete graph K_n, starting from a uniform vertex.
LabeledTree aldous_broder(int n, Rng& rng);

/// pi(v) = v.
inline LinearArrangement identity_arrangement(int n) { return LinearArrangement::identity(n); }

/// Uniform random permutation (Fisher-Yates).
LinearArrangement random_arrangement(int n, Rng& rng);

/// Tree encoded by a Pruefer sequence of length n - 2 over 1..n.
LabeledTree prufer_decode(int n, const std::vector<Vertex>& code);

/// Calls visit once for each of the n^(n-2) labeled trees on 1..n.
void for_each_labeled_tree(int n, const std::function<void(const LabeledTree&)>& visit);

struct SamplerConfig {
  int n = 0;
  std::uint64_t seed = 0;
  /// Accept only trees with C <= max_crossings under the identity arrangement.
  std::optional<std::int64_t> max_crossings;
  std::int64_t max_attempts = 10'000'000;
};

class SamplerExhausted : public std::runtime_error {
 public:
  SamplerExhausted(std::int64_t attempts, const std::string& what)
      : std::runtime_error(what), attempts_(attempts) {}
  std::int64_t attempts() const { return attempts_; }

 private:
  std::int64_t attempts_;
};

struct ConditionedSample {
  LabeledTree tree;
  std::int64_t crossings = 0;
  std::int64_t attempts = 0;
};

/// Draws Aldous-Broder trees until one has at most max_crossings crossings
/// with labels as positions. Throws SamplerExhausted after max_attempts.
ConditionedSample sample_conditioned(const SamplerConfig& config, Rng& rng);

/// Same, with a stream seeded from config.seed.
ConditionedSample sample_conditioned(const SamplerConfig& config);

}  // namespace linarr

#endif  // LINARR_RANDOM_TREES_HPP

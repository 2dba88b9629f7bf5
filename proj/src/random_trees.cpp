#include "linarr/random_trees.hpp"

#include <algorithm>
#include <sstream>

#include "linarr/crossings.hpp"

namespace linarr {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

Rng Rng::derive(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(seed) ^ splitmix64(splitmix64(index) + 0x632BE59BD9B4E019ULL));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below needs a positive bound");
  // Largest multiple of bound that fits, so r % bound is unbiased.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

LabeledTree aldous_broder(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("aldous_broder needs n >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(n - 1);
  std::vector<bool> visited(n + 1, false);

  Vertex current = rng.uniform(1, n);
  visited[current] = true;
  int remaining = n - 1;
  while (remaining > 0) {
    // Uniform neighbour in K_n: one of the n - 1 other vertices.
    Vertex next = rng.uniform(1, n - 1);
    if (next >= current) ++next;
    if (!visited[next]) {
      visited[next] = true;
      edges.emplace_back(current, next);
      --remaining;
    }
    current = next;
  }
  return build_tree(n, edges);
}

LinearArrangement random_arrangement(int n, Rng& rng) {
  std::vector<Position> positions(n);
  for (int i = 0; i < n; ++i) positions[i] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(positions[i], positions[j]);
  }
  return LinearArrangement(std::move(positions));
}

LabeledTree prufer_decode(int n, const std::vector<Vertex>& code) {
  if (n < 2) {
    if (!code.empty()) throw std::invalid_argument("Pruefer code too long");
    return build_tree(n, std::vector<std::pair<Vertex, Vertex>>{});
  }
  if (static_cast<int>(code.size()) != n - 2) {
    throw std::invalid_argument("Pruefer code must have n - 2 entries");
  }
  std::vector<int> degree(n + 1, 1);
  for (Vertex v : code) {
    if (v < 1 || v > n) throw std::invalid_argument("Pruefer entry outside 1..n");
    ++degree[v];
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(n - 1);
  for (Vertex v : code) {
    Vertex leaf = 1;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, v);
    --degree[leaf];
    --degree[v];
  }
  Vertex a = 0;
  for (Vertex u = 1; u <= n; ++u) {
    if (degree[u] != 1) continue;
    if (a == 0) {
      a = u;
    } else {
      edges.emplace_back(a, u);
      break;
    }
  }
  return build_tree(n, edges);
}

void for_each_labeled_tree(int n, const std::function<void(const LabeledTree&)>& visit) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n <= 2) {
    visit(prufer_decode(n, {}));
    return;
  }
  std::vector<Vertex> code(n - 2, 1);
  for (;;) {
    visit(prufer_decode(n, code));
    std::size_t i = 0;
    while (i < code.size() && code[i] == n) code[i++] = 1;
    if (i == code.size()) return;
    ++code[i];
  }
}

ConditionedSample sample_conditioned(const SamplerConfig& config, Rng& rng) {
  if (config.n < 1) throw std::invalid_argument("sampler needs n >= 1");
  if (config.max_attempts < 1) throw std::invalid_argument("sampler needs max_attempts >= 1");

  const auto arrangement = identity_arrangement(config.n);
  const std::int64_t limit = config.max_crossings.value_or(INT64_MAX);
  for (std::int64_t attempt = 1; attempt <= config.max_attempts; ++attempt) {
    LabeledTree tree = aldous_broder(config.n, rng);
    const std::int64_t c = crossing_total(tree, arrangement, limit);
    if (c <= limit) return {std::move(tree), c, attempt};
  }
  std::ostringstream os;
  os << "no tree with C <= " << limit << " at n=" << config.n << " after "
     << config.max_attempts << " attempts";
  throw SamplerExhausted(config.max_attempts, os.str());
}

ConditionedSample sample_conditioned(const SamplerConfig& config) {
  Rng rng(config.seed);
  return sample_conditioned(config, rng);
}

}  // namespace linarr

#include "linarr/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <mutex>
#include <sstream>

#include "linarr/io.hpp"
#include "linarr/random_trees.hpp"

namespace linarr {

DeltaPair delta(const LabeledTree& tree, const LinearArrangement& arr, const PCrossTable& table) {
  const std::int64_t potential = c_max(tree);
  if (potential == 0) {
    throw std::invalid_argument("relative error undefined for C_max = 0 (star tree)");
  }
  const double cm = static_cast<double>(potential);
  const double c = static_cast<double>(crossing_total(tree, arr));
  return {(e0(tree) - c) / cm, (e2(tree, arr, table) - c) / cm};
}

std::int64_t max_crossings_exhaustive(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("exhaustive crossing maximum only for 1 <= n <= 8");
  static std::mutex mutex;
  static std::map<int, std::int64_t> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  const auto identity = identity_arrangement(n);
  std::int64_t best = 0;
  for_each_labeled_tree(n, [&](const LabeledTree& tree) {
    best = std::max(best, crossing_total(tree, identity));
  });
  cache.emplace(n, best);
  return best;
}

namespace {

constexpr std::int64_t kBlockSize = 1024;

struct Accepted {
  std::int64_t attempt = 0;  // 0-based index within its block
  std::int64_t crossings = 0;
  bool has_pairs = false;    // C_max > 0
  double delta0 = 0.0;
  double delta2 = 0.0;
};

// One block of tree draws from its own derived stream.
std::vector<Accepted> sample_block(int n, std::int64_t threshold, const PCrossTable& table,
                                   std::uint64_t seed, std::uint64_t block,
                                   std::int64_t draws) {
  Rng rng = Rng::derive(seed, (static_cast<std::uint64_t>(n) << 40) | block);
  const auto identity = identity_arrangement(n);
  std::vector<Accepted> out;
  for (std::int64_t i = 0; i < draws; ++i) {
    const LabeledTree tree = aldous_broder(n, rng);
    const std::int64_t c = crossing_total(tree, identity, threshold);
    if (c > threshold) continue;
    Accepted a;
    a.attempt = i;
    a.crossings = c;
    const std::int64_t potential = c_max(tree);
    if (potential > 0) {
      const auto d = delta(tree, identity, table);
      a.has_pairs = true;
      a.delta0 = d.delta0;
      a.delta2 = d.delta2;
    }
    out.push_back(a);
  }
  return out;
}

// Welford accumulator; fed in a fixed order so results are reproducible.
struct Moments {
  std::int64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double d = x - mean;
    mean += d / static_cast<double>(count);
    m2 += d * (x - mean);
  }

  double sd() const { return count > 1 ? std::sqrt(m2 / static_cast<double>(count - 1)) : 0.0; }
};

struct Cell {
  std::int64_t c_true = 0;
  bool reachable = true;
  std::int64_t replicas = 0;
  Moments delta0;
  Moments delta2;
};

void validate(const EnsembleConfig& config) {
  if (config.n_min < 4) throw std::invalid_argument("ensembles need n_min >= 4");
  if (config.n_max < config.n_min) throw std::invalid_argument("n_max < n_min");
  if (config.replicas < 1) throw std::invalid_argument("replicas must be >= 1");
  if (config.c_true_values.empty()) throw std::invalid_argument("no C_true values requested");
  for (auto c : config.c_true_values) {
    if (c < 0) throw std::invalid_argument("C_true values must be >= 0");
  }
  if (config.max_attempts_per_n < 1) throw std::invalid_argument("max_attempts_per_n must be >= 1");
}

// Exact for n <= 8. Appending a leaf at the last position adds no crossing,
// so the maximum is non-decreasing in n and anything reachable at 8 stays
// reachable; larger requests past n = 8 are left to the attempt guard.
bool reachable(int n, std::int64_t c) {
  if (n <= 8) return c <= max_crossings_exhaustive(n);
  return true;
}

}  // namespace

EnsembleResult run_ensemble(const EnsembleConfig& config) {
  validate(config);
  std::vector<std::int64_t> values = config.c_true_values;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  const std::int64_t threshold = values.back();
  const unsigned workers = std::max(1u, config.workers);

  EnsembleResult result;
  for (int n = config.n_min; n <= config.n_max; ++n) {
    const auto table = build_p_table(n);
    VertexCountSummary summary;
    summary.n = n;

    std::vector<Cell> cells;
    for (auto c : values) {
      Cell cell;
      cell.c_true = c;
      cell.reachable = reachable(n, c);
      if (!cell.reachable) summary.unreachable.push_back(c);
      cells.push_back(cell);
    }
    auto cell_for = [&](std::int64_t c) -> Cell* {
      for (auto& cell : cells) {
        if (cell.c_true == c) return &cell;
      }
      return nullptr;
    };
    auto done = [&] {
      if (config.mode == QuotaMode::kPostHoc) return summary.accepted >= config.replicas;
      return std::all_of(cells.begin(), cells.end(), [&](const Cell& cell) {
        return !cell.reachable || cell.replicas >= config.replicas;
      });
    };

    std::uint64_t next_block = 0;
    bool finished = done();
    while (!finished) {
      const std::int64_t consumed = static_cast<std::int64_t>(next_block) * kBlockSize;
      if (consumed >= config.max_attempts_per_n) break;

      std::vector<std::future<std::vector<Accepted>>> batch;
      std::vector<std::int64_t> draws;
      for (unsigned w = 0; w < workers; ++w) {
        const std::int64_t start = static_cast<std::int64_t>(next_block + w) * kBlockSize;
        if (start >= config.max_attempts_per_n) break;
        const std::int64_t count = std::min(kBlockSize, config.max_attempts_per_n - start);
        draws.push_back(count);
        const std::uint64_t block = next_block + w;
        batch.push_back(std::async(workers == 1 ? std::launch::deferred : std::launch::async,
                                   [&, block, count] {
                                     return sample_block(n, threshold, *table, config.seed, block,
                                                         count);
                                   }));
      }

      for (std::size_t b = 0; b < batch.size() && !finished; ++b) {
        const auto samples = batch[b].get();
        const std::int64_t block_start = static_cast<std::int64_t>(next_block + b) * kBlockSize;
        summary.attempts = block_start + draws[b];
        for (const auto& s : samples) {
          Cell* cell = cell_for(s.crossings);
          const bool take = config.mode == QuotaMode::kPostHoc
                                ? true
                                : (cell != nullptr && cell->replicas < config.replicas);
          if (take) {
            ++summary.accepted;
            if (cell != nullptr) {
              ++cell->replicas;
              if (s.has_pairs) {
                cell->delta0.add(s.delta0);
                cell->delta2.add(s.delta2);
              }
            }
          }
          if (done()) {
            summary.attempts = block_start + s.attempt + 1;
            finished = true;
            break;
          }
        }
      }
      // Drain any futures left after an early finish.
      for (auto& f : batch) {
        if (f.valid()) f.wait();
      }
      next_block += batch.size();
    }

    if (!finished) {
      summary.exhausted = true;
      result.partial = true;
    }
    for (const auto& cell : cells) {
      if (!cell.reachable) continue;
      DeltaStats stats;
      stats.n = n;
      stats.c_true = cell.c_true;
      stats.replicas = cell.replicas;
      stats.samples_used = cell.delta2.count;
      stats.mean_delta0 = cell.delta0.mean;
      stats.mean_delta2 = cell.delta2.mean;
      stats.sd_delta0 = cell.delta0.sd();
      stats.sd_delta2 = cell.delta2.sd();
      result.cells.push_back(stats);
    }
    result.per_n.push_back(std::move(summary));
  }
  return result;
}

AnalysisReport analyze(const LabeledTree& tree, const LinearArrangement& arr) {
  check_same_size(tree, arr);
  return AnalysisReport{tree, arr, total_length(tree, arr), count_crossings(tree, arr),
                        predict(tree, arr)};
}

AnalysisReport analyze_fixture(const std::filesystem::path& tree_file,
                               const std::optional<std::filesystem::path>& arrangement_file) {
  const LabeledTree tree = read_edge_list_file(tree_file);
  const LinearArrangement arr = arrangement_file
                                    ? read_arrangement_file(*arrangement_file, tree.size())
                                    : identity_arrangement(tree.size());
  return analyze(tree, arr);
}

}  // namespace linarr

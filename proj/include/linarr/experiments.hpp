#ifndef LINARR_EXPERIMENTS_HPP
#define LINARR_EXPERIMENTS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "linarr/crossings.hpp"
#include "linarr/predictors.hpp"
#include "linarr/tree.hpp"

namespace linarr {

struct DeltaPair {
  double delta0 = 0.0;
  double delta2 = 0.0;
};

/// Relative prediction errors (E_x[C] - C) / C_max for x = 0, 2.
/// Throws std::invalid_argument when C_max = 0.
DeltaPair delta(const LabeledTree& tree, const LinearArrangement& arr, const PCrossTable& table);

enum class QuotaMode {
  /// Sample until every requested C_true cell holds `replicas` trees.
  kPerCell,
  /// Sample `replicas` trees with C <= max(c_true_values), then bucket.
  kPostHoc,
};

struct EnsembleConfig {
  int n_min = 4;
  int n_max = 14;
  std::int64_t replicas = 1000;
  std::vector<std::int64_t> c_true_values{0, 1, 2, 3};
  std::uint64_t seed = 1;
  QuotaMode mode = QuotaMode::kPerCell;
  /// Threads used per vertex count; output does not depend on it.
  unsigned workers = 1;
  /// Tree draws allowed per vertex count before giving up on it.
  std::int64_t max_attempts_per_n = 2'000'000'000;
};

struct DeltaStats {
  int n = 0;
  std::int64_t c_true = 0;
  /// Accepted trees in this cell.
  std::int64_t replicas = 0;
  /// Of those, trees with C_max > 0 (the ones entering the means).
  std::int64_t samples_used = 0;
  double mean_delta0 = 0.0;
  double mean_delta2 = 0.0;
  double sd_delta0 = 0.0;
  double sd_delta2 = 0.0;
};

struct VertexCountSummary {
  int n = 0;
  std::int64_t attempts = 0;
  std::int64_t accepted = 0;
  bool exhausted = false;
  /// Requested C_true values no tree on n vertices can reach.
  std::vector<std::int64_t> unreachable;
};

struct EnsembleResult {
  std::vector<DeltaStats> cells;
  std::vector<VertexCountSummary> per_n;
  bool partial = false;
};

/// Largest C over all labeled trees on n vertices with labels as positions,
/// by exhaustion. Only for n <= 8.
std::int64_t max_crossings_exhaustive(int n);

/// Throws std::invalid_argument on an invalid config.
EnsembleResult run_ensemble(const EnsembleConfig& config);

struct AnalysisReport {
  LabeledTree tree;
  LinearArrangement arrangement;
  std::int64_t total_length = 0;
  CrossingCount crossings;
  PredictionReport prediction;
};

AnalysisReport analyze(const LabeledTree& tree, const LinearArrangement& arr);

/// Reads an edge-list file and an optional arrangement file (identity when
/// absent) and analyzes them.
AnalysisReport analyze_fixture(const std::filesystem::path& tree_file,
                               const std::optional<std::filesystem::path>& arrangement_file);

}  // namespace linarr

#endif  // LINARR_EXPERIMENTS_HPP

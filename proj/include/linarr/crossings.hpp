#ifndef LINARR_CROSSINGS_HPP
#define LINARR_CROSSINGS_HPP

#include <cassert>
#include <cstdint>
#include <climits>
#include <optional>
#include <vector>

#include "linarr/tree.hpp"

namespace linarr {

/// True iff the two spans interleave. The spans must occupy four distinct
/// positions; edges sharing a vertex never cross.
inline bool edges_cross(const EdgeSpan& a, const EdgeSpan& b) {
  assert(a.start != b.start && a.start != b.end && a.end != b.start && a.end != b.end);
  return (a.start < b.start && b.start < a.end && a.end < b.end) ||
         (a.start > b.start && a.start < b.end && b.end < a.end);
}

struct CrossingCount {
  /// C: number of unordered crossing pairs.
  std::int64_t total = 0;
  /// C(u~v), indexed like LabeledTree::edges().
  std::vector<std::int64_t> per_edge;
  /// C / C_max; empty when C_max = 0.
  std::optional<double> relative;
};

CrossingCount count_crossings(const LabeledTree& tree, const LinearArrangement& arr);

/// C alone. Stops as soon as the count exceeds stop_above, returning
/// stop_above + 1 in that case.
std::int64_t crossing_total(const LabeledTree& tree, const LinearArrangement& arr,
                            std::int64_t stop_above = INT64_MAX);

}  // namespace linarr

#endif  // LINARR_CROSSINGS_HPP

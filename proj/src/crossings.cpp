#include "linarr/crossings.hpp"

namespace linarr {

CrossingCount count_crossings(const LabeledTree& tree, const LinearArrangement& arr) {
  check_same_size(tree, arr);
  const auto& edges = tree.edges();
  const std::size_t m = edges.size();

  std::vector<EdgeSpan> spans;
  spans.reserve(m);
  for (const auto& e : edges) spans.push_back(span_of(arr, e));

  CrossingCount result;
  result.per_edge.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (edges[i].shares_vertex_with(edges[j])) continue;
      if (edges_cross(spans[i], spans[j])) {
        ++result.total;
        ++result.per_edge[i];
        ++result.per_edge[j];
      }
    }
  }

  const std::int64_t potential = c_max(tree);
  if (potential > 0) {
    result.relative = static_cast<double>(result.total) / static_cast<double>(potential);
  }
  return result;
}

std::int64_t crossing_total(const LabeledTree& tree, const LinearArrangement& arr,
                            std::int64_t stop_above) {
  check_same_size(tree, arr);
  const auto& edges = tree.edges();
  std::vector<EdgeSpan> spans;
  spans.reserve(edges.size());
  for (const auto& e : edges) spans.push_back(span_of(arr, e));

  std::int64_t total = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i].shares_vertex_with(edges[j]) || !edges_cross(spans[i], spans[j])) continue;
      if (++total > stop_above) return total;
    }
  }
  return total;
}

}  // namespace linarr

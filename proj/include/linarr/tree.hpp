#ifndef LINARR_TREE_HPP
#define LINARR_TREE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace linarr {

/// Vertex identifier, 1..n.
using Vertex = int;
/// Position on the line, 1..n.
using Position = int;

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool shares_vertex_with(const Edge& other) const {
    return u == other.u || u == other.v || v == other.u || v == other.v;
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raised by build_tree; kind() tells which tree rule the input broke.
class TreeError : public std::invalid_argument {
 public:
  enum class Kind {
    kEmpty,
    kWrongEdgeCount,
    kVertexOutOfRange,
    kSelfLoop,
    kDuplicateEdge,
    kDisconnected,
  };

  TreeError(Kind kind, const std::string& what, std::optional<std::pair<Vertex, Vertex>> edge = {})
      : std::invalid_argument(what), kind_(kind), edge_(edge) {}

  Kind kind() const { return kind_; }
  /// The offending edge, when the error is about one.
  const std::optional<std::pair<Vertex, Vertex>>& edge() const { return edge_; }

 private:
  Kind kind_;
  std::optional<std::pair<Vertex, Vertex>> edge_;
};

const char* to_string(TreeError::Kind kind);

/// A validated labeled tree on vertices 1..n. Immutable; edges are kept
/// sorted so two trees with the same edge set compare equal.
class LabeledTree {
 public:
  int size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int degree(Vertex v) const { return degrees_[v - 1]; }
  const std::vector<int>& degrees() const { return degrees_; }
  bool has_edge(const Edge& e) const;

  friend bool operator==(const LabeledTree&, const LabeledTree&) = default;

 private:
  friend LabeledTree build_tree(int, std::span<const std::pair<Vertex, Vertex>>);

  LabeledTree(int n, std::vector<Edge> edges, std::vector<int> degrees)
      : n_(n), edges_(std::move(edges)), degrees_(std::move(degrees)) {}

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> degrees_;
};

/// Validates n and an edge list and returns the tree. Throws TreeError.
LabeledTree build_tree(int n, std::span<const std::pair<Vertex, Vertex>> edges);

inline LabeledTree build_tree(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return build_tree(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

inline LabeledTree build_tree(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  return build_tree(n, std::span<const std::pair<Vertex, Vertex>>(edges));
}

class ArrangementError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bijection pi from vertices 1..n to positions 1..n.
class LinearArrangement {
 public:
  /// positions[i] is pi(i + 1). Throws ArrangementError unless it is a
  /// permutation of 1..n.
  explicit LinearArrangement(std::vector<Position> positions);

  static LinearArrangement identity(int n);

  int size() const { return static_cast<int>(positions_.size()); }
  Position position(Vertex v) const { return positions_[v - 1]; }
  Vertex vertex_at(Position p) const { return vertices_[p - 1]; }
  const std::vector<Position>& positions() const { return positions_; }

  /// pi'(v) = n + 1 - pi(v).
  LinearArrangement reversed() const;

  friend bool operator==(const LinearArrangement& a, const LinearArrangement& b) {
    return a.positions_ == b.positions_;
  }

 private:
  std::vector<Position> positions_;
  std::vector<Vertex> vertices_;
};

/// Where an edge lies on the line: start < end.
struct EdgeSpan {
  Position start = 0;
  Position end = 0;

  int length() const { return end - start; }

  friend bool operator==(const EdgeSpan&, const EdgeSpan&) = default;
};

inline EdgeSpan span_of(const LinearArrangement& arr, const Edge& e) {
  const Position a = arr.position(e.u);
  const Position b = arr.position(e.v);
  return a < b ? EdgeSpan{a, b} : EdgeSpan{b, a};
}

/// Checked variant of span_of: throws std::invalid_argument if the edge is
/// not in the tree or the arrangement has the wrong size.
EdgeSpan edge_span(const LabeledTree& tree, const LinearArrangement& arr, const Edge& edge);

/// Sum of edge lengths, D.
std::int64_t total_length(const LabeledTree& tree, const LinearArrangement& arr);

/// Mean of squared degrees, (1/n) sum_v k_v^2.
double degree_second_moment(const LabeledTree& tree);

/// sum_v k_v^2, the integer behind degree_second_moment.
std::int64_t sum_squared_degrees(const LabeledTree& tree);

/// Number of vertex-disjoint edge pairs, from the degree identity
/// (n/2)(n - 1 - <k^2>).
std::int64_t c_max(const LabeledTree& tree);

/// Number of vertex-disjoint edge pairs by explicit double loop.
std::int64_t disjoint_edge_pairs(const LabeledTree& tree);

/// Throws std::invalid_argument if arr does not have the tree's size.
void check_same_size(const LabeledTree& tree, const LinearArrangement& arr);

}  // namespace linarr

#endif  // LINARR_TREE_HPP

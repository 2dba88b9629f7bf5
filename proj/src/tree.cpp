#include "linarr/tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace linarr {

namespace {

// Union-find over 1..n, used only to detect cycles during validation.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n + 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::string edge_str(Vertex u, Vertex v) {
  std::ostringstream os;
  os << "(" << u << "," << v << ")";
  return os.str();
}

}  // namespace

const char* to_string(TreeError::Kind kind) {
  switch (kind) {
    case TreeError::Kind::kEmpty: return "empty";
    case TreeError::Kind::kWrongEdgeCount: return "wrong_edge_count";
    case TreeError::Kind::kVertexOutOfRange: return "vertex_out_of_range";
    case TreeError::Kind::kSelfLoop: return "self_loop";
    case TreeError::Kind::kDuplicateEdge: return "duplicate_edge";
    case TreeError::Kind::kDisconnected: return "disconnected";
  }
  return "unknown";
}

bool LabeledTree::has_edge(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

LabeledTree build_tree(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  using Kind = TreeError::Kind;
  if (n < 1) throw TreeError(Kind::kEmpty, "a tree needs at least one vertex");
  if (static_cast<std::int64_t>(edges.size()) != n - 1) {
    std::ostringstream os;
    os << "a tree on " << n << " vertices needs exactly " << n - 1 << " edges, got "
       << edges.size();
    throw TreeError(Kind::kWrongEdgeCount, os.str());
  }

  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      std::ostringstream os;
      os << "edge " << edge_str(u, v) << " has a vertex outside 1.." << n;
      throw TreeError(Kind::kVertexOutOfRange, os.str(), std::pair{u, v});
    }
    if (u == v) throw TreeError(Kind::kSelfLoop, "self-loop at edge " + edge_str(u, v), std::pair{u, v});
    normalized.emplace_back(u, v);
  }

  std::sort(normalized.begin(), normalized.end());
  if (auto dup = std::adjacent_find(normalized.begin(), normalized.end());
      dup != normalized.end()) {
    throw TreeError(Kind::kDuplicateEdge, "duplicate edge " + edge_str(dup->u, dup->v),
                    std::pair{dup->u, dup->v});
  }

  // n - 1 distinct edges: acyclic <=> connected.
  DisjointSets sets(n);
  for (const auto& e : normalized) {
    if (!sets.unite(e.u, e.v)) {
      throw TreeError(Kind::kDisconnected,
                      "edge " + edge_str(e.u, e.v) + " closes a cycle, so the graph is disconnected",
                      std::pair{e.u, e.v});
    }
  }

  std::vector<int> degrees(n, 0);
  for (const auto& e : normalized) {
    ++degrees[e.u - 1];
    ++degrees[e.v - 1];
  }
  return LabeledTree(n, std::move(normalized), std::move(degrees));
}

LinearArrangement::LinearArrangement(std::vector<Position> positions)
    : positions_(std::move(positions)), vertices_(positions_.size(), 0) {
  const int n = static_cast<int>(positions_.size());
  for (int i = 0; i < n; ++i) {
    const Position p = positions_[i];
    if (p < 1 || p > n) {
      std::ostringstream os;
      os << "position " << p << " of vertex " << i + 1 << " is outside 1.." << n;
      throw ArrangementError(os.str());
    }
    if (vertices_[p - 1] != 0) {
      std::ostringstream os;
      os << "position " << p << " is assigned to both vertex " << vertices_[p - 1]
         << " and vertex " << i + 1;
      throw ArrangementError(os.str());
    }
    vertices_[p - 1] = i + 1;
  }
}

LinearArrangement LinearArrangement::identity(int n) {
  std::vector<Position> positions(n);
  std::iota(positions.begin(), positions.end(), 1);
  return LinearArrangement(std::move(positions));
}

LinearArrangement LinearArrangement::reversed() const {
  const int n = size();
  std::vector<Position> positions(positions_);
  for (auto& p : positions) p = n + 1 - p;
  return LinearArrangement(std::move(positions));
}

void check_same_size(const LabeledTree& tree, const LinearArrangement& arr) {
  if (tree.size() != arr.size()) {
    std::ostringstream os;
    os << "arrangement has " << arr.size() << " positions but the tree has " << tree.size()
       << " vertices";
    throw std::invalid_argument(os.str());
  }
}

EdgeSpan edge_span(const LabeledTree& tree, const LinearArrangement& arr, const Edge& edge) {
  check_same_size(tree, arr);
  if (!tree.has_edge(edge)) {
    throw std::invalid_argument("edge " + edge_str(edge.u, edge.v) + " is not in the tree");
  }
  return span_of(arr, edge);
}

std::int64_t total_length(const LabeledTree& tree, const LinearArrangement& arr) {
  check_same_size(tree, arr);
  std::int64_t d = 0;
  for (const auto& e : tree.edges()) d += span_of(arr, e).length();
  return d;
}

std::int64_t sum_squared_degrees(const LabeledTree& tree) {
  std::int64_t s = 0;
  for (int k : tree.degrees()) s += static_cast<std::int64_t>(k) * k;
  return s;
}

double degree_second_moment(const LabeledTree& tree) {
  return static_cast<double>(sum_squared_degrees(tree)) / tree.size();
}

std::int64_t c_max(const LabeledTree& tree) {
  const double n = tree.size();
  const double value = n / 2.0 * (n - 1.0 - degree_second_moment(tree));
  const double rounded = std::round(value);
  if (std::abs(value - rounded) > 1e-9 * std::max(1.0, std::abs(value))) {
    throw std::logic_error("C_max is not an integer; degree sequence is inconsistent");
  }
  return static_cast<std::int64_t>(rounded);
}

std::int64_t disjoint_edge_pairs(const LabeledTree& tree) {
  const auto& edges = tree.edges();
  std::int64_t count = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (!edges[i].shares_vertex_with(edges[j])) ++count;
    }
  }
  return count;
}

}  // namespace linarr

#include "linarr/predictors.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "linarr/crossings.hpp"

namespace linarr {

namespace {

void check_lengths(int n, int d1, int d2) {
  if (d1 < 1 || d1 > n - 1 || d2 < 1 || d2 > n - 1) {
    std::ostringstream os;
    os << "edge lengths (" << d1 << "," << d2 << ") outside 1.." << n - 1;
    throw std::out_of_range(os.str());
  }
}

// Visits every valid (s1, s2) and reports whether the two edges cross.
template <typename Visit>
void for_each_valid_start_pair(int n, int d1, int d2, Visit&& visit) {
  for (int s1 = 1; s1 <= n - d1; ++s1) {
    const int e1 = s1 + d1;
    for (int s2 = 1; s2 <= n - d2; ++s2) {
      const int e2 = s2 + d2;
      if (s1 == s2 || s1 == e2 || e1 == s2 || e1 == e2) continue;
      visit((s1 < s2 && s2 < e1 && e1 < e2) || (s1 > s2 && s1 < e2 && e2 < e1));
    }
  }
}

}  // namespace

std::int64_t beta_pairs(int n, int d1, int d2) {
  check_lengths(n, d1, d2);
  std::int64_t count = 0;
  for_each_valid_start_pair(n, d1, d2, [&](bool) { ++count; });
  return count;
}

std::int64_t alpha_pairs(int n, int d1, int d2) {
  check_lengths(n, d1, d2);
  std::int64_t count = 0;
  for_each_valid_start_pair(n, d1, d2, [&](bool crosses) { count += crosses ? 1 : 0; });
  return count;
}

Rational p_cross_given_lengths(int n, int d1, int d2) {
  const std::int64_t beta = beta_pairs(n, d1, d2);
  if (beta == 0) return Rational(0);
  return Rational(alpha_pairs(n, d1, d2)) / Rational(beta);
}

PCrossTable::PCrossTable(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("p(cross | d1, d2) tables need n >= 2");
  const auto cells = static_cast<std::size_t>(n - 1) * (n - 1);
  alpha_.assign(cells, 0);
  beta_.assign(cells, 0);
  p_.assign(cells, 0.0);
  for (int d1 = 1; d1 < n; ++d1) {
    for (int d2 = 1; d2 < n; ++d2) {
      std::int64_t alpha = 0;
      std::int64_t beta = 0;
      for_each_valid_start_pair(n, d1, d2, [&](bool crosses) {
        ++beta;
        alpha += crosses ? 1 : 0;
      });
      const std::size_t i = index(d1, d2);
      alpha_[i] = alpha;
      beta_[i] = beta;
      p_[i] = beta == 0 ? 0.0 : static_cast<double>(alpha) / static_cast<double>(beta);
    }
  }
}

Rational PCrossTable::exact(int d1, int d2) const {
  const std::size_t i = index(d1, d2);
  if (beta_[i] == 0) return Rational(0);
  return Rational(alpha_[i]) / Rational(beta_[i]);
}

std::shared_ptr<const PCrossTable> build_p_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const PCrossTable>> cache;

  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto table = std::make_shared<const PCrossTable>(n);
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(table)).first->second;
}

double e0(const LabeledTree& tree) { return static_cast<double>(c_max(tree)) / 3.0; }

double e2(const LabeledTree& tree, const LinearArrangement& arr, const PCrossTable& table) {
  check_same_size(tree, arr);
  const auto& edges = tree.edges();
  if (edges.empty()) return 0.0;
  if (table.n() != tree.size()) {
    std::ostringstream os;
    os << "p(cross) table built for n=" << table.n() << " used with a tree of n=" << tree.size();
    throw std::invalid_argument(os.str());
  }

  std::vector<int> lengths;
  lengths.reserve(edges.size());
  for (const auto& e : edges) lengths.push_back(span_of(arr, e).length());

  double sum = 0.0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i].shares_vertex_with(edges[j])) continue;
      sum += table.probability(lengths[i], lengths[j]);
    }
  }
  return sum;
}

double e2(const LabeledTree& tree, const LinearArrangement& arr) {
  if (tree.size() < 2) return 0.0;
  return e2(tree, arr, *build_p_table(tree.size()));
}

namespace {

// Enumerates all bijections that keep every edge length, by placing
// vertices in BFS order at parent position +/- edge length.
class LengthPreservingSearch {
 public:
  LengthPreservingSearch(const LabeledTree& tree, const LinearArrangement& arr)
      : n_(tree.size()), edges_(tree.edges()) {
    std::vector<std::vector<std::pair<Vertex, int>>> adjacency(n_ + 1);
    for (const auto& e : edges_) {
      const int d = span_of(arr, e).length();
      adjacency[e.u].emplace_back(e.v, d);
      adjacency[e.v].emplace_back(e.u, d);
    }
    std::vector<bool> seen(n_ + 1, false);
    order_.push_back({1, 0, 0});
    seen[1] = true;
    for (std::size_t head = 0; head < order_.size(); ++head) {
      const Vertex v = order_[head].vertex;
      for (const auto& [w, d] : adjacency[v]) {
        if (seen[w]) continue;
        seen[w] = true;
        order_.push_back({w, v, d});
      }
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      for (std::size_t j = i + 1; j < edges_.size(); ++j) {
        if (!edges_[i].shares_vertex_with(edges_[j])) pairs_.push_back({i, j, 0});
      }
    }
  }

  FullKnowledge run() {
    position_.assign(n_ + 1, 0);
    occupied_.assign(n_ + 1, false);
    for (Position p = 1; p <= n_; ++p) {
      place(0, p);
    }
    FullKnowledge result;
    result.class_size = class_size_;
    result.expected = class_size_ == 0 ? Rational(0) : Rational(total_) / Rational(class_size_);
    result.pairs = std::move(pairs_);
    return result;
  }

 private:
  struct Step {
    Vertex vertex;
    Vertex parent;
    int length;
  };

  void place(std::size_t step, Position p) {
    const Vertex v = order_[step].vertex;
    position_[v] = p;
    occupied_[p] = true;
    if (step + 1 == order_.size()) {
      record();
    } else {
      const Step& next = order_[step + 1];
      const Position base = position_[next.parent];
      for (Position q : {base - next.length, base + next.length}) {
        if (q >= 1 && q <= n_ && !occupied_[q]) place(step + 1, q);
      }
    }
    occupied_[p] = false;
  }

  void record() {
    ++class_size_;
    for (auto& pair : pairs_) {
      const Edge& a = edges_[pair.first];
      const Edge& b = edges_[pair.second];
      const auto sa = position_[a.u] < position_[a.v] ? EdgeSpan{position_[a.u], position_[a.v]}
                                                      : EdgeSpan{position_[a.v], position_[a.u]};
      const auto sb = position_[b.u] < position_[b.v] ? EdgeSpan{position_[b.u], position_[b.v]}
                                                      : EdgeSpan{position_[b.v], position_[b.u]};
      if (edges_cross(sa, sb)) {
        ++pair.crossings;
        ++total_;
      }
    }
  }

  int n_;
  const std::vector<Edge>& edges_;
  std::vector<Step> order_;
  std::vector<PairCrossings> pairs_;
  std::vector<Position> position_;
  std::vector<bool> occupied_;
  std::int64_t class_size_ = 0;
  std::int64_t total_ = 0;
};

}  // namespace

FullKnowledge e_full(const LabeledTree& tree, const LinearArrangement& arr, int cap) {
  check_same_size(tree, arr);
  if (tree.size() > cap) {
    std::ostringstream os;
    os << "E[C|d] by enumeration refused for n=" << tree.size() << " (cap " << cap << ")";
    throw BruteForceCapExceeded(os.str());
  }
  return LengthPreservingSearch(tree, arr).run();
}

Rational LengthMatrix::sum() const {
  Rational total(0);
  for (const auto& c : cells_) total += c;
  return total;
}

LengthMatrix joint_length_distribution(int n) {
  if (n < 4) throw std::invalid_argument("joint length distribution needs n >= 4");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n - 1) * (n - 1), 0);
  std::int64_t placements = 0;
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (b == a) continue;
      for (int c = 1; c <= n; ++c) {
        if (c == a || c == b) continue;
        for (int d = 1; d <= n; ++d) {
          if (d == a || d == b || d == c) continue;
          const int d1 = a < b ? b - a : a - b;
          const int d2 = c < d ? d - c : c - d;
          ++counts[static_cast<std::size_t>(d1 - 1) * (n - 1) + (d2 - 1)];
          ++placements;
        }
      }
    }
  }
  LengthMatrix matrix(n);
  for (int d1 = 1; d1 < n; ++d1) {
    for (int d2 = 1; d2 < n; ++d2) {
      matrix.at(d1, d2) =
          Rational(counts[static_cast<std::size_t>(d1 - 1) * (n - 1) + (d2 - 1)]) /
          Rational(placements);
    }
  }
  return matrix;
}

Rational verify_identity(int n) {
  if (n < 4) throw std::invalid_argument("the crossing identity needs n >= 4");
  const LengthMatrix joint = joint_length_distribution(n);
  const auto table = build_p_table(n);
  Rational total(0);
  for (int d1 = 1; d1 < n; ++d1) {
    for (int d2 = 1; d2 < n; ++d2) total += table->exact(d1, d2) * joint.at(d1, d2);
  }
  return total;
}

double expected_k2_random_tree(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const double x = n;
  return (1.0 - 1.0 / x) * (5.0 - 6.0 / x);
}

double expected_e0_random_tree(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const double x = n;
  return x * x / 6.0 - x + 11.0 / 6.0 - 1.0 / x;
}

PredictionReport predict(const LabeledTree& tree, const LinearArrangement& arr) {
  PredictionReport report;
  report.c_max = c_max(tree);
  report.k2 = degree_second_moment(tree);
  report.e0 = e0(tree);
  report.e2 = e2(tree, arr);
  if (report.c_max > 0) {
    const double cm = static_cast<double>(report.c_max);
    report.e0_rel = report.e0 / cm;
    report.e2_rel = report.e2 / cm;
  }
  return report;
}

}  // namespace linarr

#ifndef LINARR_PREDICTORS_HPP
#define LINARR_PREDICTORS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "linarr/tree.hpp"

namespace linarr {

using Rational = boost::multiprecision::cpp_rational;

/// Default largest n accepted by e_full.
inline constexpr int kDefaultBruteForceCap = 9;

class BruteForceCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Counts over ordered pairs (s1, s2) of start positions for two edges of
// lengths d1 and d2 in a sequence of n positions. A pair is valid when both
// edges fit and the four endpoints are distinct. All of these throw
// std::out_of_range unless 1 <= d1, d2 <= n - 1.

/// |beta(d1, d2)|: valid pairs of start positions.
std::int64_t beta_pairs(int n, int d1, int d2);

/// |alpha(d1, d2)|: valid pairs whose edges cross.
std::int64_t alpha_pairs(int n, int d1, int d2);

/// p(cross | d1, d2) = |alpha| / |beta|, or 0 when |beta| = 0.
Rational p_cross_given_lengths(int n, int d1, int d2);

/// Exact p(cross | d1, d2) for every pair of lengths at a fixed n.
class PCrossTable {
 public:
  explicit PCrossTable(int n);

  int n() const { return n_; }
  std::int64_t alpha(int d1, int d2) const { return alpha_[index(d1, d2)]; }
  std::int64_t beta(int d1, int d2) const { return beta_[index(d1, d2)]; }
  Rational exact(int d1, int d2) const;
  /// Floating-point view of exact(d1, d2).
  double probability(int d1, int d2) const { return p_[index(d1, d2)]; }

 private:
  std::size_t index(int d1, int d2) const {
    if (d1 < 1 || d1 >= n_ || d2 < 1 || d2 >= n_) {
      throw std::out_of_range("edge length outside 1..n-1");
    }
    return static_cast<std::size_t>(d1 - 1) * (n_ - 1) + (d2 - 1);
  }

  int n_;
  std::vector<std::int64_t> alpha_;
  std::vector<std::int64_t> beta_;
  std::vector<double> p_;
};

/// Shared, memoized table for n (n >= 2). Thread-safe.
std::shared_ptr<const PCrossTable> build_p_table(int n);

/// E0[C] = C_max / 3.
double e0(const LabeledTree& tree);

/// E2[C]: sum over vertex-disjoint edge pairs of p(cross | d1, d2).
/// Throws std::invalid_argument if table.n() != tree.size().
double e2(const LabeledTree& tree, const LinearArrangement& arr, const PCrossTable& table);

/// Convenience overload using the memoized table.
double e2(const LabeledTree& tree, const LinearArrangement& arr);

struct PairCrossings {
  std::size_t first = 0;   // index into tree.edges()
  std::size_t second = 0;  // index into tree.edges()
  std::int64_t crossings = 0;  // members of the class where the pair crosses
};

struct FullKnowledge {
  /// E[C | d], exact.
  Rational expected;
  /// Number of arrangements preserving every edge length.
  std::int64_t class_size = 0;
  /// One entry per vertex-disjoint edge pair.
  std::vector<PairCrossings> pairs;

  double value() const { return expected.convert_to<double>(); }
};

/// E[C | d]: mean C over every arrangement that gives each tree edge the
/// same length as under arr. Exhaustive; refuses n > cap.
FullKnowledge e_full(const LabeledTree& tree, const LinearArrangement& arr,
                     int cap = kDefaultBruteForceCap);

/// Square matrix over lengths 1..n-1 with exact entries.
class LengthMatrix {
 public:
  explicit LengthMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n - 1) * (n - 1)) {}

  int n() const { return n_; }
  const Rational& at(int d1, int d2) const { return cells_[index(d1, d2)]; }
  Rational& at(int d1, int d2) { return cells_[index(d1, d2)]; }
  Rational sum() const;

 private:
  std::size_t index(int d1, int d2) const {
    if (d1 < 1 || d1 >= n_ || d2 < 1 || d2 >= n_) {
      throw std::out_of_range("edge length outside 1..n-1");
    }
    return static_cast<std::size_t>(d1 - 1) * (n_ - 1) + (d2 - 1);
  }

  int n_;
  std::vector<Rational> cells_;
};

/// p(d1, d2) for two vertex-disjoint edges whose four endpoints are placed
/// uniformly at random on n positions. Throws std::invalid_argument if n < 4.
LengthMatrix joint_length_distribution(int n);

/// sum_{d1,d2} p(cross | d1, d2) p(d1, d2); equals 1/3 for every n >= 4.
/// Throws std::invalid_argument if n < 4.
Rational verify_identity(int n);

/// Expected <k^2> of a uniformly random labeled tree: (1 - 1/n)(5 - 6/n).
double expected_k2_random_tree(int n);

/// Expected E0[C] of a uniformly random labeled tree: n^2/6 - n + 11/6 - 1/n.
double expected_e0_random_tree(int n);

struct PredictionReport {
  double e0 = 0.0;
  double e2 = 0.0;
  std::optional<double> e0_rel;
  std::optional<double> e2_rel;
  std::int64_t c_max = 0;
  double k2 = 0.0;
};

PredictionReport predict(const LabeledTree& tree, const LinearArrangement& arr);

}  // namespace linarr

#endif  // LINARR_PREDICTORS_HPP

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>

#include <boost/math/distributions/chi_squared.hpp>

#include "linarr/linarr.hpp"
#include "oracles.hpp"

using namespace linarr;

namespace {

const std::filesystem::path kData = LINARR_DATA_DIR;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!passed) detail << "; ";
      else detail.str("");
      passed = false;
      detail << what;
    }
  }
};

bool rounds_to(double value, double shown) {
  return std::abs(round_significant(value) - shown) <= 1e-12 * std::max(1.0, std::abs(shown));
}

void table_reproduction(Outcome& out) {
  const auto a = analyze_fixture(kData / "in_situ.edges", kData / "in_situ.arr");
  const auto b = analyze_fixture(kData / "extraposed.edges", kData / "extraposed.arr");
  for (const auto* r : {&a, &b}) {
    out.require(r->tree.size() == 7, "n != 7");
    out.require(rounds_to(r->prediction.k2, 3.4), "<k^2> does not round to 3.4");
    out.require(r->prediction.c_max == 9, "C_max != 9");
    out.require(r->prediction.e0 == 3.0, "E0 != 3");
    out.require(r->prediction.e0_rel && rounds_to(*r->prediction.e0_rel, 0.33), "E0 rel does not round to 0.33");
  }
  out.require(a.crossings.total == 0, "in-situ C != 0");
  out.require(rounds_to(a.prediction.e2, 0.57), "in-situ E2 does not round to 0.57");
  out.require(a.prediction.e2_rel && rounds_to(*a.prediction.e2_rel, 0.063), "in-situ E2 rel does not round to 0.063");
  out.require(b.crossings.total == 1, "extraposed C != 1");
  out.require(b.crossings.relative && rounds_to(*b.crossings.relative, 0.11), "extraposed C rel does not round to 0.11");
  out.require(rounds_to(b.prediction.e2, 1.5), "extraposed E2 does not round to 1.5");
  out.require(b.prediction.e2_rel && rounds_to(*b.prediction.e2_rel, 0.17), "extraposed E2 rel does not round to 0.17");
  if (out.passed) {
    out.detail << "C_max=9 E0=3 | in situ C=0 E2=" << format_double(round_significant(a.prediction.e2))
               << " | extraposed C=1 E2=" << format_double(b.prediction.e2);
  }
}

void point_value(Outcome& out) {
  const Rational p = p_cross_given_lengths(6, 2, 2);
  out.require(p == Rational(3) / Rational(4), "p(cross|2,2) at n=6 is " + format_rational(p));
  if (out.passed) out.detail << "p(cross|2,2) = " << format_rational(p);
}

void identity(Outcome& out) {
  for (int n = 4; n <= 12; ++n) {
    const Rational s = verify_identity(n);
    out.require(s == Rational(1) / Rational(3), "n=" + std::to_string(n) + " gives " + format_rational(s));
  }
  if (out.passed) out.detail << "sum = 1/3 exactly for n = 4..12";
}

void boundary_laws(Outcome& out) {
  for (int n = 4; n <= 50; ++n) {
    const auto table = build_p_table(n);
    const std::string at = " at n=" + std::to_string(n);
    for (int d = 1; d < n; ++d) {
      out.require(table->alpha(1, d) == 0, "p(cross|1,d) != 0" + at);
      out.require(table->alpha(n - 1, d) == 0, "p(cross|n-1,d) != 0" + at);
      for (int e = 1; e < n; ++e) {
        out.require(table->alpha(d, e) == table->alpha(e, d) && table->beta(d, e) == table->beta(e, d),
                    "asymmetric" + at);
      }
    }
    out.require(table->exact(n - 2, n - 2) == Rational(1), "p(cross|n-2,n-2) != 1" + at);
  }
  if (out.passed) out.detail << "n = 4..50";
}

void oracle_equivalence(Outcome& out) {
  int cells = 0;
  for (int n = 2; n <= 7; ++n) {
    for (int d1 = 1; d1 < n; ++d1) {
      for (int d2 = 1; d2 < n; ++d2) {
        const auto counts = oracle::placements(n, d1, d2);
        out.require(4 * beta_pairs(n, d1, d2) == counts.valid && 4 * alpha_pairs(n, d1, d2) == counts.crossing,
                    "alpha/beta mismatch at n=" + std::to_string(n));
        ++cells;
      }
    }
  }
  Rng rng(5);
  const int trees = 2000;
  for (int i = 0; i < trees; ++i) {
    const auto t = aldous_broder(rng.uniform(1, 10), rng);
    const auto edges = oracle::edge_pairs(t);
    std::int64_t disjoint = 0;
    for (std::size_t x = 0; x < edges.size(); ++x) {
      for (std::size_t y = x + 1; y < edges.size(); ++y) {
        const auto [a, b] = edges[x];
        const auto [c, d] = edges[y];
        disjoint += (a != c && a != d && b != c && b != d) ? 1 : 0;
      }
    }
    out.require(c_max(t) == disjoint && disjoint_edge_pairs(t) == disjoint, "C_max != disjoint pairs");
  }
  if (out.passed) out.detail << cells << " (n,d1,d2) cells, " << trees << " random trees";
}

void closed_forms(Outcome& out) {
  Rational total = 0;
  std::int64_t count = 0;
  for_each_labeled_tree(4, [&](const LabeledTree& t) {
    total += Rational(c_max(t)) / Rational(3);
    ++count;
  });
  const Rational mean = total / Rational(count);
  out.require(count == 16, "expected 16 trees on 4 vertices");
  out.require(mean == Rational(1) / Rational(4), "exhaustive mean E0 at n=4 is " + format_rational(mean));
  out.require(std::abs(expected_e0_random_tree(4) - 0.25) < 1e-12, "closed form at n=4 != 1/4");

  SelfCheckOptions options;
  options.n_max = 4;
  options.samples = 10000;
  options.seed = 1;
  options.monte_carlo_sizes = {5, 10, 20};
  for (const auto& check : run_self_checks(options)) {
    if (check.name.find(" n=4") == std::string::npos) out.require(check.passed, check.name + ": " + check.detail);
  }
  if (out.passed) out.detail << "exhaustive n=4 mean E0 = 1/4; 3-SE checks at n = 5, 10, 20";
}

void uniformity(Outcome& out) {
  std::map<std::vector<Edge>, std::int64_t> counts;
  for_each_labeled_tree(4, [&](const LabeledTree& t) { counts[t.edges()] = 0; });
  const std::int64_t samples = 16000;
  Rng rng(2024);
  for (std::int64_t i = 0; i < samples; ++i) ++counts.at(aldous_broder(4, rng).edges());
  const double expected = static_cast<double>(samples) / static_cast<double>(counts.size());
  double stat = 0.0;
  for (const auto& [_, c] : counts) stat += (c - expected) * (c - expected) / expected;
  const boost::math::chi_squared dist(static_cast<double>(counts.size() - 1));
  const double critical = boost::math::quantile(boost::math::complement(dist, 0.001));
  out.require(counts.size() == 16, "expected 16 categories");
  out.require(stat < critical, "chi-square " + format_double(stat) + " >= " + format_double(critical));
  out.detail << "chi2 = " << format_double(round_significant(stat, 4)) << " < " << format_double(round_significant(critical, 4));
}

void monte_carlo_bridge(Outcome& out) {
  Rng tree_rng(8);
  const int samples = 100000;
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const auto t = aldous_broder(10, tree_rng);
    Rng rng = Rng::derive(8, static_cast<std::uint64_t>(i) + 1);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int s = 0; s < samples; ++s) {
      const double c = static_cast<double>(crossing_total(t, random_arrangement(10, rng)));
      sum += c;
      sum_sq += c * c;
    }
    const double mean = sum / samples;
    const double se = std::sqrt((sum_sq / samples - mean * mean) / (samples - 1));
    const double z = se > 0 ? std::abs(mean - e0(t)) / se : (mean == e0(t) ? 0.0 : INFINITY);
    worst = std::max(worst, z);
    out.require(z <= 3.0, "tree " + std::to_string(i) + " is " + format_double(z) + " SE from E0");
  }
  if (out.passed) out.detail << "10 trees, worst |mean - E0| = " << format_double(round_significant(worst, 3)) << " SE";
}

void ensemble(Outcome& out) {
  EnsembleConfig config;
  config.n_min = 4;
  config.n_max = 14;
  config.replicas = 1000;
  config.c_true_values = {0, 1, 2, 3};
  config.seed = 1;
  config.workers = std::max(1u, std::thread::hardware_concurrency());
  const auto result = run_ensemble(config);
  out.require(!result.partial, "ensemble incomplete");

  std::map<int, std::pair<double, int>> delta0_by_n;
  double worst_abs_delta2 = 0.0;
  double lowest_band = INFINITY;
  for (const auto& cell : result.cells) {
    const std::string where = " at n=" + std::to_string(cell.n) + ", C=" + std::to_string(cell.c_true);
    if (cell.samples_used == 0) continue;
    if (cell.n >= 10) {
      out.require(cell.mean_delta0 >= 0.20 && cell.mean_delta0 <= 0.34,
                  "mean delta0 " + format_double(cell.mean_delta0) + where);
      if (cell.c_true > 0) {
        auto& [sum, k] = delta0_by_n[cell.n];
        sum += cell.mean_delta0;
        ++k;
      }
    }
    worst_abs_delta2 = std::max(worst_abs_delta2, std::abs(cell.mean_delta2));
    lowest_band = std::min(lowest_band, cell.mean_delta2 - cell.sd_delta2);
    out.require(std::abs(cell.mean_delta2) <= 0.10, "|mean delta2| " + format_double(cell.mean_delta2) + where);
    out.require(cell.mean_delta2 - cell.sd_delta2 > -0.10,
                "mean - sd of delta2 " + format_double(cell.mean_delta2 - cell.sd_delta2) + where);
  }
  double previous = -INFINITY;
  for (const auto& [n, acc] : delta0_by_n) {
    const double mean = acc.first / acc.second;
    out.require(mean >= previous, "mean delta0 decreases at n=" + std::to_string(n));
    previous = mean;
  }
  if (out.passed) {
    out.detail << result.cells.size() << " cells; max |mean delta2| = "
               << format_double(round_significant(worst_abs_delta2, 3)) << "; min (mean - sd) of delta2 = "
               << format_double(round_significant(lowest_band, 3));
  }
}

void counterexample(Outcome& out) {
  const auto tree = read_edge_list_file(kData / "length_blind.edges");
  const auto full = e_full(tree, LinearArrangement::identity(6));
  const auto& edges = tree.edges();
  bool found = false;
  for (const auto& pair : full.pairs) {
    if (edges[pair.first] == Edge(1, 3) && edges[pair.second] == Edge(4, 6)) {
      found = true;
      out.require(pair.crossings == 0, "the pair crosses in " + std::to_string(pair.crossings) + " permutations");
    }
  }
  out.require(found, "pair 1~3, 4~6 not reported");
  out.require(p_cross_given_lengths(6, 2, 2) == Rational(3) / Rational(4), "p(cross|2,2) != 3/4");
  if (out.passed) {
    out.detail << "crossing in 0 of " << full.class_size << " length-preserving permutations; p = 3/4";
  }
}

void determinism(Outcome& out) {
  EnsembleConfig config;
  config.n_min = 4;
  config.n_max = 10;
  config.replicas = 100;
  config.seed = 20240611;
  std::string reference;
  for (unsigned workers : {1u, 3u, 8u}) {
    config.workers = workers;
    std::ostringstream csv;
    write_ensemble_csv(csv, run_ensemble(config));
    if (reference.empty()) reference = csv.str();
    out.require(csv.str() == reference, "CSV differs with " + std::to_string(workers) + " workers");
  }
  if (out.passed) out.detail << "identical CSV for 1, 3 and 8 workers";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"table reproduction", table_reproduction},
      {"conditional probability point value", point_value},
      {"exact identity sum = 1/3", identity},
      {"p-table boundary laws", boundary_laws},
      {"oracle equivalence", oracle_equivalence},
      {"closed forms on random trees", closed_forms},
      {"sampler uniformity", uniformity},
      {"monte-carlo bridge", monte_carlo_bridge},
      {"ensemble relative errors", ensemble},
      {"length-blind counterexample", counterexample},
      {"determinism across workers", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    failures += out.passed ? 0 : 1;
    std::printf("%s %2zu %s (%.2fs): %s\n", out.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                elapsed.count(), out.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

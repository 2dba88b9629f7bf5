// linarr: crossings and crossing predictors for linear arrangements of trees.
//
// Exit codes: 0 success, 1 check failure or incomplete experiment, 2 input error.

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "linarr/linarr.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

// The invocation echoed into every output. --workers is dropped because it
// never changes the output.
std::string canonical_invocation(int argc, char** argv) {
  std::ostringstream os;
  os << "linarr";
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--workers") {
      ++i;
      continue;
    }
    if (arg.rfind("--workers=", 0) == 0) continue;
    os << " " << arg;
  }
  return os.str();
}

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Owns the output stream selected by --output.
class Output {
 public:
  explicit Output(const std::string& target) {
    if (target != "-") {
      file_.open(target);
      if (!file_) throw std::runtime_error("cannot open output file " + target);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct CommonOptions {
  std::uint64_t seed = 1;
  unsigned workers = 0;
  std::string output = "-";
};

void add_common(CLI::App* app, CommonOptions& common) {
  app->add_option("--seed", common.seed, "Master random seed")->capture_default_str();
  app->add_option("--workers", common.workers, "Worker threads (0 = all cores)")
      ->capture_default_str();
  app->add_option("--output", common.output, "Output path, or - for stdout")
      ->capture_default_str();
}

int cmd_analyze(const std::string& invocation, const CommonOptions& common,
                const std::string& tree_file, const std::optional<std::string>& arrangement_file,
                const std::string& format) {
  using json = nlohmann::ordered_json;
  json out = {{"invocation", invocation}, {"seed", common.seed}};
  if (format == "conllu") {
    const auto corpus = linarr::read_conllu_file(tree_file);
    json sentences = json::array();
    for (const auto& s : corpus.sentences) {
      json entry = {{"first_line", s.first_line}};
      entry.update(linarr::report_to_json(linarr::analyze(s.tree, s.arrangement)));
      sentences.push_back(std::move(entry));
    }
    out["format"] = "conllu";
    out["sentences"] = std::move(sentences);
    out["skipped"] = corpus.skipped;
    out["warnings"] = corpus.warnings;
    for (const auto& w : corpus.warnings) std::cerr << "warning: " << w << "\n";
  } else {
    std::optional<std::filesystem::path> arrangement;
    if (arrangement_file) arrangement = *arrangement_file;
    out["format"] = "edgelist";
    out.update(linarr::report_to_json(linarr::analyze_fixture(tree_file, arrangement)));
  }
  Output sink(common.output);
  sink.stream() << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_ptable(const std::string& invocation, const CommonOptions& common, int n) {
  const auto table = linarr::build_p_table(n);
  Output sink(common.output);
  sink.stream() << "# " << invocation << "\n";
  linarr::write_ptable_csv(sink.stream(), *table);
  return kExitOk;
}

int cmd_random(const std::string& invocation, const CommonOptions& common, int n,
               std::int64_t count, std::optional<std::int64_t> max_crossings,
               std::int64_t max_attempts) {
  const unsigned workers = resolve_workers(common.workers);
  std::vector<std::optional<linarr::ConditionedSample>> samples(count);
  std::vector<std::string> failures(count);

  auto draw = [&](std::int64_t i) {
    linarr::Rng rng = linarr::Rng::derive(common.seed, static_cast<std::uint64_t>(i));
    linarr::SamplerConfig config{n, common.seed, max_crossings, max_attempts};
    try {
      samples[i] = linarr::sample_conditioned(config, rng);
    } catch (const linarr::SamplerExhausted& e) {
      failures[i] = e.what();
    }
  };
  std::vector<std::future<void>> tasks;
  for (unsigned w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::int64_t i = w; i < count; i += workers) draw(i);
    }));
  }
  for (auto& t : tasks) t.get();

  Output sink(common.output);
  auto& out = sink.stream();
  out << "# " << invocation << "\n";
  int status = kExitOk;
  for (std::int64_t i = 0; i < count; ++i) {
    if (!samples[i]) {
      std::cerr << "error: tree " << i << ": " << failures[i] << "\n";
      status = kExitCheckFailed;
      continue;
    }
    out << "\n";
    linarr::write_edge_list(out, samples[i]->tree,
                            {"seed " + std::to_string(common.seed) + " stream " +
                                 std::to_string(i),
                             "attempts " + std::to_string(samples[i]->attempts),
                             "crossings " + std::to_string(samples[i]->crossings)});
  }
  return status;
}

int cmd_experiment(const std::string& invocation, const CommonOptions& common,
                   linarr::EnsembleConfig config) {
  config.seed = common.seed;
  config.workers = resolve_workers(common.workers);
  const auto result = linarr::run_ensemble(config);

  Output sink(common.output);
  auto& out = sink.stream();
  out << "# " << invocation << "\n";
  linarr::write_ensemble_csv(out, result);
  int status = kExitOk;
  for (const auto& s : result.per_n) {
    if (s.exhausted) {
      out << "# partial: n=" << s.n << " stopped after " << s.attempts << " attempts\n";
      std::cerr << "warning: n=" << s.n << " hit the attempt limit; results are partial\n";
      status = kExitCheckFailed;
    }
  }
  return status;
}

int cmd_verify(const std::string& invocation, const CommonOptions& common, int n_max,
               std::int64_t samples) {
  linarr::SelfCheckOptions options;
  options.n_max = n_max;
  options.samples = samples;
  options.seed = common.seed;
  const auto results = linarr::run_self_checks(options);

  Output sink(common.output);
  auto& out = sink.stream();
  out << "# " << invocation << "\n";
  bool ok = true;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    ok = ok && r.passed;
  }
  return ok ? kExitOk : kExitCheckFailed;
}

std::vector<std::int64_t> parse_c_true(const std::string& text) {
  std::vector<std::int64_t> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const long long v = std::stoll(item, &used);
    if (used != item.size() || v < 0) throw CLI::ValidationError("--c-true", "bad value " + item);
    values.push_back(v);
  }
  if (values.empty()) throw CLI::ValidationError("--c-true", "no values given");
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge crossings and crossing predictors for linear arrangements of trees"};
  app.require_subcommand(1);

  CommonOptions common;

  auto* analyze = app.add_subcommand("analyze", "Crossings and predictions for one input");
  std::string tree_file;
  std::optional<std::string> arrangement_file;
  std::string format = "edgelist";
  analyze->add_option("tree", tree_file, "Edge-list or CoNLL-U file")->required();
  analyze->add_option("--arrangement", arrangement_file, "Arrangement file (default identity)");
  analyze->add_option("--format", format, "Input format")
      ->check(CLI::IsMember({"edgelist", "conllu"}))
      ->capture_default_str();
  add_common(analyze, common);

  auto* ptable = app.add_subcommand("ptable", "Exact p(cross | d1, d2) table as CSV");
  int table_n = 0;
  ptable->add_option("--n", table_n, "Number of vertices")->required()->check(CLI::Range(2, 100000));
  add_common(ptable, common);

  auto* random = app.add_subcommand("random", "Uniform random labeled trees as edge lists");
  int random_n = 0;
  std::int64_t random_count = 1;
  std::optional<std::int64_t> max_crossings;
  std::int64_t max_attempts = 10'000'000;
  random->add_option("--n", random_n, "Number of vertices")->required()->check(CLI::PositiveNumber);
  random->add_option("--count", random_count, "Number of trees")->check(CLI::PositiveNumber)
      ->capture_default_str();
  random->add_option("--max-crossings", max_crossings,
                     "Reject trees with more crossings (labels as positions)");
  random->add_option("--max-attempts", max_attempts, "Draws allowed per accepted tree")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(random, common);

  auto* experiment = app.add_subcommand("experiment", "Relative prediction error ensembles (CSV)");
  linarr::EnsembleConfig ensemble;
  std::string c_true_text = "0,1,2,3";
  std::string quota_mode = "per-cell";
  experiment->add_option("--n-min", ensemble.n_min)->check(CLI::Range(4, 1000))->capture_default_str();
  experiment->add_option("--n-max", ensemble.n_max)->check(CLI::Range(4, 1000))->capture_default_str();
  experiment->add_option("--replicas", ensemble.replicas, "Trees per cell")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  experiment->add_option("--c-true", c_true_text, "Comma-separated C_true values")
      ->capture_default_str();
  experiment->add_option("--quota-mode", quota_mode)
      ->check(CLI::IsMember({"per-cell", "post-hoc"}))
      ->capture_default_str();
  experiment->add_option("--max-attempts", ensemble.max_attempts_per_n,
                         "Tree draws allowed per vertex count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(experiment, common);

  auto* verify = app.add_subcommand("verify", "Exact and Monte-Carlo self checks");
  int verify_n_max = 12;
  std::int64_t verify_samples = 10'000;
  verify->add_option("--n-max", verify_n_max)->check(CLI::Range(4, 200))->capture_default_str();
  verify->add_option("--samples", verify_samples, "Random trees per Monte-Carlo check")
      ->check(CLI::Range(2, 100'000'000))
      ->capture_default_str();
  add_common(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  const std::string invocation = canonical_invocation(argc, argv);
  try {
    if (*analyze) return cmd_analyze(invocation, common, tree_file, arrangement_file, format);
    if (*ptable) return cmd_ptable(invocation, common, table_n);
    if (*random) {
      return cmd_random(invocation, common, random_n, random_count, max_crossings, max_attempts);
    }
    if (*experiment) {
      if (ensemble.n_max < ensemble.n_min) {
        std::cerr << "error: --n-max must be >= --n-min\n";
        return kExitInputError;
      }
      ensemble.c_true_values = parse_c_true(c_true_text);
      ensemble.mode =
          quota_mode == "post-hoc" ? linarr::QuotaMode::kPostHoc : linarr::QuotaMode::kPerCell;
      return cmd_experiment(invocation, common, ensemble);
    }
    if (*verify) return cmd_verify(invocation, common, verify_n_max, verify_samples);
  } catch (const linarr::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

#include "linarr/report.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace linarr {

double round_significant(double x, int digits) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  const int magnitude = static_cast<int>(std::floor(std::log10(std::abs(x))));
  const double scale = std::pow(10.0, digits - 1 - magnitude);
  return std::round(x * scale) / scale;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), x);
  return std::string(buffer, end);
}

std::string format_rational(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

nlohmann::ordered_json optional_number(const std::optional<double>& x, bool rounded) {
  if (!x) return nullptr;
  return rounded ? round_significant(*x) : *x;
}

}  // namespace

nlohmann::ordered_json report_to_json(const AnalysisReport& report) {
  using json = nlohmann::ordered_json;
  const auto& p = report.prediction;
  const auto& c = report.crossings;

  json per_edge = json::array();
  const auto& edges = report.tree.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto span = span_of(report.arrangement, edges[i]);
    per_edge.push_back({{"u", edges[i].u},
                        {"v", edges[i].v},
                        {"start", span.start},
                        {"end", span.end},
                        {"length", span.length()},
                        {"crossings", c.per_edge[i]}});
  }

  json raw = {{"n", report.tree.size()},
              {"k2", p.k2},
              {"c_max", p.c_max},
              {"total_length", report.total_length},
              {"c_true", c.total},
              {"c_true_rel", optional_number(c.relative, false)},
              {"e0", p.e0},
              {"e2", p.e2},
              {"e0_rel", optional_number(p.e0_rel, false)},
              {"e2_rel", optional_number(p.e2_rel, false)}};
  json display = {{"n", report.tree.size()},
                  {"k2", round_significant(p.k2)},
                  {"c_max", p.c_max},
                  {"total_length", report.total_length},
                  {"c_true", c.total},
                  {"c_true_rel", optional_number(c.relative, true)},
                  {"e0", round_significant(p.e0)},
                  {"e2", round_significant(p.e2)},
                  {"e0_rel", optional_number(p.e0_rel, true)},
                  {"e2_rel", optional_number(p.e2_rel, true)}};
  return {{"raw", raw}, {"display", display}, {"edges", per_edge}};
}

void write_ptable_csv(std::ostream& out, const PCrossTable& table) {
  out << "d1,d2,p_num,p_den,p\n";
  for (int d1 = 1; d1 < table.n(); ++d1) {
    for (int d2 = 1; d2 < table.n(); ++d2) {
      const Rational p = table.exact(d1, d2);
      out << d1 << "," << d2 << "," << boost::multiprecision::numerator(p).str() << ","
          << boost::multiprecision::denominator(p).str() << ","
          << format_double(table.probability(d1, d2)) << "\n";
    }
  }
}

void write_ensemble_csv(std::ostream& out, const EnsembleResult& result) {
  out << "n,c_true,replicas,samples_used,mean_delta0,mean_delta2,sd_delta2\n";
  for (const auto& s : result.cells) {
    const bool empty = s.samples_used == 0;
    out << s.n << "," << s.c_true << "," << s.replicas << "," << s.samples_used << ","
        << (empty ? "nan" : format_double(s.mean_delta0)) << ","
        << (empty ? "nan" : format_double(s.mean_delta2)) << ","
        << (empty ? "nan" : format_double(s.sd_delta2)) << "\n";
  }
}

}  // namespace linarr

#ifndef LINARR_REPORT_HPP
#define LINARR_REPORT_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "linarr/experiments.hpp"
#include "linarr/predictors.hpp"

namespace linarr {

/// x rounded to `digits` significant digits (0 stays 0).
double round_significant(double x, int digits = 2);

/// Shortest decimal text that reads back as exactly x.
std::string format_double(double x);

/// "num/den" (or "num" when den = 1).
std::string format_rational(const Rational& r);

/// Raw and display-rounded fields of an analysis report.
nlohmann::ordered_json report_to_json(const AnalysisReport& report);

/// CSV `d1,d2,p_num,p_den,p`, row-major over d1 then d2.
void write_ptable_csv(std::ostream& out, const PCrossTable& table);

/// CSV `n,c_true,replicas,samples_used,mean_delta0,mean_delta2,sd_delta2`.
void write_ensemble_csv(std::ostream& out, const EnsembleResult& result);

}  // namespace linarr

#endif  // LINARR_REPORT_HPP

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "ivhinf/theorem.hpp"

namespace ivhinf {

/// Parsed problem document. The format is JSON with // and /* */ comments:
///
///   {
///     "denominator": [[lo0, hi0], [lo1, hi1], ...],   // ascending powers, n+1 pairs
///     "numerator":   [[lo0, hi0], ...],               // m+1 pairs, m < n
///     "options": { "hurwitz_tol": 1e-9, "theta_points": 720, "oracle_samples": 2000,
///                  "seed": 42, "bisection_tol": 1e-4, "omega_max": 100, "grid_points": 1000000 }
///   }
struct ProblemFile {
  AnalysisProblem problem;
  std::optional<double> omega_max;
  std::optional<int> grid_points;
};

/// Throws Error(ParseError) naming the line/column or the offending field.
ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::string& path);

/// Shortest text for `value` with at most `digits` significant digits,
/// independent of the C locale.
std::string format_number(double value, int digits = 9);

nlohmann::json to_json(const RealPolynomial& p);
nlohmann::json to_json(const NormResult& n);
nlohmann::json report_to_json(const AnalysisProblem& prob, const AnalysisReport& report);
/// Inverse of report_to_json for the report part.
AnalysisReport report_from_json(const nlohmann::json& doc);

std::string format_report_text(const AnalysisProblem& prob, const AnalysisReport& report, int digits = 9);

}  // namespace ivhinf

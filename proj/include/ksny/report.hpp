#ifndef KSNY_REPORT_HPP
#define KSNY_REPORT_HPP

#include <string>
#include <vector>

namespace ksny {

/// One verification item. For symbolic checks the residual is 0 exactly when
/// the operator vanished, otherwise the largest coefficient magnitude.
struct CheckReport {
  std::string name;
  double max_residual = 0.0;
  bool pass = false;
  std::string details;
};

/// Stable JSON: array of {"check", "max_residual", "pass", "details"}
/// objects, numbers printed with 17 significant digits, entries sorted by
/// name. Identical inputs serialize byte-identically.
std::string report_json(const std::vector<CheckReport>& reports);

/// Aligned text, one line per check.
std::string report_text(const std::vector<CheckReport>& reports);

bool all_pass(const std::vector<CheckReport>& reports);

void sort_reports(std::vector<CheckReport>& reports);

}  // namespace ksny

#endif

#include "ksny/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace ksny {

namespace {

std::string fmt_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

}  // namespace

void sort_reports(std::vector<CheckReport>& reports) {
  std::sort(reports.begin(), reports.end(),
            [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
}

bool all_pass(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

std::string report_json(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  os << "[\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    os << "  {\"check\": \"" << json_escape(r.name)
       << "\", \"max_residual\": " << fmt_number(r.max_residual)
       << ", \"pass\": " << (r.pass ? "true" : "false") << ", \"details\": \""
       << json_escape(r.details) << "\"}";
    if (i + 1 < reports.size()) os << ",";
    os << "\n";
  }
  os << "]\n";
  return os.str();
}

std::string report_text(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  std::size_t width = 4;
  for (const auto& r : reports) width = std::max(width, r.name.size());
  for (const auto& r : reports) {
    os << (r.pass ? "PASS  " : "FAIL  ") << r.name
       << std::string(width - r.name.size() + 2, ' ') << fmt_number(r.max_residual);
    if (!r.details.empty()) os << "  [" << r.details << "]";
    os << "\n";
  }
  return os.str();
}

}  // namespace ksny

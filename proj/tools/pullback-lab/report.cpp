#include "report.hpp"

#include <cstdio>
#include <ostream>

namespace pullback::cli {

Report::Report(std::string title) : title_(std::move(title)) {}

void Report::line(const std::string& text) { lines_.push_back(text); }

void Report::value(const std::string& key, const std::string& value) {
  summary_.emplace_back(key, value);
}

void Report::check(const std::string& key, const std::string& description, bool passed,
                   const std::string& detail) {
  passed_ = passed_ && passed;
  std::string text = std::string(passed ? "[PASS] " : "[FAIL] ") + description;
  if (!detail.empty()) text += " (" + detail + ")";
  lines_.push_back(text);
  summary_.emplace_back("check." + key, passed ? "pass" : "fail");
}

void Report::print(std::ostream& out) const {
  out << title_ << '\n';
  for (const auto& l : lines_) out << "  " << l << '\n';
  out << "--- summary ---\n";
  for (const auto& [k, v] : summary_) out << k << '=' << v << '\n';
  out << "result=" << (passed_ ? "pass" : "fail") << '\n';
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace pullback::cli

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace pullback::cli {

// Human-readable lines followed by a key=value summary block. Every check
// records its name, tolerance and outcome in both parts.
class Report {
 public:
  explicit Report(std::string title);

  void line(const std::string& text);
  void value(const std::string& key, const std::string& value);
  void check(const std::string& key, const std::string& description, bool passed,
             const std::string& detail = {});

  bool passed() const { return passed_; }
  void print(std::ostream& out) const;

 private:
  std::string title_;
  std::vector<std::string> lines_;
  std::vector<std::pair<std::string, std::string>> summary_;
  bool passed_ = true;
};

std::string format_double(double x);

}  // namespace pullback::cli

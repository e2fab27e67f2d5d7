#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace conesmooth {

/// 17 significant digits, '.' separator regardless of locale.
std::string format_number(double v);

/// Comma-separated rows terminated by '\n'. Cells containing a comma,
/// quote or newline are quoted.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}

  CsvWriter& header(const std::vector<std::string>& names);
  CsvWriter& cell(const std::string& text);
  CsvWriter& cell(double v);
  CsvWriter& cell(long long v);
  void end_row();

 private:
  std::ostream& os_;
  bool first_ = true;
};

}  // namespace conesmooth

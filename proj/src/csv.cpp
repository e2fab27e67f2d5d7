#include "conesmooth/csv.hpp"

#include <charconv>
#include <cmath>

namespace conesmooth {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

CsvWriter& CsvWriter::header(const std::vector<std::string>& names) {
  for (const std::string& n : names) cell(n);
  end_row();
  return *this;
}

CsvWriter& CsvWriter::cell(const std::string& text) {
  if (!first_) os_ << ',';
  first_ = false;
  if (text.find_first_of(",\"\n") == std::string::npos) {
    os_ << text;
    return *this;
  }
  os_ << '"';
  for (char c : text) {
    if (c == '"') os_ << '"';
    os_ << c;
  }
  os_ << '"';
  return *this;
}

CsvWriter& CsvWriter::cell(double v) { return cell(format_number(v)); }

CsvWriter& CsvWriter::cell(long long v) { return cell(std::to_string(v)); }

void CsvWriter::end_row() {
  os_ << '\n';
  first_ = true;
}

}  // namespace conesmooth

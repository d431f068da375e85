#include "vmig/csv.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace vmig {

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

CsvWriter& CsvWriter::field(std::string_view value) {
  if (row_started_) out_ << ',';
  out_ << csv_escape(value);
  row_started_ = true;
  return *this;
}

CsvWriter& CsvWriter::field(int value) { return field(std::to_string(value)); }
CsvWriter& CsvWriter::field(std::int64_t value) { return field(std::to_string(value)); }
CsvWriter& CsvWriter::field(std::uint64_t value) { return field(std::to_string(value)); }

void CsvWriter::end_row() {
  out_ << '\n';
  row_started_ = false;
}

void CsvWriter::row(std::initializer_list<std::string_view> fields) {
  for (std::string_view f : fields) field(f);
  end_row();
}

}  // namespace vmig

#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>

// Minimal RFC-4180-style CSV output. Doubles print with %.12g; NaN becomes
// an empty cell and infinities print as "inf"/"-inf".

namespace vmig {

std::string csv_escape(std::string_view field);
std::string format_double(double value);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  CsvWriter& field(std::string_view value);
  CsvWriter& field(const char* value) { return field(std::string_view(value)); }
  CsvWriter& field(double value) { return field(std::string_view(format_double(value))); }
  CsvWriter& field(int value);
  CsvWriter& field(std::int64_t value);
  CsvWriter& field(std::uint64_t value);
  void end_row();

  void row(std::initializer_list<std::string_view> fields);

 private:
  std::ostream& out_;
  bool row_started_ = false;
};

}  // namespace vmig

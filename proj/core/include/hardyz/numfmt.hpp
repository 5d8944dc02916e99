#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>

namespace hz {

/// Shortest decimal string that parses back to exactly `x`.
std::string format_double(double x);

/// Writes one CSV row. Doubles are emitted with format_double.
class CsvRow {
 public:
  explicit CsvRow(std::ostream& os) : os_(os) {}
  ~CsvRow() { os_ << '\n'; }
  CsvRow(const CsvRow&) = delete;
  CsvRow& operator=(const CsvRow&) = delete;

  CsvRow& operator<<(double x);
  CsvRow& operator<<(long long x);
  CsvRow& operator<<(int x) { return *this << static_cast<long long>(x); }
  CsvRow& operator<<(bool x);
  CsvRow& operator<<(std::string_view s);

 private:
  void sep();
  std::ostream& os_;
  bool first_ = true;
};

void write_csv_header(std::ostream& os, std::initializer_list<std::string_view> columns);

}  // namespace hz

#include "hardyz/numfmt.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace hz {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

void CsvRow::sep() {
  if (!first_) os_ << ',';
  first_ = false;
}

CsvRow& CsvRow::operator<<(double x) {
  sep();
  os_ << format_double(x);
  return *this;
}

CsvRow& CsvRow::operator<<(long long x) {
  sep();
  os_ << x;
  return *this;
}

CsvRow& CsvRow::operator<<(bool x) {
  sep();
  os_ << (x ? "true" : "false");
  return *this;
}

CsvRow& CsvRow::operator<<(std::string_view s) {
  sep();
  os_ << s;
  return *this;
}

void write_csv_header(std::ostream& os, std::initializer_list<std::string_view> columns) {
  bool first = true;
  for (auto c : columns) {
    if (!first) os << ',';
    os << c;
    first = false;
  }
  os << '\n';
}

}  // namespace hz

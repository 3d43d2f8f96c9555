#include "densify/csv.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "densify/error.hpp"

namespace densify {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto result =
      std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 17);
  if (result.ec != std::errc{}) throw Error("number formatting failed");
  return std::string(buffer, result.ptr);
}

std::string format_hex(std::uint64_t value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value, 16);
  std::string digits(buffer, result.ptr);
  return "0x" + std::string(16 - digits.size(), '0') + digits;
}

void CsvWriter::comment(std::string_view key, std::string_view value) {
  text_ += "# ";
  text_ += key;
  text_ += ": ";
  text_ += value;
  text_ += '\n';
}

void CsvWriter::header(std::initializer_list<std::string_view> columns) {
  bool first = true;
  for (auto column : columns) {
    if (!first) text_ += ',';
    text_ += column;
    first = false;
  }
  text_ += '\n';
  columns_ = columns.size();
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) throw Error("CSV row width does not match the header");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) text_ += ',';
    text_ += cells[i];
  }
  text_ += '\n';
}

}  // namespace densify

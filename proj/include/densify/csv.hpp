#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace densify {

// 17 significant digits through std::to_chars: locale-independent and
// round-trip exact.
std::string format_double(double value);
std::string format_hex(std::uint64_t value);

class CsvWriter {
 public:
  void comment(std::string_view key, std::string_view value);
  void header(std::initializer_list<std::string_view> columns);
  void row(const std::vector<std::string>& cells);

  const std::string& str() const noexcept { return text_; }

 private:
  std::string text_;
  std::size_t columns_ = 0;
};

}  // namespace densify

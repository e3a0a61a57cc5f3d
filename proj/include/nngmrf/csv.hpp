#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

namespace nngmrf {

// Floating-point cells are printed with 12 significant digits through
// std::to_chars, which is locale-independent by construction.
inline std::string format_float(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

class CsvCell {
 public:
  CsvCell(double v) : text_(format_float(v)) {}           // NOLINT(google-explicit-constructor)
  CsvCell(int v) : text_(std::to_string(v)) {}            // NOLINT
  CsvCell(long v) : text_(std::to_string(v)) {}           // NOLINT
  CsvCell(unsigned long v) : text_(std::to_string(v)) {}  // NOLINT
  CsvCell(unsigned v) : text_(std::to_string(v)) {}       // NOLINT
  CsvCell(const char* v) : text_(v) {}                    // NOLINT
  CsvCell(std::string v) : text_(std::move(v)) {}         // NOLINT
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

inline void csv_row(std::ostream& out, std::initializer_list<CsvCell> cells) {
  bool first = true;
  for (const auto& cell : cells) {
    if (!first) out << ',';
    out << cell.text();
    first = false;
  }
  out << '\n';
}

}  // namespace nngmrf

#include "gicpc/csv.hpp"

#include <array>
#include <cmath>
#include <cstdio>

namespace gicpc {

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // no "-0"
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.6g", value);
  std::string s(buf.data());
  // snprintf follows LC_NUMERIC; the output format is fixed to '.'.
  for (char& c : s) {
    if (c == ',') c = '.';
  }
  return s;
}

void CsvWriter::header(const std::vector<std::string>& columns) {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i > 0) out_ << ',';
    out_ << columns[i];
  }
  out_ << '\n';
}

void CsvWriter::row(const SweepRow& row) {
  out_ << format_number(row.swept);
  for (const Cell& c : row.cells) out_ << ',' << (c ? format_number(*c) : std::string("NA"));
  out_ << '\n';
}

void CsvWriter::row(const std::vector<Cell>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out_ << ',';
    out_ << (cells[i] ? format_number(*cells[i]) : std::string("NA"));
  }
  out_ << '\n';
}

}  // namespace gicpc

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gicpc/experiments.hpp"

namespace gicpc {

/// Comma-separated output: header row, 6 significant digits, '.' decimal
/// point regardless of locale, "NA" for empty cells.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void header(const std::vector<std::string>& columns);
  void row(const SweepRow& row);
  void row(const std::vector<Cell>& cells);

 private:
  std::ostream& out_;
};

std::string format_number(double value);

}  // namespace gicpc

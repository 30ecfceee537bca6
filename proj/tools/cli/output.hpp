#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace powerlog::cli {

/// Header plus formatted records, written as comma-separated values.
class OutputTable {
 public:
  explicit OutputTable(std::vector<std::string> header);

  /// Throws std::invalid_argument if the record width differs from the header.
  void add_row(std::vector<std::string> row);

  [[nodiscard]] const std::vector<std::string>& header() const noexcept { return header_; }
  [[nodiscard]] const std::vector<std::vector<std::string>>& rows() const noexcept { return rows_; }

  void write(std::ostream& os) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace powerlog::cli

#include "cli/output.hpp"

#include <ostream>
#include <stdexcept>

namespace powerlog::cli {
namespace {

void write_record(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os << ',';
    os << fields[i];
  }
  os << '\n';
}

}  // namespace

OutputTable::OutputTable(std::vector<std::string> header) : header_(std::move(header)) {}

void OutputTable::add_row(std::vector<std::string> row) {
  if (row.size() != header_.size()) throw std::invalid_argument("OutputTable: row width does not match header");
  rows_.push_back(std::move(row));
}

void OutputTable::write(std::ostream& os) const {
  write_record(os, header_);
  for (const auto& row : rows_) write_record(os, row);
}

}  // namespace powerlog::cli

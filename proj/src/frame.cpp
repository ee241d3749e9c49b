#include "loom/frame.hpp"

namespace loom {

Frame::Frame(std::vector<std::string> columns, bool strict)
    : columns_(std::move(columns)), strict_(strict) {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (!index_.emplace(columns_[i], i).second) {
      throw SourceError("duplicate column name '" + columns_[i] + "'");
    }
  }
}

void Frame::add_row(std::vector<Cell> cells) {
  if (cells.size() != columns_.size()) {
    throw SourceError("row has " + std::to_string(cells.size()) + " cells, expected " +
                      std::to_string(columns_.size()));
  }
  rows_.push_back(std::move(cells));
}

std::size_t Frame::add_empty_row() {
  rows_.emplace_back(columns_.size());
  return rows_.size() - 1;
}

void Frame::ensure_column(const std::string& name) {
  if (index_.count(name)) return;
  index_.emplace(name, columns_.size());
  columns_.push_back(name);
  for (auto& row : rows_) row.emplace_back();
}

void Frame::set_cell(std::size_t row, const std::string& column, Cell value) {
  ensure_column(column);
  rows_.at(row)[index_.at(column)] = std::move(value);
}

const Cell& Frame::cell(std::size_t row, const std::string& name) const {
  static const Cell null_cell;
  if (non_scalar_.count(name)) {
    throw SourceError("reference '" + name +
                      "' selects a non-scalar node (object, array, or element with child "
                      "elements); references must point at scalar values");
  }
  auto it = index_.find(name);
  if (it == index_.end()) {
    if (strict_) throw SourceError("unknown column '" + name + "'");
    return null_cell;
  }
  return rows_.at(row)[it->second];
}

}  // namespace loom

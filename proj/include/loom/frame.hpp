#ifndef LOOM_FRAME_HPP
#define LOOM_FRAME_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "loom/rdf.hpp"

namespace loom {

class SourceError : public Error {
 public:
  using Error::Error;
};

// A cell is either a string value (possibly empty) or null. The distinction
// matters: null suppresses triple generation, empty string does not.
using Cell = std::optional<std::string>;

// Tabular view over one logical source. CSV frames are strict: referencing a
// column that is not in the header is an error. JSON/XML frames are not,
// because those documents carry no schema; an unknown reference is simply
// null in every row. Paths that select non-scalar nodes (objects, arrays,
// elements with child elements) are tracked so that referencing one fails
// with an explanation instead of silently stringifying.
class Frame {
 public:
  Frame() = default;
  Frame(std::vector<std::string> columns, bool strict);

  const std::vector<std::string>& columns() const { return columns_; }
  std::size_t row_count() const { return rows_.size(); }
  bool strict() const { return strict_; }
  bool has_column(const std::string& name) const { return index_.count(name) > 0; }

  // Appends a row; must have exactly one cell per column.
  void add_row(std::vector<Cell> cells);

  // Appends an empty (all-null) row and returns its index.
  std::size_t add_empty_row();

  // Adds the column if absent, padding existing rows with nulls.
  void ensure_column(const std::string& name);

  void set_cell(std::size_t row, const std::string& column, Cell value);

  // Cell lookup used by reference evaluation. Throws SourceError for strict
  // frames when the column is unknown, and for any frame when the name is a
  // recorded non-scalar path.
  const Cell& cell(std::size_t row, const std::string& name) const;

  void mark_non_scalar(const std::string& name) { non_scalar_.insert(name); }

 private:
  std::vector<std::string> columns_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<Cell>> rows_;
  std::set<std::string> non_scalar_;
  bool strict_ = true;
};

}  // namespace loom

#endif  // LOOM_FRAME_HPP

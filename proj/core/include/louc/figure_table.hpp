/*
 * Copyright 2026 The louc Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LOUC_FIGURE_TABLE_HPP_
#define LOUC_FIGURE_TABLE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace louc {

// A table cell. std::monostate marks an undefined value.
using Cell = std::variant<std::monostate, bool, std::int64_t, double, std::string>;

// Rectangular table with unique column names: the data behind one figure.
class FigureTable {
 public:
  FigureTable() = default;
  // Throws ArgumentError on repeated column names.
  FigureTable(std::string name, std::vector<std::string> columns);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }

  // Throws ArgumentError when the row width differs from the column count.
  void AddRow(std::vector<Cell> row);

  // Throws NotFoundError for an unknown column.
  std::size_t ColumnIndex(std::string_view column) const;
  const Cell& At(std::size_t row, std::string_view column) const;

  // Rows for which `keep(row)` holds, restricted to `columns`, under a new
  // name.
  template <typename Predicate>
  FigureTable Select(std::string name, const std::vector<std::string>& columns,
                     Predicate keep) const {
    std::vector<std::size_t> indices;
    for (const auto& column : columns) indices.push_back(ColumnIndex(column));
    FigureTable out(std::move(name), columns);
    for (const auto& row : rows_) {
      if (!keep(row)) continue;
      std::vector<Cell> selected;
      selected.reserve(indices.size());
      for (std::size_t i : indices) selected.push_back(row[i]);
      out.rows_.push_back(std::move(selected));
    }
    return out;
  }

 private:
  std::string name_;
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

// Convenience accessors; throw ArgumentError when the cell holds another
// alternative.
double AsDouble(const Cell& cell);
std::int64_t AsInt(const Cell& cell);
bool AsBool(const Cell& cell);
const std::string& AsString(const Cell& cell);
inline bool IsNull(const Cell& cell) {
  return std::holds_alternative<std::monostate>(cell);
}

}  // namespace louc

#endif  // LOUC_FIGURE_TABLE_HPP_

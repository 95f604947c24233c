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

#include "louc/figure_table.hpp"

#include <set>

#include "louc/errors.hpp"

namespace louc {

FigureTable::FigureTable(std::string name, std::vector<std::string> columns)
    : name_(std::move(name)), columns_(std::move(columns)) {
  std::set<std::string_view> unique;
  for (const auto& column : columns_) {
    if (!unique.insert(column).second) {
      throw ArgumentError("repeated column '" + column + "' in table " + name_);
    }
  }
}

void FigureTable::AddRow(std::vector<Cell> row) {
  if (row.size() != columns_.size()) {
    throw ArgumentError("table " + name_ + " expects " +
                        std::to_string(columns_.size()) + " cells, got " +
                        std::to_string(row.size()));
  }
  rows_.push_back(std::move(row));
}

std::size_t FigureTable::ColumnIndex(std::string_view column) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i] == column) return i;
  }
  throw NotFoundError("table " + name_ + " has no column '" +
                      std::string(column) + "'");
}

const Cell& FigureTable::At(std::size_t row, std::string_view column) const {
  return rows_.at(row)[ColumnIndex(column)];
}

namespace {

template <typename T>
const T& Get(const Cell& cell, const char* expected) {
  if (const T* value = std::get_if<T>(&cell)) return *value;
  throw ArgumentError(std::string("cell does not hold ") + expected);
}

}  // namespace

double AsDouble(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) {
    return static_cast<double>(*i);
  }
  return Get<double>(cell, "a real");
}

std::int64_t AsInt(const Cell& cell) { return Get<std::int64_t>(cell, "an integer"); }

bool AsBool(const Cell& cell) { return Get<bool>(cell, "a boolean"); }

const std::string& AsString(const Cell& cell) {
  return Get<std::string>(cell, "a string");
}

}  // namespace louc

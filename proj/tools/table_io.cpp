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

#include "table_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <vector>

#include <nlohmann/json.hpp>

#include "louc/errors.hpp"

namespace louc::tools {
namespace {

constexpr int kSignificantDigits = 9;

std::string EscapeCsv(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string CsvCell(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const { return FormatReal(d); }
    std::string operator()(const std::string& s) const { return EscapeCsv(s); }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json JsonCell(const Cell& cell) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(bool b) const { return b; }
    nlohmann::ordered_json operator()(std::int64_t i) const { return i; }
    nlohmann::ordered_json operator()(double d) const {
      // Round through the fixed-precision text so JSON and CSV agree.
      const std::string text = FormatReal(d);
      double rounded = 0.0;
      std::from_chars(text.data(), text.data() + text.size(), rounded);
      return rounded;
    }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, cell);
}

// Splits one CSV record; quoted fields may not span lines here.
std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

}  // namespace

std::string FormatReal(double value) {
  if (value == 0.0) value = 0.0;  // no "-0"
  char buffer[64];
  const auto [end, ec] =
      std::to_chars(buffer, buffer + sizeof(buffer), value,
                    std::chars_format::general, kSignificantDigits);
  return std::string(buffer, end);
}

std::string_view Extension(TableFormat format) {
  return format == TableFormat::kCsv ? "csv" : "json";
}

void WriteCsv(const FigureTable& table, std::ostream& out) {
  const auto& columns = table.columns();
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out << (i ? "," : "") << EscapeCsv(columns[i]);
  }
  out << '\n';
  for (const auto& row : table.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << CsvCell(row[i]);
    }
    out << '\n';
  }
}

void WriteJson(const FigureTable& table, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["name"] = table.name();
  doc["columns"] = table.columns();
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows()) {
    auto cells = nlohmann::ordered_json::array();
    for (const auto& cell : row) cells.push_back(JsonCell(cell));
    rows.push_back(std::move(cells));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

void WriteTable(const FigureTable& table, TableFormat format,
                std::ostream& out) {
  if (format == TableFormat::kCsv) {
    WriteCsv(table, out);
  } else {
    WriteJson(table, out);
  }
}

std::filesystem::path WriteTableFile(const FigureTable& table,
                                     TableFormat format,
                                     const std::filesystem::path& dir) {
  const auto path = dir / (table.name() + "." + std::string(Extension(format)));
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  WriteTable(table, format, out);
  if (!out) throw Error("failed writing " + path.string());
  return path;
}

FigureTable ReadCsvTable(std::istream& in, std::string name) {
  std::string line;
  if (!std::getline(in, line)) throw IngestError("empty table file");
  FigureTable table(std::move(name), SplitCsvLine(line));
  long row = 1;
  while (std::getline(in, line)) {
    ++row;
    std::vector<Cell> cells;
    for (auto& field : SplitCsvLine(line)) {
      cells.push_back(field.empty() ? Cell{} : Cell(std::move(field)));
    }
    if (cells.size() != table.columns().size()) {
      throw IngestError("ragged row in table " + table.name(), row);
    }
    table.AddRow(std::move(cells));
  }
  return table;
}

}  // namespace louc::tools

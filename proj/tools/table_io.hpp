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

#ifndef LOUC_TOOLS_TABLE_IO_HPP_
#define LOUC_TOOLS_TABLE_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "louc/figure_table.hpp"

namespace louc::tools {

enum class TableFormat { kCsv, kJson };

std::string_view Extension(TableFormat format);

// Reals are written with 9 significant digits, undefined cells as an empty
// CSV field or JSON null, so identical tables always serialize to identical
// bytes.
void WriteCsv(const FigureTable& table, std::ostream& out);
void WriteJson(const FigureTable& table, std::ostream& out);
void WriteTable(const FigureTable& table, TableFormat format, std::ostream& out);

// Writes `<dir>/<table name>.<ext>` and returns the path.
std::filesystem::path WriteTableFile(const FigureTable& table,
                                     TableFormat format,
                                     const std::filesystem::path& dir);

// Reads a CSV written by WriteCsv back as a table of string cells (empty
// fields become null). Throws IngestError on ragged rows.
FigureTable ReadCsvTable(std::istream& in, std::string name);

std::string FormatReal(double value);

}  // namespace louc::tools

#endif  // LOUC_TOOLS_TABLE_IO_HPP_

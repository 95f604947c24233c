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

#ifndef LOUC_SRC_CSV_HPP_
#define LOUC_SRC_CSV_HPP_

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace louc::csv {

// Minimal RFC 4180 reader: comma separated, double-quote quoting, LF or CRLF
// line ends, optional UTF-8 byte order mark.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  // Reads the next non-blank record. Returns false at end of input. Throws
  // IngestError on an unterminated quoted field.
  bool Next(std::vector<std::string>* fields);

  // Line on which the last returned record started.
  long line() const { return record_line_; }

 private:
  std::istream& in_;
  long line_ = 0;
  long record_line_ = 0;
  bool first_ = true;
};

// Quotes a field when it contains a delimiter, quote or line break.
std::string Escape(std::string_view field);

// Locale independent number parsing of a whole field.
std::optional<double> ParseDouble(std::string_view text);
std::optional<long> ParseInteger(std::string_view text);

// Shortest representation that parses back to `value`.
std::string FormatShortest(double value);
// `significant` significant digits, general notation.
std::string FormatSignificant(double value, int significant);

}  // namespace louc::csv

#endif  // LOUC_SRC_CSV_HPP_

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

#ifndef LOUC_ERRORS_HPP_
#define LOUC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace louc {

// Base class for every error raised by the library. Undefined measures that
// are legitimate results (e.g. precision without positive predictions) are
// reported as std::nullopt, not as exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unknown annotator, question or (annotator, question) record.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

// A numeric argument lies outside its documented domain.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Mismatched arguments, e.g. a record paired with the wrong question.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A measure was requested where it has no definition (empty subset,
// classification of an undefined calibration, ...).
class UndefinedMeasureError : public Error {
 public:
  using Error::Error;
};

// A subset contains a question the annotator did not answer, or a question
// has no answers at all.
class CoverageError : public Error {
 public:
  using Error::Error;
};

// Too few decisions for the requested operation (leave-one-out on a single
// decision, more bins than decisions, fewer than two annotators, ...).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent input file.
class IngestError : public Error {
 public:
  IngestError(const std::string& message, long row = -1)
      : Error(row >= 0 ? "row " + std::to_string(row) + ": " + message
                       : message),
        row_(row) {}

  // 1-based line number in the source file, or -1 when not row specific.
  long row() const { return row_; }

 private:
  long row_;
};

}  // namespace louc

#endif  // LOUC_ERRORS_HPP_

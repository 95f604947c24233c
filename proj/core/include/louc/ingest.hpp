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

#ifndef LOUC_INGEST_HPP_
#define LOUC_INGEST_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "louc/dataset.hpp"

namespace louc {

// Scale of the confidence column in annotation files.
enum class ConfidenceScale {
  kPercent,  // 0..100, as collected by the annotation interface
  kUnit,     // 0..1
};

struct IngestConfig {
  ConfidenceScale confidence_scale = ConfidenceScale::kPercent;
  // Abort on the first bad row; otherwise reject it and keep going.
  bool strict = true;
};

struct Rejection {
  long row = 0;  // 1-based line number in the file
  std::string reason;
};

struct IngestReport {
  std::size_t rows_read = 0;
  std::size_t rows_rejected = 0;
  std::vector<Rejection> rejections;
};

struct IngestResult {
  Dataset dataset;
  IngestReport report;
};

// Annotation files are comma separated with a header row. Required columns:
// annotator_id, question_id, left_attribute, right_attribute, confidence,
// response_time_seconds. An optional order_index column fixes the question
// order; otherwise questions are ordered by first appearance. Question
// labels come from `reference`, never from the file.
//
// Throws IngestError on structural problems (missing column, unreadable
// file) and, in strict mode, on the first bad row.
IngestResult LoadAnnotations(const std::filesystem::path& path,
                             const IngestConfig& config,
                             const ReferenceMatch& reference);
IngestResult ReadAnnotations(std::istream& in, const IngestConfig& config,
                             const ReferenceMatch& reference);

// Two-column file with header `left_attribute,right_attribute`. Repeated
// pairs are collapsed; a warning per repeat is appended to `warnings` when
// given. Throws IngestError with the row number on malformed rows.
ReferenceMatch LoadReference(const std::filesystem::path& path,
                             std::vector<std::string>* warnings = nullptr);
ReferenceMatch ReadReference(std::istream& in,
                             std::vector<std::string>* warnings = nullptr);

// A broken data-model invariant.
struct Violation {
  std::string invariant;
  std::string entity;
};

std::string ToString(const Violation& violation);

// Empty iff every data-model invariant holds.
std::vector<Violation> Validate(const Dataset& dataset);

// Assembles a dataset, labelling each question from `reference`. Throws
// IngestError listing the violations when the result would be invalid.
Dataset BuildDataset(std::vector<Question> questions,
                     std::vector<std::string> annotators,
                     std::vector<AnnotationRecord> records,
                     const ReferenceMatch& reference);

// Writes the annotation file (with order_index) such that reading it back
// with the same scale reproduces the dataset exactly.
void WriteAnnotations(const Dataset& dataset, std::ostream& out,
                      ConfidenceScale scale = ConfidenceScale::kPercent);
void WriteReference(const ReferenceMatch& reference, std::ostream& out);

}  // namespace louc

#endif  // LOUC_INGEST_HPP_

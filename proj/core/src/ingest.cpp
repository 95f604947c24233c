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

#include "louc/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "csv.hpp"
#include "louc/errors.hpp"

namespace louc {
namespace {

constexpr const char* kRequiredColumns[] = {
    "annotator_id", "question_id",          "left_attribute",
    "right_attribute", "confidence", "response_time_seconds"};

struct Columns {
  std::size_t annotator = 0;
  std::size_t question = 0;
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t confidence = 0;
  std::size_t time = 0;
  std::optional<std::size_t> order;
  std::size_t width = 0;
};

std::string Trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

Columns ResolveColumns(const std::vector<std::string>& header) {
  std::unordered_map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < header.size(); ++i) {
    position.emplace(Trim(header[i]), i);
  }
  auto require = [&](const char* name) {
    auto it = position.find(name);
    if (it == position.end()) {
      throw IngestError(std::string("missing required column '") + name + "'",
                        1);
    }
    return it->second;
  };
  Columns columns;
  columns.annotator = require(kRequiredColumns[0]);
  columns.question = require(kRequiredColumns[1]);
  columns.left = require(kRequiredColumns[2]);
  columns.right = require(kRequiredColumns[3]);
  columns.confidence = require(kRequiredColumns[4]);
  columns.time = require(kRequiredColumns[5]);
  if (auto it = position.find("order_index"); it != position.end()) {
    columns.order = it->second;
  }
  columns.width = header.size();
  return columns;
}

// Question state accumulated while reading.
struct PendingQuestion {
  AttributePair pair;
  std::optional<long> order;
  std::size_t first_seen = 0;
};

struct PairHash {
  std::size_t operator()(const AttributePair& p) const {
    const std::size_t h = std::hash<std::string>{}(p.left);
    return h ^ (std::hash<std::string>{}(p.right) + 0x9e3779b97f4a7c15ULL +
                (h << 6) + (h >> 2));
  }
};

class AnnotationParser {
 public:
  AnnotationParser(const IngestConfig& config, const Columns& columns)
      : config_(config), columns_(columns) {}

  // Returns an error message for a bad row, or nullopt after accepting it.
  std::optional<std::string> Accept(const std::vector<std::string>& fields) {
    if (fields.size() != columns_.width) {
      return "expected " + std::to_string(columns_.width) + " fields, found " +
             std::to_string(fields.size());
    }
    AnnotationRecord record;
    record.annotator_id = Trim(fields[columns_.annotator]);
    record.question_id = Trim(fields[columns_.question]);
    AttributePair pair{Trim(fields[columns_.left]),
                       Trim(fields[columns_.right])};
    if (record.annotator_id.empty()) return "empty annotator_id";
    if (record.question_id.empty()) return "empty question_id";
    if (pair.left.empty() || pair.right.empty()) {
      return "empty attribute identifier";
    }

    const auto confidence = csv::ParseDouble(fields[columns_.confidence]);
    if (!confidence) return "confidence is not a number";
    if (config_.confidence_scale == ConfidenceScale::kPercent) {
      if (*confidence < 0.0 || *confidence > 100.0) {
        return "confidence outside the percent scale [0, 100]";
      }
      record.confidence = *confidence / 100.0;
    } else {
      if (*confidence < 0.0 || *confidence > 1.0) {
        return "confidence outside the unit scale [0, 1]";
      }
      record.confidence = *confidence;
    }

    const auto time = csv::ParseDouble(fields[columns_.time]);
    if (!time) return "response_time_seconds is not a number";
    if (*time <= 0.0) return "non-positive response time";
    record.response_time_seconds = *time;

    std::optional<long> order;
    if (columns_.order) {
      order = csv::ParseInteger(fields[*columns_.order]);
      if (!order || *order < 0) return "order_index is not a non-negative integer";
    }

    auto question_it = questions_.find(record.question_id);
    if (question_it != questions_.end()) {
      if (question_it->second.pair != pair) {
        return "question " + record.question_id +
               " listed with conflicting attribute pair " + ToString(pair);
      }
      if (order && question_it->second.order != order) {
        return "question " + record.question_id +
               " listed with conflicting order_index";
      }
    } else {
      if (auto owner = pair_owner_.find(pair); owner != pair_owner_.end()) {
        return "attribute pair " + ToString(pair) +
               " already used by question " + owner->second;
      }
      if (order && !order_owner_.insert(*order).second) {
        return "order_index " + std::to_string(*order) +
               " already used by another question";
      }
    }
    const std::string key = record.annotator_id + '\x1f' + record.question_id;
    if (seen_.contains(key)) {
      return "duplicate record for annotator " + record.annotator_id +
             " and question " + record.question_id;
    }

    // Accepted: commit state.
    seen_.insert(key);
    if (question_it == questions_.end()) {
      pair_owner_.emplace(pair, record.question_id);
      questions_.emplace(record.question_id,
                         PendingQuestion{pair, order, questions_.size()});
    }
    if (annotator_set_.insert(record.annotator_id).second) {
      annotators_.push_back(record.annotator_id);
    }
    records_.push_back(std::move(record));
    return std::nullopt;
  }

  Dataset Finish(const ReferenceMatch& reference) {
    std::vector<std::pair<std::string, PendingQuestion>> pending(
        questions_.begin(), questions_.end());
    std::sort(pending.begin(), pending.end(), [](const auto& a, const auto& b) {
      if (a.second.order != b.second.order) {
        return a.second.order < b.second.order;
      }
      return a.second.first_seen < b.second.first_seen;
    });
    // Explicit order indexes only rank questions; positions are compacted
    // to 0..B-1 so that rejected rows cannot leave gaps.
    std::vector<Question> questions;
    questions.reserve(pending.size());
    for (std::size_t i = 0; i < pending.size(); ++i) {
      Question q;
      q.id = pending[i].first;
      q.order_index = static_cast<int>(i);
      q.pair = pending[i].second.pair;
      questions.push_back(std::move(q));
    }
    return BuildDataset(std::move(questions), std::move(annotators_),
                        std::move(records_), reference);
  }

 private:
  const IngestConfig& config_;
  const Columns& columns_;
  std::unordered_map<std::string, PendingQuestion> questions_;
  std::unordered_map<AttributePair, std::string, PairHash> pair_owner_;
  std::set<long> order_owner_;
  std::unordered_set<std::string> seen_;
  std::unordered_set<std::string> annotator_set_;
  std::vector<std::string> annotators_;
  std::vector<AnnotationRecord> records_;
};

std::ifstream OpenOrThrow(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot open " + path.string());
  return in;
}

// Shortest decimal text for `confidence` that reads back bit-exactly under
// the given scale.
std::string FormatConfidence(double confidence, ConfidenceScale scale) {
  if (scale == ConfidenceScale::kUnit) return csv::FormatShortest(confidence);
  const double percent = confidence * 100.0;
  for (int digits = 1; digits <= 17; ++digits) {
    std::string text = csv::FormatSignificant(percent, digits);
    const auto parsed = csv::ParseDouble(text);
    if (parsed && *parsed / 100.0 == confidence && *parsed >= 0.0 &&
        *parsed <= 100.0) {
      return text;
    }
  }
  return csv::FormatSignificant(percent, 17);
}

}  // namespace

IngestResult ReadAnnotations(std::istream& in, const IngestConfig& config,
                             const ReferenceMatch& reference) {
  csv::Reader reader(in);
  std::vector<std::string> fields;
  if (!reader.Next(&fields)) throw IngestError("empty annotation file");
  const Columns columns = ResolveColumns(fields);

  AnnotationParser parser(config, columns);
  IngestReport report;
  while (reader.Next(&fields)) {
    ++report.rows_read;
    if (auto error = parser.Accept(fields)) {
      if (config.strict) throw IngestError(*error, reader.line());
      report.rejections.push_back({reader.line(), std::move(*error)});
    }
  }
  report.rows_rejected = report.rejections.size();
  return {parser.Finish(reference), std::move(report)};
}

IngestResult LoadAnnotations(const std::filesystem::path& path,
                             const IngestConfig& config,
                             const ReferenceMatch& reference) {
  auto in = OpenOrThrow(path);
  return ReadAnnotations(in, config, reference);
}

ReferenceMatch ReadReference(std::istream& in,
                             std::vector<std::string>* warnings) {
  csv::Reader reader(in);
  std::vector<std::string> fields;
  ReferenceMatch reference;
  if (!reader.Next(&fields)) return reference;
  if (fields.size() != 2 || Trim(fields[0]) != "left_attribute" ||
      Trim(fields[1]) != "right_attribute") {
    throw IngestError("reference header must be left_attribute,right_attribute",
                      reader.line());
  }
  while (reader.Next(&fields)) {
    if (fields.size() != 2) {
      throw IngestError("expected 2 fields, found " +
                            std::to_string(fields.size()),
                        reader.line());
    }
    AttributePair pair{Trim(fields[0]), Trim(fields[1])};
    if (pair.left.empty() || pair.right.empty()) {
      throw IngestError("empty attribute identifier", reader.line());
    }
    if (!reference.Insert(pair) && warnings != nullptr) {
      warnings->push_back("row " + std::to_string(reader.line()) +
                          ": repeated reference pair " + ToString(pair));
    }
  }
  return reference;
}

ReferenceMatch LoadReference(const std::filesystem::path& path,
                             std::vector<std::string>* warnings) {
  auto in = OpenOrThrow(path);
  return ReadReference(in, warnings);
}

std::string ToString(const Violation& violation) {
  return violation.invariant + ": " + violation.entity;
}

std::vector<Violation> Validate(const Dataset& dataset) {
  std::vector<Violation> violations;
  auto report = [&](std::string invariant, std::string entity) {
    violations.push_back({std::move(invariant), std::move(entity)});
  };

  const auto& questions = dataset.questions();
  std::set<std::string> question_ids;
  std::map<AttributePair, std::string> pairs;
  for (std::size_t i = 0; i < questions.size(); ++i) {
    const Question& q = questions[i];
    const std::string name = "question " + q.id;
    if (q.id.empty()) report("question id non-empty", "question #" + std::to_string(i));
    if (!question_ids.insert(q.id).second) report("question id unique", name);
    if (q.order_index != static_cast<int>(i)) {
      report("order_index values form 0..B-1", name + " has order_index " +
                                                   std::to_string(q.order_index));
    }
    if (q.pair.left.empty() || q.pair.right.empty()) {
      report("attribute identifiers non-empty", name);
    }
    if (auto [it, inserted] = pairs.emplace(q.pair, q.id); !inserted) {
      report("attribute pair unique", name + " repeats " + ToString(q.pair) +
                                          " of question " + it->second);
    }
    if (q.true_label != dataset.reference().Contains(q.pair)) {
      report("true_label matches reference", name);
    }
  }

  std::set<std::string> annotator_ids;
  for (const auto& annotator : dataset.annotators()) {
    if (!annotator_ids.insert(annotator).second) {
      report("annotator id unique", "annotator " + annotator);
    }
  }

  std::set<std::string> answered_by;
  std::set<std::pair<std::string, std::string>> seen;
  const auto& records = dataset.records();
  for (std::size_t r = 0; r < records.size(); ++r) {
    const auto& record = records[r];
    const std::string name = "record #" + std::to_string(r) + " (" +
                             record.annotator_id + ", " + record.question_id +
                             ")";
    if (!question_ids.contains(record.question_id)) {
      report("record references a known question", name);
    }
    if (!annotator_ids.contains(record.annotator_id)) {
      report("record references a known annotator", name);
    }
    if (!(record.confidence >= 0.0 && record.confidence <= 1.0)) {
      report("confidence in [0, 1]", name);
    }
    if (!(record.response_time_seconds > 0.0) ||
        !std::isfinite(record.response_time_seconds)) {
      report("response time positive", name);
    }
    if (!seen.emplace(record.annotator_id, record.question_id).second) {
      report("at most one record per (annotator, question)", name);
    }
    answered_by.insert(record.annotator_id);
  }
  for (const auto& annotator : dataset.annotators()) {
    if (!answered_by.contains(annotator)) {
      report("annotator has at least one record", "annotator " + annotator);
    }
  }
  return violations;
}

Dataset BuildDataset(std::vector<Question> questions,
                     std::vector<std::string> annotators,
                     std::vector<AnnotationRecord> records,
                     const ReferenceMatch& reference) {
  for (auto& question : questions) {
    question.true_label = reference.Contains(question.pair);
  }
  Dataset dataset(std::move(questions), std::move(annotators),
                  std::move(records), reference);
  const auto violations = Validate(dataset);
  if (!violations.empty()) {
    std::string message = std::to_string(violations.size()) +
                          " dataset invariant violation(s); first: " +
                          ToString(violations.front());
    throw IngestError(message);
  }
  return dataset;
}

void WriteAnnotations(const Dataset& dataset, std::ostream& out,
                      ConfidenceScale scale) {
  out << "annotator_id,question_id,left_attribute,right_attribute,"
         "confidence,response_time_seconds,order_index\n";
  for (const auto& annotator : dataset.annotators()) {
    for (std::size_t r : dataset.RecordIndicesOf(annotator)) {
      const auto& record = dataset.records()[r];
      const Question& question = dataset.GetQuestion(record.question_id);
      out << csv::Escape(record.annotator_id) << ','
          << csv::Escape(record.question_id) << ','
          << csv::Escape(question.pair.left) << ','
          << csv::Escape(question.pair.right) << ','
          << FormatConfidence(record.confidence, scale) << ','
          << csv::FormatShortest(record.response_time_seconds) << ','
          << question.order_index << '\n';
    }
  }
}

void WriteReference(const ReferenceMatch& reference, std::ostream& out) {
  out << "left_attribute,right_attribute\n";
  for (const auto& pair : reference.pairs()) {
    out << csv::Escape(pair.left) << ',' << csv::Escape(pair.right) << '\n';
  }
}

}  // namespace louc

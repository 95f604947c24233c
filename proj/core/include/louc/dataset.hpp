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

#ifndef LOUC_DATASET_HPP_
#define LOUC_DATASET_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace louc {

// Confidence strictly above this value is a predicted match. A confidence of
// exactly 0.5 (neutral) is a predicted non-match everywhere in the library.
inline constexpr double kMatchThreshold = 0.5;

// A candidate correspondence between an attribute of the left schema and an
// attribute of the right schema. Identifiers are opaque.
struct AttributePair {
  std::string left;
  std::string right;

  auto operator<=>(const AttributePair&) const = default;
  bool operator==(const AttributePair&) const = default;
};

std::string ToString(const AttributePair& pair);

struct Question {
  std::string id;
  // Position in the ordered question series, 0..B-1.
  int order_index = 0;
  AttributePair pair;
  // True iff `pair` belongs to the reference match.
  bool true_label = false;

  bool operator==(const Question&) const = default;
};

// Expert reference match. Set semantics.
class ReferenceMatch {
 public:
  ReferenceMatch() = default;
  explicit ReferenceMatch(const std::vector<AttributePair>& pairs);

  // Returns false when the pair was already present.
  bool Insert(AttributePair pair);
  bool Contains(const AttributePair& pair) const {
    return pairs_.contains(pair);
  }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const std::set<AttributePair>& pairs() const { return pairs_; }

  bool operator==(const ReferenceMatch&) const = default;

 private:
  std::set<AttributePair> pairs_;
};

// One answer of an annotator to a question. Confidence is on the unit scale.
struct AnnotationRecord {
  std::string annotator_id;
  std::string question_id;
  double confidence = 0.0;
  double response_time_seconds = 0.0;

  bool operator==(const AnnotationRecord&) const = default;
};

// Immutable collection of questions, annotators and their answers.
//
// The constructor only indexes its input; it does not enforce the model
// invariants so that damaged datasets can be inspected with Validate()
// (see ingest.hpp). Use BuildDataset() to obtain a checked instance.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::vector<Question> questions, std::vector<std::string> annotators,
          std::vector<AnnotationRecord> records, ReferenceMatch reference);

  // Sorted by order_index.
  const std::vector<Question>& questions() const { return questions_; }
  // In first-appearance order.
  const std::vector<std::string>& annotators() const { return annotators_; }
  const std::vector<AnnotationRecord>& records() const { return records_; }
  const ReferenceMatch& reference() const { return reference_; }

  const Question* FindQuestion(std::string_view question_id) const;
  // Throws NotFoundError.
  const Question& GetQuestion(std::string_view question_id) const;

  bool HasAnnotator(std::string_view annotator_id) const;

  const AnnotationRecord* FindRecord(std::string_view annotator_id,
                                     std::string_view question_id) const;
  // Throws NotFoundError when the annotator did not answer the question.
  const AnnotationRecord& GetRecord(std::string_view annotator_id,
                                    std::string_view question_id) const;

  // Indices into records() for one annotator, ordered by the question
  // order_index (records of unknown questions last). Throws NotFoundError
  // for an unknown annotator.
  std::span<const std::size_t> RecordIndicesOf(
      std::string_view annotator_id) const;

  // Ids of the questions the annotator answered, in series order.
  std::vector<std::string> AnsweredQuestions(
      std::string_view annotator_id) const;

  // Same questions, annotators and reference, and the same answers per
  // annotator; the order of records() is not compared.
  bool operator==(const Dataset& other) const;

 private:
  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };
  template <typename V>
  using StringMap =
      std::unordered_map<std::string, V, StringHash, std::equal_to<>>;

  std::vector<Question> questions_;
  std::vector<std::string> annotators_;
  std::vector<AnnotationRecord> records_;
  ReferenceMatch reference_;

  struct AnnotatorIndex {
    // Record indices in series order.
    std::vector<std::size_t> ordered;
    // Record index per question position, kNoRecord when unanswered.
    std::vector<std::size_t> by_question;
  };
  static constexpr std::size_t kNoRecord = static_cast<std::size_t>(-1);

  std::size_t PositionOf(std::string_view question_id) const;

  // Question id -> position in questions_.
  StringMap<std::size_t> question_index_;
  StringMap<AnnotatorIndex> annotator_index_;
};

// Sparse per-annotator similarity matrix keyed by attribute pair.
struct SparseSimilarityMatrix {
  std::map<AttributePair, double> entries;
};

// One entry per question the annotator answered, valued with the reported
// confidence. Throws NotFoundError("annotator not found") for unknown ids.
SparseSimilarityMatrix BuildSimilarityMatrix(const Dataset& dataset,
                                             std::string_view annotator_id);

// Pairs whose value is strictly greater than `delta`.
std::set<AttributePair> ThresholdMatch(const SparseSimilarityMatrix& matrix,
                                       double delta = kMatchThreshold);

}  // namespace louc

#endif  // LOUC_DATASET_HPP_

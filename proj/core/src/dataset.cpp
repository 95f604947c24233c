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

#include "louc/dataset.hpp"

#include <algorithm>
#include <utility>

#include "louc/errors.hpp"

namespace louc {

std::string ToString(const AttributePair& pair) {
  return "(" + pair.left + ", " + pair.right + ")";
}

ReferenceMatch::ReferenceMatch(const std::vector<AttributePair>& pairs) {
  for (const auto& pair : pairs) pairs_.insert(pair);
}

bool ReferenceMatch::Insert(AttributePair pair) {
  return pairs_.insert(std::move(pair)).second;
}

Dataset::Dataset(std::vector<Question> questions,
                 std::vector<std::string> annotators,
                 std::vector<AnnotationRecord> records,
                 ReferenceMatch reference)
    : questions_(std::move(questions)),
      annotators_(std::move(annotators)),
      records_(std::move(records)),
      reference_(std::move(reference)) {
  std::stable_sort(questions_.begin(), questions_.end(),
                   [](const Question& a, const Question& b) {
                     return a.order_index < b.order_index;
                   });
  for (std::size_t i = 0; i < questions_.size(); ++i) {
    question_index_.try_emplace(questions_[i].id, i);
  }

  const std::size_t question_count = questions_.size();
  auto index_for = [&](const std::string& annotator) -> AnnotatorIndex& {
    auto [it, inserted] = annotator_index_.try_emplace(annotator);
    if (inserted) it->second.by_question.assign(question_count, kNoRecord);
    return it->second;
  };
  for (const auto& annotator : annotators_) index_for(annotator);

  std::vector<std::size_t> unknown_question_records;
  for (std::size_t r = 0; r < records_.size(); ++r) {
    const auto& record = records_[r];
    AnnotatorIndex& index = index_for(record.annotator_id);
    const std::size_t position = PositionOf(record.question_id);
    if (position == kNoRecord) {
      index.ordered.push_back(r);  // sorted to the back below
      continue;
    }
    // Duplicates keep the first record; Validate() reports the rest.
    if (index.by_question[position] == kNoRecord) {
      index.by_question[position] = r;
    }
  }
  for (auto& [annotator, index] : annotator_index_) {
    std::vector<std::size_t> ordered;
    ordered.reserve(index.ordered.size() + question_count);
    for (std::size_t r : index.by_question) {
      if (r != kNoRecord) ordered.push_back(r);
    }
    ordered.insert(ordered.end(), index.ordered.begin(), index.ordered.end());
    index.ordered = std::move(ordered);
  }
}

std::size_t Dataset::PositionOf(std::string_view question_id) const {
  auto it = question_index_.find(question_id);
  return it == question_index_.end() ? kNoRecord : it->second;
}

const Question* Dataset::FindQuestion(std::string_view question_id) const {
  const std::size_t position = PositionOf(question_id);
  return position == kNoRecord ? nullptr : &questions_[position];
}

const Question& Dataset::GetQuestion(std::string_view question_id) const {
  const Question* question = FindQuestion(question_id);
  if (question == nullptr) {
    throw NotFoundError("question not found: " + std::string(question_id));
  }
  return *question;
}

bool Dataset::HasAnnotator(std::string_view annotator_id) const {
  return annotator_index_.find(annotator_id) != annotator_index_.end();
}

const AnnotationRecord* Dataset::FindRecord(
    std::string_view annotator_id, std::string_view question_id) const {
  auto it = annotator_index_.find(annotator_id);
  if (it == annotator_index_.end()) return nullptr;
  const std::size_t position = PositionOf(question_id);
  if (position == kNoRecord) return nullptr;
  const std::size_t r = it->second.by_question[position];
  return r == kNoRecord ? nullptr : &records_[r];
}

const AnnotationRecord& Dataset::GetRecord(std::string_view annotator_id,
                                           std::string_view question_id) const {
  const AnnotationRecord* record = FindRecord(annotator_id, question_id);
  if (record == nullptr) {
    if (!HasAnnotator(annotator_id)) {
      throw NotFoundError("annotator not found: " + std::string(annotator_id));
    }
    throw NotFoundError("no record for annotator " +
                        std::string(annotator_id) + " on question " +
                        std::string(question_id));
  }
  return *record;
}

std::span<const std::size_t> Dataset::RecordIndicesOf(
    std::string_view annotator_id) const {
  auto it = annotator_index_.find(annotator_id);
  if (it == annotator_index_.end()) {
    throw NotFoundError("annotator not found: " + std::string(annotator_id));
  }
  return it->second.ordered;
}

std::vector<std::string> Dataset::AnsweredQuestions(
    std::string_view annotator_id) const {
  std::vector<std::string> ids;
  for (std::size_t r : RecordIndicesOf(annotator_id)) {
    ids.push_back(records_[r].question_id);
  }
  return ids;
}

bool Dataset::operator==(const Dataset& other) const {
  if (questions_ != other.questions_ || annotators_ != other.annotators_ ||
      reference_ != other.reference_ ||
      records_.size() != other.records_.size() ||
      annotator_index_.size() != other.annotator_index_.size()) {
    return false;
  }
  // Records compare per annotator in series order; file order is irrelevant.
  for (const auto& [annotator, index] : annotator_index_) {
    auto it = other.annotator_index_.find(annotator);
    if (it == other.annotator_index_.end() ||
        it->second.ordered.size() != index.ordered.size()) {
      return false;
    }
    for (std::size_t i = 0; i < index.ordered.size(); ++i) {
      if (records_[index.ordered[i]] !=
          other.records_[it->second.ordered[i]]) {
        return false;
      }
    }
  }
  return true;
}

SparseSimilarityMatrix BuildSimilarityMatrix(const Dataset& dataset,
                                             std::string_view annotator_id) {
  if (!dataset.HasAnnotator(annotator_id)) {
    throw NotFoundError("annotator not found");
  }
  SparseSimilarityMatrix matrix;
  for (std::size_t r : dataset.RecordIndicesOf(annotator_id)) {
    const auto& record = dataset.records()[r];
    const Question* question = dataset.FindQuestion(record.question_id);
    if (question == nullptr) continue;
    matrix.entries.emplace(question->pair, record.confidence);
  }
  return matrix;
}

std::set<AttributePair> ThresholdMatch(const SparseSimilarityMatrix& matrix,
                                       double delta) {
  std::set<AttributePair> match;
  for (const auto& [pair, value] : matrix.entries) {
    if (value > delta) match.insert(pair);
  }
  return match;
}

}  // namespace louc

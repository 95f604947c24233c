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

#include "louc/timing.hpp"

#include <algorithm>
#include <numeric>

#include "louc/errors.hpp"

namespace louc {

TimeNormalizer::TimeNormalizer(const Dataset& dataset) : dataset_(&dataset) {
  const auto& questions = dataset.questions();
  std::vector<std::vector<double>> samples(questions.size());
  for (std::size_t i = 0; i < questions.size(); ++i) {
    question_position_.emplace(questions[i].id, i);
  }
  for (const auto& annotator : dataset.annotators()) {
    for (std::size_t r : dataset.RecordIndicesOf(annotator)) {
      const auto& record = dataset.records()[r];
      auto it = question_position_.find(record.question_id);
      if (it == question_position_.end()) continue;
      samples[it->second].push_back(record.response_time_seconds);
    }
  }

  question_means_.reserve(questions.size());
  for (std::size_t i = 0; i < questions.size(); ++i) {
    auto& times = samples[i];
    if (times.empty()) {
      throw CoverageError("question " + questions[i].id +
                          " has no answers; its mean time is undefined");
    }
    // Summing in sorted order makes the mean independent of record order.
    std::sort(times.begin(), times.end());
    const double sum = std::accumulate(times.begin(), times.end(), 0.0);
    question_means_.push_back(
        {questions[i].id, sum / static_cast<double>(times.size()),
         times.size()});
  }

  for (const auto& annotator : dataset.annotators()) {
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t r : dataset.RecordIndicesOf(annotator)) {
      const auto& record = dataset.records()[r];
      auto it = question_position_.find(record.question_id);
      if (it == question_position_.end()) continue;
      sum += record.response_time_seconds -
             question_means_[it->second].mean_seconds;
      ++count;
    }
    if (count > 0) deltas_.emplace(annotator, sum / static_cast<double>(count));
  }
}

double TimeNormalizer::QuestionMean(std::string_view question_id) const {
  auto it = question_position_.find(std::string(question_id));
  if (it == question_position_.end()) {
    throw NotFoundError("question not found: " + std::string(question_id));
  }
  return question_means_[it->second].mean_seconds;
}

double TimeNormalizer::Delta(std::string_view annotator_id) const {
  auto it = deltas_.find(std::string(annotator_id));
  if (it == deltas_.end()) {
    throw NotFoundError("annotator not found or without answers: " +
                        std::string(annotator_id));
  }
  return it->second;
}

NormalizedTime TimeNormalizer::Normalize(std::string_view annotator_id,
                                         std::string_view question_id) const {
  const AnnotationRecord& record =
      dataset_->GetRecord(annotator_id, question_id);
  const double deviation =
      record.response_time_seconds - QuestionMean(question_id);
  return {deviation - Delta(annotator_id)};
}

std::vector<QuestionMeanTime> QuestionMeanTimes(const Dataset& dataset) {
  return TimeNormalizer(dataset).question_means();
}

AnsweringDelta AnsweringDeltaOf(const Dataset& dataset,
                                std::string_view annotator_id) {
  if (!dataset.HasAnnotator(annotator_id)) {
    throw NotFoundError("annotator not found: " + std::string(annotator_id));
  }
  return {std::string(annotator_id), TimeNormalizer(dataset).Delta(annotator_id)};
}

NormalizedTime NormalizedTimeOf(const Dataset& dataset,
                                std::string_view annotator_id,
                                std::string_view question_id) {
  return TimeNormalizer(dataset).Normalize(annotator_id, question_id);
}

}  // namespace louc

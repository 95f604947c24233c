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

#include "louc/measures.hpp"

#include <cmath>
#include <unordered_set>

#include "louc/errors.hpp"

namespace louc {
namespace {

void CheckConfidence(double confidence) {
  if (!(confidence >= 0.0 && confidence <= 1.0)) {
    throw RangeError("confidence outside [0, 1]: " +
                     std::to_string(confidence));
  }
}

}  // namespace

std::string_view ToString(Outcome outcome) {
  switch (outcome) {
    case Outcome::kTP:
      return "TP";
    case Outcome::kFP:
      return "FP";
    case Outcome::kTN:
      return "TN";
    case Outcome::kFN:
      return "FN";
  }
  return "?";
}

double NormalizeConfidence(double confidence) {
  CheckConfidence(confidence);
  // Measure from the upper half so that c and 1 - c agree bit for bit: for
  // c >= 0.5 the subtraction 1 - c is exact.
  const double upper = confidence >= 0.5 ? confidence : 1.0 - confidence;
  return 2.0 * (upper - 0.5);
}

bool PredictedLabel(double confidence) {
  CheckConfidence(confidence);
  return confidence > kMatchThreshold;
}

Outcome ConfusionOutcome(const AnnotationRecord& record,
                         const Question& question) {
  if (record.question_id != question.id) {
    throw ArgumentError("record for question " + record.question_id +
                        " paired with question " + question.id);
  }
  const bool predicted = PredictedLabel(record.confidence);
  if (predicted) return question.true_label ? Outcome::kTP : Outcome::kFP;
  return question.true_label ? Outcome::kFN : Outcome::kTN;
}

Decision MakeDecision(const AnnotationRecord& record,
                      const Question& question) {
  return Decision{&question, &record, ConfusionOutcome(record, question),
                  NormalizeConfidence(record.confidence)};
}

std::vector<Decision> CollectDecisions(const Dataset& dataset,
                                       std::string_view annotator_id,
                                       const QuestionSubset& subset) {
  if (!dataset.HasAnnotator(annotator_id)) {
    throw NotFoundError("annotator not found: " + std::string(annotator_id));
  }
  std::vector<Decision> decisions;
  decisions.reserve(subset.size());
  std::unordered_set<std::string_view> seen;
  for (const auto& question_id : subset) {
    if (!seen.insert(question_id).second) {
      throw ArgumentError("question listed twice in subset: " + question_id);
    }
    const Question* question = dataset.FindQuestion(question_id);
    if (question == nullptr) {
      throw CoverageError("subset question not in dataset: " + question_id);
    }
    const AnnotationRecord* record =
        dataset.FindRecord(annotator_id, question_id);
    if (record == nullptr) {
      throw CoverageError("annotator " + std::string(annotator_id) +
                          " did not answer question " + question_id);
    }
    decisions.push_back(MakeDecision(*record, *question));
  }
  return decisions;
}

std::vector<Decision> CollectDecisions(const Dataset& dataset,
                                       std::string_view annotator_id) {
  std::vector<Decision> decisions;
  for (std::size_t r : dataset.RecordIndicesOf(annotator_id)) {
    const auto& record = dataset.records()[r];
    const Question* question = dataset.FindQuestion(record.question_id);
    if (question == nullptr) {
      throw CoverageError("record references unknown question " +
                          record.question_id);
    }
    decisions.push_back(MakeDecision(record, *question));
  }
  return decisions;
}

double AccuracyOf(std::span<const Decision> decisions) {
  if (decisions.empty()) {
    throw UndefinedMeasureError("accuracy of an empty question subset");
  }
  std::size_t correct = 0;
  for (const auto& d : decisions) correct += IsCorrect(d.outcome) ? 1 : 0;
  return static_cast<double>(correct) / static_cast<double>(decisions.size());
}

std::optional<double> PrecisionOf(std::span<const Decision> decisions) {
  std::size_t positives = 0;
  std::size_t true_positives = 0;
  for (const auto& d : decisions) {
    if (!IsPredictedMatch(d.outcome)) continue;
    ++positives;
    if (d.outcome == Outcome::kTP) ++true_positives;
  }
  if (positives == 0) return std::nullopt;
  return static_cast<double>(true_positives) / static_cast<double>(positives);
}

std::optional<double> MeanNormalizedConfidenceOf(
    std::span<const Decision> decisions, OutcomeSet filter) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& d : decisions) {
    if (!filter.Contains(d.outcome)) continue;
    sum += d.normalized_confidence;
    ++count;
  }
  if (count == 0) return std::nullopt;
  return sum / static_cast<double>(count);
}

double Accuracy(const Dataset& dataset, std::string_view annotator_id,
                const QuestionSubset& subset) {
  return AccuracyOf(CollectDecisions(dataset, annotator_id, subset));
}

std::optional<double> Precision(const Dataset& dataset,
                                std::string_view annotator_id,
                                const QuestionSubset& subset) {
  return PrecisionOf(CollectDecisions(dataset, annotator_id, subset));
}

std::optional<double> MeanNormalizedConfidence(const Dataset& dataset,
                                               std::string_view annotator_id,
                                               const QuestionSubset& subset,
                                               OutcomeSet filter) {
  return MeanNormalizedConfidenceOf(
      CollectDecisions(dataset, annotator_id, subset), filter);
}

}  // namespace louc

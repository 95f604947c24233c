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

#ifndef LOUC_MEASURES_HPP_
#define LOUC_MEASURES_HPP_

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "louc/dataset.hpp"

namespace louc {

// Confusion outcome of one decision against the reference match.
enum class Outcome : std::uint8_t { kTP = 0, kFP = 1, kTN = 2, kFN = 3 };

std::string_view ToString(Outcome outcome);

constexpr bool IsPredictedMatch(Outcome o) {
  return o == Outcome::kTP || o == Outcome::kFP;
}
constexpr bool IsCorrect(Outcome o) {
  return o == Outcome::kTP || o == Outcome::kTN;
}

// Small set of outcome kinds, used to restrict mean confidence.
class OutcomeSet {
 public:
  constexpr OutcomeSet() = default;
  constexpr OutcomeSet(std::initializer_list<Outcome> outcomes) {
    for (Outcome o : outcomes) bits_ |= Bit(o);
  }
  static constexpr OutcomeSet All() {
    return {Outcome::kTP, Outcome::kFP, Outcome::kTN, Outcome::kFN};
  }
  // The decisions precision looks at.
  static constexpr OutcomeSet PredictedMatches() {
    return {Outcome::kTP, Outcome::kFP};
  }
  constexpr bool Contains(Outcome o) const { return (bits_ & Bit(o)) != 0; }

 private:
  static constexpr std::uint8_t Bit(Outcome o) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(o));
  }
  std::uint8_t bits_ = 0;
};

// Ids of a subset of the dataset's questions. Order is irrelevant; ids must
// be distinct.
using QuestionSubset = std::vector<std::string>;

// 2 * |confidence - 0.5|. Throws RangeError outside [0, 1].
double NormalizeConfidence(double confidence);

// confidence > 0.5. Throws RangeError outside [0, 1].
bool PredictedLabel(double confidence);

// Throws ArgumentError when the record belongs to another question.
Outcome ConfusionOutcome(const AnnotationRecord& record,
                         const Question& question);

// One answered question with everything the measures need.
struct Decision {
  const Question* question = nullptr;
  const AnnotationRecord* record = nullptr;
  Outcome outcome = Outcome::kTN;
  double normalized_confidence = 0.0;
};

Decision MakeDecision(const AnnotationRecord& record, const Question& question);

// Decisions of `annotator_id` on every question of `subset`, in subset
// order. Throws NotFoundError for an unknown annotator, CoverageError when a
// question is unknown or unanswered and ArgumentError on repeated ids.
std::vector<Decision> CollectDecisions(const Dataset& dataset,
                                       std::string_view annotator_id,
                                       const QuestionSubset& subset);

// All decisions of the annotator, in series order.
std::vector<Decision> CollectDecisions(const Dataset& dataset,
                                       std::string_view annotator_id);

// Measures over already collected decisions.
//
// AccuracyOf throws UndefinedMeasureError on an empty span. The other two
// return std::nullopt when nothing is left to average over.
double AccuracyOf(std::span<const Decision> decisions);
std::optional<double> PrecisionOf(std::span<const Decision> decisions);
std::optional<double> MeanNormalizedConfidenceOf(
    std::span<const Decision> decisions,
    OutcomeSet filter = OutcomeSet::All());

// Dataset-level forms of the measures above.
double Accuracy(const Dataset& dataset, std::string_view annotator_id,
                const QuestionSubset& subset);
std::optional<double> Precision(const Dataset& dataset,
                                std::string_view annotator_id,
                                const QuestionSubset& subset);
std::optional<double> MeanNormalizedConfidence(
    const Dataset& dataset, std::string_view annotator_id,
    const QuestionSubset& subset, OutcomeSet filter = OutcomeSet::All());

}  // namespace louc

#endif  // LOUC_MEASURES_HPP_

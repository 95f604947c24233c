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

#include "louc/calibration.hpp"

#include <string>

#include "louc/errors.hpp"

namespace louc {

std::string_view ToString(Basis basis) {
  return basis == Basis::kAccuracy ? "accuracy" : "precision";
}

std::string_view ToString(ConfidenceClass c) {
  switch (c) {
    case ConfidenceClass::kUnderConfident:
      return "under_confident";
    case ConfidenceClass::kCalibrated:
      return "calibrated";
    case ConfidenceClass::kOverConfident:
      return "over_confident";
  }
  return "?";
}

CalibrationValue CalAccuracyOf(std::span<const Decision> decisions) {
  if (decisions.empty()) {
    throw UndefinedMeasureError("calibration of an empty question subset");
  }
  const double confidence = *MeanNormalizedConfidenceOf(decisions);
  return {confidence - AccuracyOf(decisions), Basis::kAccuracy};
}

CalibrationValue CalPrecisionOf(std::span<const Decision> decisions) {
  const auto precision = PrecisionOf(decisions);
  if (!precision) return {std::nullopt, Basis::kPrecision};
  const auto confidence =
      MeanNormalizedConfidenceOf(decisions, OutcomeSet::PredictedMatches());
  return {*confidence - *precision, Basis::kPrecision};
}

CalibrationValue CalibrationOf(std::span<const Decision> decisions,
                               Basis basis) {
  return basis == Basis::kAccuracy ? CalAccuracyOf(decisions)
                                   : CalPrecisionOf(decisions);
}

CalibrationValue CalAccuracy(const Dataset& dataset,
                             std::string_view annotator_id,
                             const QuestionSubset& subset) {
  return CalAccuracyOf(CollectDecisions(dataset, annotator_id, subset));
}

CalibrationValue CalPrecision(const Dataset& dataset,
                              std::string_view annotator_id,
                              const QuestionSubset& subset) {
  return CalPrecisionOf(CollectDecisions(dataset, annotator_id, subset));
}

CalibrationValue Calibration(const Dataset& dataset,
                             std::string_view annotator_id,
                             const QuestionSubset& subset, Basis basis) {
  return CalibrationOf(CollectDecisions(dataset, annotator_id, subset), basis);
}

ConfidenceClass Classify(const CalibrationValue& cal, double epsilon) {
  if (!(epsilon >= 0.0)) {
    throw RangeError("epsilon must be non-negative");
  }
  if (!cal.value) {
    throw UndefinedMeasureError("cannot classify an undefined calibration");
  }
  if (*cal.value < -epsilon) return ConfidenceClass::kUnderConfident;
  if (*cal.value > epsilon) return ConfidenceClass::kOverConfident;
  return ConfidenceClass::kCalibrated;
}

}  // namespace louc

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

#ifndef LOUC_CALIBRATION_HPP_
#define LOUC_CALIBRATION_HPP_

#include <optional>
#include <span>
#include <string_view>

#include "louc/dataset.hpp"
#include "louc/measures.hpp"

namespace louc {

// Performance measure a calibration (or LOUC value) is taken against.
enum class Basis { kAccuracy, kPrecision };

std::string_view ToString(Basis basis);

// Mean normalized confidence minus performance. Negative values mean the
// annotator is under-confident, positive values over-confident. `value` is
// empty when the basis measure is undefined on the subset.
struct CalibrationValue {
  std::optional<double> value;
  Basis basis = Basis::kAccuracy;

  bool defined() const { return value.has_value(); }
};

enum class ConfidenceClass { kUnderConfident, kCalibrated, kOverConfident };

std::string_view ToString(ConfidenceClass c);

// Mean normalized confidence over all decisions minus accuracy. Throws
// UndefinedMeasureError on an empty span.
CalibrationValue CalAccuracyOf(std::span<const Decision> decisions);

// Mean normalized confidence over TP and FP decisions minus precision.
// Undefined when there is no predicted match.
CalibrationValue CalPrecisionOf(std::span<const Decision> decisions);

CalibrationValue CalibrationOf(std::span<const Decision> decisions,
                               Basis basis);

// Dataset-level forms. The annotator must have answered every question of
// `subset` (CoverageError otherwise).
CalibrationValue CalAccuracy(const Dataset& dataset,
                             std::string_view annotator_id,
                             const QuestionSubset& subset);
CalibrationValue CalPrecision(const Dataset& dataset,
                              std::string_view annotator_id,
                              const QuestionSubset& subset);
CalibrationValue Calibration(const Dataset& dataset,
                             std::string_view annotator_id,
                             const QuestionSubset& subset, Basis basis);

// value < -epsilon: under-confident; value > epsilon: over-confident;
// otherwise calibrated (the band is closed). Throws UndefinedMeasureError for
// an undefined calibration and RangeError for a negative epsilon.
ConfidenceClass Classify(const CalibrationValue& cal, double epsilon);

// Default tolerance band used by the command line tool.
inline constexpr double kDefaultEpsilon = 0.05;

}  // namespace louc

#endif  // LOUC_CALIBRATION_HPP_

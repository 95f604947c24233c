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

#ifndef LOUC_LOUC_HPP_
#define LOUC_LOUC_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "louc/calibration.hpp"
#include "louc/dataset.hpp"
#include "louc/measures.hpp"

namespace louc {

// Leave-one-out calibration of one decision:
//
//   |Cal(Q_h)| - |Cal(Q_h \ {q})|
//
// where Q_h is everything the annotator answered. Negative values mark
// decisions whose presence brings the annotator closer to calibration.
struct LoucValue {
  double value = 0.0;
  Basis basis = Basis::kAccuracy;
  // Set for TN and FN decisions under the precision basis: they never enter
  // precision-based calibration, so the value is 0 by construction.
  bool structurally_zero = false;
};

enum class LoucStatus {
  kValue,
  // The leave-one-out set has no defined calibration (the annotator answered
  // a single question, or q was their only predicted match).
  kDegenerate,
};

struct LoucEntry {
  std::string question_id;
  LoucStatus status = LoucStatus::kValue;
  // Meaningful only when status == kValue.
  LoucValue louc;
};

// LOUC of the annotator's decision on `question_id`.
//
// Throws NotFoundError for a missing record, DegenerateError when the
// leave-one-out calibration is undefined and UndefinedMeasureError when the
// calibration over the full answered set is.
LoucValue Louc(const Dataset& dataset, std::string_view annotator_id,
               std::string_view question_id, Basis basis);

// LOUC of every decision of the annotator, in series order. Degenerate
// decisions are kept with status kDegenerate.
std::vector<LoucEntry> LoucAll(const Dataset& dataset,
                               std::string_view annotator_id, Basis basis);

// Same computation over an explicit decision list (the base set Q_h).
std::vector<LoucEntry> LoucAllOf(std::span<const Decision> decisions,
                                 Basis basis);

}  // namespace louc

#endif  // LOUC_LOUC_HPP_

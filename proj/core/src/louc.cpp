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

#include "louc/louc.hpp"

#include <cmath>
#include <optional>

#include "louc/errors.hpp"

namespace louc {
namespace {

// Running sums over the base set; each leave-one-out calibration is derived
// by subtracting one decision instead of re-scanning the set.
class LeaveOneOut {
 public:
  LeaveOneOut(std::span<const Decision> decisions, Basis basis)
      : basis_(basis) {
    for (const auto& d : decisions) {
      if (basis == Basis::kPrecision && !IsPredictedMatch(d.outcome)) continue;
      ++count_;
      confidence_sum_ += d.normalized_confidence;
      hits_ += (basis == Basis::kAccuracy ? IsCorrect(d.outcome)
                                          : d.outcome == Outcome::kTP)
                   ? 1
                   : 0;
    }
    if (!decisions.empty()) {
      const auto full = CalibrationOf(decisions, basis).value;
      has_full_ = full.has_value();
      full_ = full.value_or(0.0);
    }
  }

  bool Excluded(const Decision& d) const {
    return basis_ == Basis::kPrecision && !IsPredictedMatch(d.outcome);
  }

  std::optional<double> full() const {
    return has_full_ ? std::optional<double>(full_) : std::nullopt;
  }

  // Calibration of the base set without `d`; nullopt when nothing is left.
  std::optional<double> Without(const Decision& d) const {
    if (count_ <= 1) return std::nullopt;
    const bool hit = basis_ == Basis::kAccuracy ? IsCorrect(d.outcome)
                                                : d.outcome == Outcome::kTP;
    const double rest = static_cast<double>(count_ - 1);
    const double confidence = (confidence_sum_ - d.normalized_confidence) / rest;
    const double performance = static_cast<double>(hits_ - (hit ? 1 : 0)) / rest;
    return confidence - performance;
  }

  Basis basis() const { return basis_; }

 private:
  Basis basis_;
  std::size_t count_ = 0;
  std::size_t hits_ = 0;
  double confidence_sum_ = 0.0;
  bool has_full_ = false;
  double full_ = 0.0;
};

enum class Failure { kNone, kDegenerate, kUndefinedBase };

Failure Evaluate(const LeaveOneOut& loo, const Decision& d, LoucValue* out) {
  out->basis = loo.basis();
  if (loo.Excluded(d)) {
    out->value = 0.0;
    out->structurally_zero = true;
    return Failure::kNone;
  }
  if (!loo.full()) return Failure::kUndefinedBase;
  const auto without = loo.Without(d);
  if (!without) return Failure::kDegenerate;
  out->value = std::fabs(*loo.full()) - std::fabs(*without);
  out->structurally_zero = false;
  return Failure::kNone;
}

}  // namespace

LoucValue Louc(const Dataset& dataset, std::string_view annotator_id,
               std::string_view question_id, Basis basis) {
  // Surfaces NotFoundError for a missing record before any work.
  dataset.GetRecord(annotator_id, question_id);
  const auto decisions = CollectDecisions(dataset, annotator_id);
  const LeaveOneOut loo(decisions, basis);
  for (const auto& d : decisions) {
    if (d.question->id != question_id) continue;
    LoucValue result;
    switch (Evaluate(loo, d, &result)) {
      case Failure::kNone:
        return result;
      case Failure::kDegenerate:
        throw DegenerateError("leave-one-out set of question " +
                              std::string(question_id) + " for annotator " +
                              std::string(annotator_id) +
                              " has no defined " +
                              std::string(ToString(basis)) + " calibration");
      case Failure::kUndefinedBase:
        throw UndefinedMeasureError(
            std::string(ToString(basis)) + " calibration of annotator " +
            std::string(annotator_id) + " is undefined");
    }
  }
  throw NotFoundError("no decision for question " + std::string(question_id));
}

std::vector<LoucEntry> LoucAllOf(std::span<const Decision> decisions,
                                 Basis basis) {
  const LeaveOneOut loo(decisions, basis);
  std::vector<LoucEntry> entries;
  entries.reserve(decisions.size());
  for (const auto& d : decisions) {
    LoucEntry entry;
    entry.question_id = d.question->id;
    switch (Evaluate(loo, d, &entry.louc)) {
      case Failure::kNone:
        break;
      case Failure::kDegenerate:
        entry.status = LoucStatus::kDegenerate;
        break;
      case Failure::kUndefinedBase:
        throw UndefinedMeasureError(std::string(ToString(basis)) +
                                    " calibration of the base set is undefined");
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<LoucEntry> LoucAll(const Dataset& dataset,
                               std::string_view annotator_id, Basis basis) {
  return LoucAllOf(CollectDecisions(dataset, annotator_id), basis);
}

}  // namespace louc

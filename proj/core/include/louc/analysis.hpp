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

#ifndef LOUC_ANALYSIS_HPP_
#define LOUC_ANALYSIS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "louc/calibration.hpp"
#include "louc/dataset.hpp"
#include "louc/figure_table.hpp"
#include "louc/timing.hpp"

namespace louc {

// Cohort-level analyses. Everything here is composed from the measures,
// calibration, timing and louc modules; only means and counts are added.

struct CohortSummary {
  std::size_t annotator_count = 0;
  std::size_t decision_count = 0;
  std::size_t predicted_positive_count = 0;
  std::size_t predicted_negative_count = 0;
  double predicted_positive_fraction = 0.0;
  double predicted_negative_fraction = 0.0;
  // Pooled over all decisions.
  double mean_normalized_confidence_overall = 0.0;
  // Mean over annotators of their summed response times.
  double mean_session_minutes = 0.0;
  // Pooled over all decisions.
  double mean_decision_seconds = 0.0;
};

CohortSummary Summarize(const Dataset& dataset);
FigureTable SummaryTable(const CohortSummary& summary);

// Pooled confusion counts: one row per (real label, predicted label) with the
// count and its share of the real-label row.
FigureTable ConfusionAggregate(const Dataset& dataset);

enum class TimeGroupKind { kFast, kSlow };

struct TimeGroup {
  TimeGroupKind kind = TimeGroupKind::kFast;
  std::vector<std::string> member_ids;
  // Mean of the members' mean response times minus the global mean; 0 for an
  // empty group.
  double mean_offset_seconds = 0.0;
};

struct TimeGroups {
  TimeGroup fast;
  TimeGroup slow;
  // Unweighted mean of per-annotator mean response times.
  double global_mean_seconds = 0.0;
  double threshold_seconds = 0.0;
  // Set when one of the groups is empty.
  bool degenerate = false;
};

// Annotators whose mean response time is <= threshold are fast. The
// threshold defaults to the global mean. Throws DegenerateError for fewer
// than two annotators.
TimeGroups SplitTimeGroups(const Dataset& dataset,
                           std::optional<double> threshold = std::nullopt);

struct QuantileBinning {
  std::string annotator_id;
  int bin_count = 0;
  // Question ids per bin, fastest normalized times first.
  std::vector<std::vector<std::string>> bins;

  // Bin of a question, or -1 when the annotator did not answer it.
  int BinOf(std::string_view question_id) const;
};

// Sorts the annotator's decisions by normalized response time (ties by
// order_index) and cuts them into `bin_count` contiguous groups whose sizes
// differ by at most one, larger groups first. Throws DegenerateError when the
// annotator answered fewer than bin_count questions or bin_count < 2.
QuantileBinning QuantileBins(const Dataset& dataset, const TimeNormalizer& times,
                             std::string_view annotator_id, int bin_count);
QuantileBinning QuantileBins(const Dataset& dataset,
                             std::string_view annotator_id, int bin_count);

// Mean precision-based calibration per (time group, quantile bin). Columns:
// time_group, quantile (1-based), mean_cal_precision, annotators, dropped.
// Annotator bins with undefined calibration are dropped and counted; cells
// without any defined value are omitted. Annotators answering fewer than
// bin_count questions are skipped.
FigureTable CalibrationByTimeQuantile(
    const Dataset& dataset, int bin_count = 3,
    std::optional<double> threshold = std::nullopt);

// What is measured per annotator and real label.
enum class LabelMetric {
  kNormalizedConfidence,
  kAccuracy,
  kCalAccuracy,
  kCalPrecision,
};

struct LabelDistribution {
  // annotator_id, real_label, value
  FigureTable per_annotator;
  // real_label, annotators, dropped, mean, min, q1, median, q3, max
  FigureTable summary;
};

// Per annotator, `metric` over the true-match questions and over the
// true-non-match questions separately. Undefined values are dropped and
// counted per label.
LabelDistribution CalibrationByRealLabel(const Dataset& dataset,
                                         LabelMetric metric);

// One row per annotator over everything they answered: annotator_id,
// mean_normalized_confidence, accuracy, cal_accuracy.
FigureTable CalibrationScatter(const Dataset& dataset);

// One row per decision: annotator_id, question_id, normalized_time, louc,
// structural_zero, degenerate, real_label, predicted_label, outcome. louc is
// null for degenerate decisions.
FigureTable LoucScatter(const Dataset& dataset, Basis basis);
FigureTable LoucScatter(const Dataset& dataset, const TimeNormalizer& times,
                        Basis basis);

// Values within this distance of zero count as zero in sign statistics.
inline constexpr double kLoucZeroTolerance = 1e-12;

// Per real label: decisions, structural_zero, degenerate, eligible (the
// rest), negative, zero, positive, negative_fraction, positive_fraction.
// Fractions are taken over eligible decisions.
FigureTable LoucSignFractions(const Dataset& dataset, Basis basis);

// Min, quartiles and max with linear interpolation between order statistics.
struct Quartiles {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};
// Throws UndefinedMeasureError on empty input.
Quartiles ComputeQuartiles(std::vector<double> values);

struct FigureOptions {
  bool accuracy = true;
  bool precision = true;
  int bin_count = 3;
  std::optional<double> time_threshold;
};

// Every figure table, named fig1a ... fig3f plus distribution summaries and
// LOUC sign fractions. LOUC figures follow the requested bases.
std::vector<FigureTable> BuildFigures(const Dataset& dataset,
                                      const FigureOptions& options);

}  // namespace louc

#endif  // LOUC_ANALYSIS_HPP_

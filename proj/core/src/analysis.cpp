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

#include "louc/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <tuple>

#include "louc/errors.hpp"
#include "louc/louc.hpp"
#include "louc/measures.hpp"

namespace louc {
namespace {

Cell Text(std::string s) { return Cell(std::move(s)); }
Cell Int(std::size_t n) { return Cell(static_cast<std::int64_t>(n)); }
Cell Real(double x) { return Cell(x); }
Cell Real(const std::optional<double>& x) {
  return x ? Cell(*x) : Cell(std::monostate{});
}
Cell Flag(bool b) { return Cell(b); }

std::string LabelName(bool true_label) {
  return true_label ? "match" : "non_match";
}

std::string_view GroupName(TimeGroupKind kind) {
  return kind == TimeGroupKind::kFast ? "fast" : "slow";
}

double Mean(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double MeanResponseTime(const Dataset& dataset, std::string_view annotator) {
  double sum = 0.0;
  const auto indices = dataset.RecordIndicesOf(annotator);
  for (std::size_t r : indices) {
    sum += dataset.records()[r].response_time_seconds;
  }
  return sum / static_cast<double>(indices.size());
}

}  // namespace

CohortSummary Summarize(const Dataset& dataset) {
  CohortSummary summary;
  summary.annotator_count = dataset.annotators().size();
  summary.decision_count = dataset.records().size();

  double confidence_sum = 0.0;
  double time_sum = 0.0;
  for (const auto& record : dataset.records()) {
    if (PredictedLabel(record.confidence)) {
      ++summary.predicted_positive_count;
    } else {
      ++summary.predicted_negative_count;
    }
    confidence_sum += NormalizeConfidence(record.confidence);
    time_sum += record.response_time_seconds;
  }
  if (summary.decision_count > 0) {
    const auto n = static_cast<double>(summary.decision_count);
    summary.predicted_positive_fraction =
        static_cast<double>(summary.predicted_positive_count) / n;
    summary.predicted_negative_fraction =
        static_cast<double>(summary.predicted_negative_count) / n;
    summary.mean_normalized_confidence_overall = confidence_sum / n;
    summary.mean_decision_seconds = time_sum / n;
  }

  std::vector<double> session_minutes;
  for (const auto& annotator : dataset.annotators()) {
    double seconds = 0.0;
    for (std::size_t r : dataset.RecordIndicesOf(annotator)) {
      seconds += dataset.records()[r].response_time_seconds;
    }
    session_minutes.push_back(seconds / 60.0);
  }
  if (!session_minutes.empty()) summary.mean_session_minutes = Mean(session_minutes);
  return summary;
}

FigureTable SummaryTable(const CohortSummary& s) {
  FigureTable table("summary", {"metric", "value"});
  table.AddRow({Text("annotator_count"), Int(s.annotator_count)});
  table.AddRow({Text("decision_count"), Int(s.decision_count)});
  table.AddRow({Text("predicted_positive_count"), Int(s.predicted_positive_count)});
  table.AddRow({Text("predicted_negative_count"), Int(s.predicted_negative_count)});
  table.AddRow({Text("predicted_positive_fraction"), Real(s.predicted_positive_fraction)});
  table.AddRow({Text("predicted_negative_fraction"), Real(s.predicted_negative_fraction)});
  table.AddRow({Text("mean_normalized_confidence_overall"),
                Real(s.mean_normalized_confidence_overall)});
  table.AddRow({Text("mean_session_minutes"), Real(s.mean_session_minutes)});
  table.AddRow({Text("mean_decision_seconds"), Real(s.mean_decision_seconds)});
  return table;
}

FigureTable ConfusionAggregate(const Dataset& dataset) {
  std::array<std::size_t, 4> counts{};
  for (const auto& record : dataset.records()) {
    const Question& question = dataset.GetQuestion(record.question_id);
    ++counts[static_cast<std::size_t>(ConfusionOutcome(record, question))];
  }
  auto count = [&](Outcome o) { return counts[static_cast<std::size_t>(o)]; };

  FigureTable table("confusion", {"real_label", "predicted_label", "outcome",
                                  "count", "row_rate"});
  auto add_row = [&](bool real, Outcome positive, Outcome negative) {
    const std::size_t total = count(positive) + count(negative);
    for (Outcome o : {positive, negative}) {
      std::optional<double> rate;
      if (total > 0) {
        rate = static_cast<double>(count(o)) / static_cast<double>(total);
      }
      table.AddRow({Text(LabelName(real)), Text(LabelName(IsPredictedMatch(o))),
                    Text(std::string(ToString(o))), Int(count(o)), Real(rate)});
    }
  };
  add_row(true, Outcome::kTP, Outcome::kFN);
  add_row(false, Outcome::kFP, Outcome::kTN);
  return table;
}

TimeGroups SplitTimeGroups(const Dataset& dataset,
                           std::optional<double> threshold) {
  const auto& annotators = dataset.annotators();
  if (annotators.size() < 2) {
    throw DegenerateError("splitting into time groups needs >= 2 annotators");
  }
  std::vector<double> means;
  for (const auto& annotator : annotators) {
    means.push_back(MeanResponseTime(dataset, annotator));
  }
  TimeGroups groups;
  groups.fast.kind = TimeGroupKind::kFast;
  groups.slow.kind = TimeGroupKind::kSlow;
  groups.global_mean_seconds = Mean(means);
  groups.threshold_seconds = threshold.value_or(groups.global_mean_seconds);

  std::vector<double> fast_means;
  std::vector<double> slow_means;
  for (std::size_t i = 0; i < annotators.size(); ++i) {
    if (means[i] <= groups.threshold_seconds) {
      groups.fast.member_ids.push_back(annotators[i]);
      fast_means.push_back(means[i]);
    } else {
      groups.slow.member_ids.push_back(annotators[i]);
      slow_means.push_back(means[i]);
    }
  }
  if (!fast_means.empty()) {
    groups.fast.mean_offset_seconds = Mean(fast_means) - groups.global_mean_seconds;
  }
  if (!slow_means.empty()) {
    groups.slow.mean_offset_seconds = Mean(slow_means) - groups.global_mean_seconds;
  }
  groups.degenerate = fast_means.empty() || slow_means.empty();
  return groups;
}

int QuantileBinning::BinOf(std::string_view question_id) const {
  for (std::size_t b = 0; b < bins.size(); ++b) {
    for (const auto& id : bins[b]) {
      if (id == question_id) return static_cast<int>(b);
    }
  }
  return -1;
}

QuantileBinning QuantileBins(const Dataset& dataset, const TimeNormalizer& times,
                             std::string_view annotator_id, int bin_count) {
  if (bin_count < 2) throw DegenerateError("bin_count must be >= 2");
  const auto answered = dataset.AnsweredQuestions(annotator_id);
  if (answered.size() < static_cast<std::size_t>(bin_count)) {
    throw DegenerateError("annotator " + std::string(annotator_id) +
                          " answered " + std::to_string(answered.size()) +
                          " questions, fewer than " +
                          std::to_string(bin_count) + " bins");
  }
  struct Item {
    double time;
    int order;
    const std::string* id;
  };
  std::vector<Item> items;
  for (const auto& id : answered) {
    items.push_back({times.Normalize(annotator_id, id).value_seconds,
                     dataset.GetQuestion(id).order_index, &id});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return std::tie(a.time, a.order) < std::tie(b.time, b.order);
  });

  QuantileBinning binning;
  binning.annotator_id = std::string(annotator_id);
  binning.bin_count = bin_count;
  binning.bins.resize(bin_count);
  const std::size_t k = static_cast<std::size_t>(bin_count);
  const std::size_t base = items.size() / k;
  const std::size_t extra = items.size() % k;
  std::size_t next = 0;
  for (std::size_t b = 0; b < k; ++b) {
    const std::size_t size = base + (b < extra ? 1 : 0);
    for (std::size_t i = 0; i < size; ++i) {
      binning.bins[b].push_back(*items[next++].id);
    }
  }
  return binning;
}

QuantileBinning QuantileBins(const Dataset& dataset,
                             std::string_view annotator_id, int bin_count) {
  if (!dataset.HasAnnotator(annotator_id)) {
    throw NotFoundError("annotator not found: " + std::string(annotator_id));
  }
  return QuantileBins(dataset, TimeNormalizer(dataset), annotator_id, bin_count);
}

FigureTable CalibrationByTimeQuantile(const Dataset& dataset, int bin_count,
                                      std::optional<double> threshold) {
  if (bin_count < 2) throw DegenerateError("bin_count must be >= 2");
  const TimeNormalizer times(dataset);
  const TimeGroups groups = SplitTimeGroups(dataset, threshold);

  struct BinTotals {
    double sum = 0.0;
    std::size_t defined = 0;
    std::size_t dropped = 0;
  };
  FigureTable table("calibration_by_time_quantile",
                    {"time_group", "quantile", "mean_cal_precision",
                     "annotators", "dropped"});
  for (const TimeGroup* group : {&groups.fast, &groups.slow}) {
    std::vector<BinTotals> cells(static_cast<std::size_t>(bin_count));
    for (const auto& annotator : group->member_ids) {
      if (dataset.RecordIndicesOf(annotator).size() <
          static_cast<std::size_t>(bin_count)) {
        continue;
      }
      const auto binning = QuantileBins(dataset, times, annotator, bin_count);
      for (std::size_t b = 0; b < binning.bins.size(); ++b) {
        const auto cal = CalPrecision(dataset, annotator, binning.bins[b]);
        if (cal.value) {
          cells[b].sum += *cal.value;
          ++cells[b].defined;
        } else {
          ++cells[b].dropped;
        }
      }
    }
    for (std::size_t b = 0; b < cells.size(); ++b) {
      if (cells[b].defined == 0) continue;
      table.AddRow({Text(std::string(GroupName(group->kind))), Int(b + 1),
                    Real(cells[b].sum / static_cast<double>(cells[b].defined)),
                    Int(cells[b].defined), Int(cells[b].dropped)});
    }
  }
  return table;
}

Quartiles ComputeQuartiles(std::vector<double> values) {
  if (values.empty()) throw UndefinedMeasureError("quartiles of no values");
  std::sort(values.begin(), values.end());
  auto at = [&](double p) {
    const double position = p * static_cast<double>(values.size() - 1);
    const auto lower = static_cast<std::size_t>(std::floor(position));
    const std::size_t upper = std::min(lower + 1, values.size() - 1);
    const double fraction = position - static_cast<double>(lower);
    return values[lower] + fraction * (values[upper] - values[lower]);
  };
  return {values.front(), at(0.25), at(0.5), at(0.75), values.back()};
}

LabelDistribution CalibrationByRealLabel(const Dataset& dataset,
                                         LabelMetric metric) {
  auto evaluate = [metric](std::span<const Decision> d) -> std::optional<double> {
    if (d.empty()) return std::nullopt;
    switch (metric) {
      case LabelMetric::kNormalizedConfidence:
        return MeanNormalizedConfidenceOf(d);
      case LabelMetric::kAccuracy:
        return AccuracyOf(d);
      case LabelMetric::kCalAccuracy:
        return CalAccuracyOf(d).value;
      case LabelMetric::kCalPrecision:
        return CalPrecisionOf(d).value;
    }
    return std::nullopt;
  };

  LabelDistribution out{
      FigureTable("by_real_label", {"annotator_id", "real_label", "value"}),
      FigureTable("by_real_label_summary",
                  {"real_label", "annotators", "dropped", "mean", "min", "q1",
                   "median", "q3", "max"})};
  std::map<bool, std::vector<double>> values;
  std::map<bool, std::size_t> dropped;
  for (const auto& annotator : dataset.annotators()) {
    const auto decisions = CollectDecisions(dataset, annotator);
    for (bool label : {true, false}) {
      std::vector<Decision> part;
      for (const auto& d : decisions) {
        if (d.question->true_label == label) part.push_back(d);
      }
      const auto value = evaluate(part);
      if (!value) {
        ++dropped[label];
        continue;
      }
      values[label].push_back(*value);
      out.per_annotator.AddRow({Text(annotator), Text(LabelName(label)), Real(*value)});
    }
  }
  for (bool label : {true, false}) {
    const auto& v = values[label];
    if (v.empty()) {
      out.summary.AddRow({Text(LabelName(label)), Int(0), Int(dropped[label]),
                          Cell{}, Cell{}, Cell{}, Cell{}, Cell{}, Cell{}});
      continue;
    }
    const Quartiles q = ComputeQuartiles(v);
    out.summary.AddRow({Text(LabelName(label)), Int(v.size()), Int(dropped[label]),
                        Real(Mean(v)), Real(q.min), Real(q.q1), Real(q.median),
                        Real(q.q3), Real(q.max)});
  }
  return out;
}

FigureTable CalibrationScatter(const Dataset& dataset) {
  FigureTable table("calibration_scatter",
                    {"annotator_id", "mean_normalized_confidence", "accuracy",
                     "cal_accuracy"});
  for (const auto& annotator : dataset.annotators()) {
    const auto decisions = CollectDecisions(dataset, annotator);
    table.AddRow({Text(annotator), Real(MeanNormalizedConfidenceOf(decisions)),
                  Real(AccuracyOf(decisions)),
                  Real(CalAccuracyOf(decisions).value)});
  }
  return table;
}

FigureTable LoucScatter(const Dataset& dataset, const TimeNormalizer& times,
                        Basis basis) {
  FigureTable table("louc_scatter",
                    {"annotator_id", "question_id", "normalized_time", "louc",
                     "structural_zero", "degenerate", "real_label",
                     "predicted_label", "outcome"});
  for (const auto& annotator : dataset.annotators()) {
    const auto decisions = CollectDecisions(dataset, annotator);
    const auto entries = LoucAllOf(decisions, basis);
    for (std::size_t i = 0; i < decisions.size(); ++i) {
      const Decision& d = decisions[i];
      const LoucEntry& e = entries[i];
      const bool degenerate = e.status == LoucStatus::kDegenerate;
      table.AddRow(
          {Text(annotator), Text(d.question->id),
           Real(times.Normalize(annotator, d.question->id).value_seconds),
           degenerate ? Cell{} : Real(e.louc.value),
           Flag(!degenerate && e.louc.structurally_zero), Flag(degenerate),
           Flag(d.question->true_label), Flag(IsPredictedMatch(d.outcome)),
           Text(std::string(ToString(d.outcome)))});
    }
  }
  return table;
}

FigureTable LoucScatter(const Dataset& dataset, Basis basis) {
  return LoucScatter(dataset, TimeNormalizer(dataset), basis);
}

FigureTable LoucSignFractions(const Dataset& dataset, Basis basis) {
  struct Counts {
    std::size_t decisions = 0;
    std::size_t structural = 0;
    std::size_t degenerate = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
    std::size_t positive = 0;
  };
  std::map<bool, Counts> counts;
  for (const auto& annotator : dataset.annotators()) {
    const auto decisions = CollectDecisions(dataset, annotator);
    const auto entries = LoucAllOf(decisions, basis);
    for (std::size_t i = 0; i < decisions.size(); ++i) {
      Counts& c = counts[decisions[i].question->true_label];
      ++c.decisions;
      const LoucEntry& e = entries[i];
      if (e.status == LoucStatus::kDegenerate) {
        ++c.degenerate;
      } else if (e.louc.structurally_zero) {
        ++c.structural;
      } else if (std::fabs(e.louc.value) <= kLoucZeroTolerance) {
        ++c.zero;
      } else if (e.louc.value < 0.0) {
        ++c.negative;
      } else {
        ++c.positive;
      }
    }
  }
  FigureTable table("louc_sign_fractions",
                    {"real_label", "decisions", "structural_zero", "degenerate",
                     "eligible", "negative", "zero", "positive",
                     "negative_fraction", "positive_fraction"});
  for (bool label : {true, false}) {
    const Counts& c = counts[label];
    const std::size_t eligible = c.negative + c.zero + c.positive;
    std::optional<double> negative_fraction;
    std::optional<double> positive_fraction;
    if (eligible > 0) {
      negative_fraction = static_cast<double>(c.negative) / static_cast<double>(eligible);
      positive_fraction = static_cast<double>(c.positive) / static_cast<double>(eligible);
    }
    table.AddRow({Text(LabelName(label)), Int(c.decisions), Int(c.structural),
                  Int(c.degenerate), Int(eligible), Int(c.negative), Int(c.zero),
                  Int(c.positive), Real(negative_fraction),
                  Real(positive_fraction)});
  }
  return table;
}

std::vector<FigureTable> BuildFigures(const Dataset& dataset,
                                      const FigureOptions& options) {
  std::vector<FigureTable> figures;
  auto add_distribution = [&](const std::string& name, LabelMetric metric) {
    auto distribution = CalibrationByRealLabel(dataset, metric);
    distribution.per_annotator.set_name(name);
    distribution.summary.set_name(name + "_summary");
    figures.push_back(std::move(distribution.per_annotator));
    figures.push_back(std::move(distribution.summary));
  };
  auto add = [&](const std::string& name, FigureTable table) {
    table.set_name(name);
    figures.push_back(std::move(table));
  };

  add_distribution("fig1a", LabelMetric::kNormalizedConfidence);
  add_distribution("fig1b", LabelMetric::kAccuracy);
  add("fig1c", ConfusionAggregate(dataset));
  add("fig1d", CalibrationByTimeQuantile(dataset, options.bin_count,
                                         options.time_threshold));
  add("fig2a", CalibrationScatter(dataset));
  add_distribution("fig2b", LabelMetric::kCalAccuracy);

  const TimeNormalizer times(dataset);
  auto add_louc = [&](Basis basis, const std::string& all,
                      const std::string& by_label, const std::string& positives,
                      const std::string& fractions) {
    const FigureTable scatter = LoucScatter(dataset, times, basis);
    const std::vector<std::string> base = {"annotator_id", "question_id",
                                           "normalized_time", "louc",
                                           "structural_zero", "degenerate"};
    auto with = [&](std::initializer_list<const char*> extra) {
      auto columns = base;
      columns.insert(columns.end(), extra.begin(), extra.end());
      return columns;
    };
    const std::size_t predicted = scatter.ColumnIndex("predicted_label");
    figures.push_back(scatter.Select(all, base, [](const auto&) { return true; }));
    figures.push_back(scatter.Select(by_label, with({"real_label"}),
                                     [](const auto&) { return true; }));
    figures.push_back(scatter.Select(
        positives, with({"real_label", "outcome"}),
        [predicted](const std::vector<Cell>& row) { return AsBool(row[predicted]); }));
    add(fractions, LoucSignFractions(dataset, basis));
  };
  if (options.accuracy) {
    add_louc(Basis::kAccuracy, "fig3a", "fig3b", "fig3c",
             "louc_sign_fractions_acc");
  }
  if (options.precision) {
    add_louc(Basis::kPrecision, "fig3d", "fig3e", "fig3f",
             "louc_sign_fractions_p");
  }
  return figures;
}

}  // namespace louc

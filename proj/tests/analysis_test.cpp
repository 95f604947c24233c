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

#include <map>
#include <set>

#include <gtest/gtest.h>

#include "louc/errors.hpp"
#include "louc/louc.hpp"
#include "louc/measures.hpp"
#include "louc/synth.hpp"
#include "louc/timing.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

namespace louc {
namespace {

using testing::DatasetBuilder;
using testing::SingleAnnotator;

TEST(Summarize, SingleRecord) {
  const Dataset d = SingleAnnotator({{0.9, true}}, {30.0});
  const CohortSummary s = Summarize(d);
  EXPECT_EQ(s.annotator_count, 1u);
  EXPECT_EQ(s.decision_count, 1u);
  EXPECT_EQ(s.predicted_positive_fraction, 1.0);
  EXPECT_EQ(s.predicted_negative_fraction, 0.0);
  EXPECT_NEAR(s.mean_normalized_confidence_overall, 0.8, 1e-15);
  EXPECT_EQ(s.mean_session_minutes, 0.5);
  EXPECT_EQ(s.mean_decision_seconds, 30.0);
}

TEST(Summarize, CountsRecombine) {
  const Dataset d = GenerateCohort(testing::SmallCohort(5));
  const CohortSummary s = Summarize(d);
  EXPECT_EQ(s.decision_count, d.records().size());
  EXPECT_EQ(s.predicted_positive_count + s.predicted_negative_count,
            s.decision_count);
  EXPECT_NEAR(s.predicted_positive_fraction + s.predicted_negative_fraction, 1.0,
              1e-12);
  std::size_t positives = 0;
  for (const auto& r : d.records()) positives += r.confidence > 0.5 ? 1 : 0;
  EXPECT_EQ(s.predicted_positive_count, positives);
}

TEST(ConfusionAggregate, AllTruePositives) {
  const Dataset d = SingleAnnotator({{0.9, true}, {0.8, true}, {1.0, true}});
  const FigureTable t = ConfusionAggregate(d);
  ASSERT_EQ(t.rows().size(), 4u);
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    const bool tp = AsString(t.At(i, "outcome")) == "TP";
    EXPECT_EQ(AsInt(t.At(i, "count")), tp ? 3 : 0);
  }
  // The non-match row has no decisions, so its rates are undefined.
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    if (AsString(t.At(i, "real_label")) == "non_match") {
      EXPECT_TRUE(IsNull(t.At(i, "row_rate")));
    }
  }
}

TEST(ConfusionAggregate, MatchesEnumeration) {
  const Dataset d = GenerateCohort(testing::SmallCohort(6));
  std::map<std::string, std::int64_t> expected;
  for (const auto& r : d.records()) {
    const bool predicted = r.confidence > 0.5;
    const bool truth = oracle::TrueLabel(d, r.question_id);
    expected[predicted ? (truth ? "TP" : "FP") : (truth ? "FN" : "TN")]++;
  }
  const FigureTable t = ConfusionAggregate(d);
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    EXPECT_EQ(AsInt(t.At(i, "count")), expected[AsString(t.At(i, "outcome"))]);
  }
}

TEST(SplitTimeGroups, TwoAnnotators) {
  const Dataset d = DatasetBuilder()
                        .Question("q", true)
                        .Answer("h1", "q", 0.9, 10.0)
                        .Answer("h2", "q", 0.9, 30.0)
                        .Build();
  const TimeGroups g = SplitTimeGroups(d);
  EXPECT_EQ(g.fast.member_ids, std::vector<std::string>{"h1"});
  EXPECT_EQ(g.slow.member_ids, std::vector<std::string>{"h2"});
  EXPECT_EQ(g.threshold_seconds, 20.0);
  EXPECT_EQ(g.fast.mean_offset_seconds, -10.0);
  EXPECT_EQ(g.slow.mean_offset_seconds, 10.0);
  EXPECT_FALSE(g.degenerate);
}

TEST(SplitTimeGroups, IdenticalMeansAreAllFast) {
  const Dataset d = DatasetBuilder()
                        .Question("q", true)
                        .Answer("h1", "q", 0.9, 12.0)
                        .Answer("h2", "q", 0.9, 12.0)
                        .Build();
  const TimeGroups g = SplitTimeGroups(d);
  EXPECT_EQ(g.fast.member_ids.size(), 2u);
  EXPECT_TRUE(g.slow.member_ids.empty());
  EXPECT_TRUE(g.degenerate);
}

TEST(SplitTimeGroups, NeedsTwoAnnotators) {
  EXPECT_THROW(SplitTimeGroups(SingleAnnotator({{0.9, true}})), DegenerateError);
}

TEST(SplitTimeGroups, PartitionsCohort) {
  const Dataset d = GenerateCohort(testing::SmallCohort(8, 40, 10));
  const TimeGroups g = SplitTimeGroups(d);
  std::set<std::string> all(g.fast.member_ids.begin(), g.fast.member_ids.end());
  for (const auto& h : g.slow.member_ids) EXPECT_TRUE(all.insert(h).second);
  EXPECT_EQ(all.size(), d.annotators().size());
}

TEST(QuantileBins, EvenSizes) {
  const Dataset d = GenerateCohort(testing::SmallCohort(2, 5, 30));
  const auto b = QuantileBins(d, "h1", 3);
  ASSERT_EQ(b.bins.size(), 3u);
  for (const auto& bin : b.bins) EXPECT_EQ(bin.size(), 10u);
}

TEST(QuantileBins, RemainderGoesToEarlierBins) {
  std::vector<std::pair<double, bool>> answers(5, {0.9, true});
  const Dataset d = SingleAnnotator(answers, {5, 4, 3, 2, 1});
  const auto b = QuantileBins(d, "h", 2);
  ASSERT_EQ(b.bins.size(), 2u);
  EXPECT_EQ(b.bins[0].size(), 3u);
  EXPECT_EQ(b.bins[1].size(), 2u);
  // A single annotator's normalized time is zero everywhere, so the order
  // falls back to the question order.
  EXPECT_EQ(b.bins[0], (std::vector<std::string>{"q0", "q1", "q2"}));
}

TEST(QuantileBins, TooFewDecisions) {
  const Dataset d = SingleAnnotator({{0.9, true}, {0.2, false}});
  EXPECT_THROW(QuantileBins(d, "h", 3), DegenerateError);
}

TEST(QuantileBins, SortedAcrossBins) {
  const Dataset d = GenerateCohort(testing::SmallCohort(17, 10, 30));
  const TimeNormalizer times(d);
  for (const auto& h : d.annotators()) {
    const auto b = QuantileBins(d, times, h, 3);
    for (std::size_t i = 0; i + 1 < b.bins.size(); ++i) {
      double max_here = -1e300;
      double min_next = 1e300;
      for (const auto& q : b.bins[i]) {
        max_here = std::max(max_here, times.Normalize(h, q).value_seconds);
      }
      for (const auto& q : b.bins[i + 1]) {
        min_next = std::min(min_next, times.Normalize(h, q).value_seconds);
      }
      EXPECT_LE(max_here, min_next);
    }
    EXPECT_EQ(b.BinOf(b.bins[2][0]), 2);
    EXPECT_EQ(b.BinOf("missing"), -1);
  }
}

TEST(CalibrationByTimeQuantile, ConstantCohort) {
  // Every decision is a TP at normalized confidence 0.9, so every bin has
  // precision-based calibration 0.9 - 1.
  DatasetBuilder builder;
  for (int i = 0; i < 6; ++i) {
    const std::string q = "q" + std::to_string(i);
    builder.Question(q, true)
        .Answer("fast", q, 0.95, 5.0 + i)
        .Answer("slow", q, 0.95, 50.0 - i);
  }
  const FigureTable t = CalibrationByTimeQuantile(builder.Build(), 3);
  ASSERT_EQ(t.rows().size(), 6u);
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    EXPECT_NEAR(AsDouble(t.At(i, "mean_cal_precision")), -0.1, 1e-12);
    EXPECT_EQ(AsInt(t.At(i, "annotators")), 1);
    EXPECT_EQ(AsInt(t.At(i, "dropped")), 0);
  }
}

TEST(CalibrationByTimeQuantile, UndefinedBinsAreDropped) {
  DatasetBuilder builder;
  for (int i = 0; i < 4; ++i) {
    const std::string q = "q" + std::to_string(i);
    builder.Question(q, false)
        .Answer("a", q, 0.1, 5.0 + i)
        .Answer("b", q, 0.2, 50.0 - i);
  }
  const FigureTable t = CalibrationByTimeQuantile(builder.Build(), 2);
  EXPECT_TRUE(t.rows().empty());
}

TEST(CalibrationByRealLabel, PerfectAnnotator) {
  const Dataset d =
      SingleAnnotator({{1.0, true}, {0.0, false}, {1.0, true}, {0.0, false}});
  const auto dist = CalibrationByRealLabel(d, LabelMetric::kCalAccuracy);
  ASSERT_EQ(dist.per_annotator.rows().size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(AsDouble(dist.per_annotator.At(i, "value")), 0.0);
  }
}

TEST(CalibrationByRealLabel, EmptyLabelSubsetIsDropped) {
  const Dataset d = SingleAnnotator({{0.9, true}, {0.8, true}});
  const auto dist = CalibrationByRealLabel(d, LabelMetric::kAccuracy);
  EXPECT_EQ(dist.per_annotator.rows().size(), 1u);
  ASSERT_EQ(dist.summary.rows().size(), 2u);
  EXPECT_EQ(AsString(dist.summary.At(1, "real_label")), "non_match");
  EXPECT_EQ(AsInt(dist.summary.At(1, "dropped")), 1);
  EXPECT_TRUE(IsNull(dist.summary.At(1, "mean")));
}

TEST(ComputeQuartiles, LinearInterpolation) {
  const Quartiles q = ComputeQuartiles({4.0, 1.0, 3.0, 2.0, 5.0});
  EXPECT_EQ(q.min, 1.0);
  EXPECT_EQ(q.q1, 2.0);
  EXPECT_EQ(q.median, 3.0);
  EXPECT_EQ(q.q3, 4.0);
  EXPECT_EQ(q.max, 5.0);
  const Quartiles even = ComputeQuartiles({1.0, 2.0, 3.0, 4.0});
  EXPECT_EQ(even.q1, 1.75);
  EXPECT_EQ(even.median, 2.5);
  EXPECT_THROW(ComputeQuartiles({}), UndefinedMeasureError);
}

TEST(CalibrationScatter, RowIdentityAndOracle) {
  const Dataset d = GenerateCohort(testing::SmallCohort(12));
  const FigureTable t = CalibrationScatter(d);
  ASSERT_EQ(t.rows().size(), d.annotators().size());
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    const double conf = AsDouble(t.At(i, "mean_normalized_confidence"));
    const double acc = AsDouble(t.At(i, "accuracy"));
    EXPECT_EQ(AsDouble(t.At(i, "cal_accuracy")), conf - acc);
    const std::string h = AsString(t.At(i, "annotator_id"));
    EXPECT_NEAR(AsDouble(t.At(i, "cal_accuracy")),
                oracle::CalAccuracy(d, h, d.AnsweredQuestions(h)), 1e-12);
  }
}

TEST(LoucScatter, RowsMatchSingleCalls) {
  const Dataset d = GenerateCohort(testing::SmallCohort(14, 10, 20));
  for (Basis basis : {Basis::kAccuracy, Basis::kPrecision}) {
    const FigureTable t = LoucScatter(d, basis);
    ASSERT_EQ(t.rows().size(), d.records().size());
    for (std::size_t i = 0; i < t.rows().size(); ++i) {
      const std::string h = AsString(t.At(i, "annotator_id"));
      const std::string q = AsString(t.At(i, "question_id"));
      const std::string outcome = AsString(t.At(i, "outcome"));
      if (basis == Basis::kPrecision && (outcome == "TN" || outcome == "FN")) {
        EXPECT_TRUE(AsBool(t.At(i, "structural_zero")));
      }
      if (AsBool(t.At(i, "degenerate"))) {
        EXPECT_THROW(Louc(d, h, q, basis), DegenerateError);
        continue;
      }
      const double value = AsDouble(t.At(i, "louc"));
      EXPECT_EQ(value, Louc(d, h, q, basis).value);
      EXPECT_LE(std::abs(value), 1.0);
    }
  }
}

TEST(LoucSignFractions, SymmetricCohortIsAllZero) {
  DatasetBuilder builder;
  for (int i = 0; i < 4; ++i) {
    const std::string q = "q" + std::to_string(i);
    builder.Question(q, i % 2 == 0)
        .Answer("h1", q, i % 2 == 0 ? 0.8 : 0.2)
        .Answer("h2", q, i % 2 == 0 ? 0.8 : 0.2);
  }
  const FigureTable t = LoucSignFractions(builder.Build(), Basis::kAccuracy);
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    EXPECT_EQ(AsInt(t.At(i, "zero")), AsInt(t.At(i, "decisions")));
    EXPECT_EQ(AsDouble(t.At(i, "negative_fraction")), 0.0);
    EXPECT_EQ(AsDouble(t.At(i, "positive_fraction")), 0.0);
  }
}

TEST(LoucSignFractions, CountsPartitionDecisions) {
  const Dataset d = GenerateCohort(testing::SmallCohort(19));
  for (Basis basis : {Basis::kAccuracy, Basis::kPrecision}) {
    const FigureTable t = LoucSignFractions(d, basis);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < t.rows().size(); ++i) {
      const auto n = AsInt(t.At(i, "decisions"));
      total += n;
      EXPECT_EQ(AsInt(t.At(i, "structural_zero")) + AsInt(t.At(i, "degenerate")) +
                    AsInt(t.At(i, "eligible")),
                n);
      EXPECT_EQ(AsInt(t.At(i, "negative")) + AsInt(t.At(i, "zero")) +
                    AsInt(t.At(i, "positive")),
                AsInt(t.At(i, "eligible")));
    }
    EXPECT_EQ(total, static_cast<std::int64_t>(d.records().size()));
  }
}

TEST(BuildFigures, StableNames) {
  const Dataset d = GenerateCohort(testing::SmallCohort(23));
  const auto figures = BuildFigures(d, FigureOptions{});
  std::vector<std::string> names;
  for (const auto& f : figures) names.push_back(f.name());
  const std::vector<std::string> expected = {
      "fig1a", "fig1a_summary", "fig1b", "fig1b_summary", "fig1c", "fig1d",
      "fig2a", "fig2b", "fig2b_summary", "fig3a", "fig3b", "fig3c",
      "louc_sign_fractions_acc", "fig3d", "fig3e", "fig3f",
      "louc_sign_fractions_p"};
  EXPECT_EQ(names, expected);
  for (const auto& f : figures) {
    for (const auto& row : f.rows()) EXPECT_EQ(row.size(), f.columns().size());
  }
}

}  // namespace
}  // namespace louc

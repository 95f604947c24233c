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
#include <random>

#include <gtest/gtest.h>

#include "louc/errors.hpp"
#include "louc/ingest.hpp"
#include "louc/synth.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

namespace louc {
namespace {

using testing::DatasetBuilder;

TEST(QuestionMeanTimes, SingleAnnotator) {
  const Dataset d =
      DatasetBuilder().Question("q", true).Answer("h", "q", 0.9, 12.0).Build();
  const auto means = QuestionMeanTimes(d);
  ASSERT_EQ(means.size(), 1u);
  EXPECT_EQ(means[0].mean_seconds, 12.0);
  EXPECT_EQ(means[0].sample_count, 1u);
}

TEST(QuestionMeanTimes, TwoAnswers) {
  const Dataset d = DatasetBuilder()
                        .Question("q", true)
                        .Answer("h1", "q", 0.9, 10.0)
                        .Answer("h2", "q", 0.9, 20.0)
                        .Build();
  EXPECT_EQ(QuestionMeanTimes(d)[0].mean_seconds, 15.0);
}

TEST(QuestionMeanTimes, FullCohortCounts) {
  CohortSpec spec;
  spec.seed = 4;
  const Dataset d = GenerateCohort(spec);
  const auto means = QuestionMeanTimes(d);
  ASSERT_EQ(means.size(), 30u);
  for (const auto& m : means) EXPECT_EQ(m.sample_count, 147u);
}

TEST(QuestionMeanTimes, UnansweredQuestion) {
  Dataset d({Question{"q", 0, {"a", "b"}, false}}, {}, {}, ReferenceMatch{});
  try {
    QuestionMeanTimes(d);
    FAIL() << "expected CoverageError";
  } catch (const CoverageError& e) {
    EXPECT_NE(std::string(e.what()).find("q"), std::string::npos);
  }
}

TEST(AnsweringDelta, AtQuestionMean) {
  const Dataset d = DatasetBuilder()
                        .Question("q", true)
                        .Answer("h1", "q", 0.9, 10.0)
                        .Answer("h2", "q", 0.9, 10.0)
                        .Build();
  EXPECT_EQ(AnsweringDeltaOf(d, "h1").delta_seconds, 0.0);
}

TEST(AnsweringDelta, UniformlyFiveSecondsFaster) {
  // h1 and h2 average to the question mean; h1 runs 5 s below it.
  DatasetBuilder builder;
  for (int i = 0; i < 4; ++i) {
    const std::string q = "q" + std::to_string(i);
    builder.Question(q, i % 2 == 0)
        .Answer("h1", q, 0.9, 20.0 + i)
        .Answer("h2", q, 0.9, 30.0 + i);
  }
  const Dataset d = builder.Build();
  EXPECT_EQ(AnsweringDeltaOf(d, "h1").delta_seconds, -5.0);
  EXPECT_THROW(AnsweringDeltaOf(d, "nobody"), NotFoundError);
}

TEST(NormalizedTime, WorkedExample) {
  // Delta of -5 and a deviation of -7 on q0 leave -2.
  const Dataset d = DatasetBuilder()
                        .Question("q0", true)
                        .Question("q1", false)
                        .Answer("h1", "q0", 0.9, 13.0)
                        .Answer("h2", "q0", 0.9, 27.0)
                        .Answer("h1", "q1", 0.2, 17.0)
                        .Answer("h2", "q1", 0.2, 23.0)
                        .Build();
  EXPECT_EQ(AnsweringDeltaOf(d, "h1").delta_seconds, -5.0);
  EXPECT_EQ(NormalizedTimeOf(d, "h1", "q0").value_seconds, -2.0);
  EXPECT_THROW(NormalizedTimeOf(d, "h1", "q9"), NotFoundError);
}

TEST(NormalizedTime, ZeroAtMeanWithZeroDelta) {
  const Dataset d = DatasetBuilder()
                        .Question("q", true)
                        .Answer("h1", "q", 0.9, 10.0)
                        .Answer("h2", "q", 0.9, 10.0)
                        .Build();
  EXPECT_EQ(NormalizedTimeOf(d, "h1", "q").value_seconds, 0.0);
}

TEST(NormalizedTime, MatchesOracle) {
  const Dataset d = GenerateCohort(testing::SmallCohort(21, 8, 10));
  const TimeNormalizer times(d);
  for (const auto& r : d.records()) {
    EXPECT_NEAR(times.QuestionMean(r.question_id),
                oracle::QuestionMean(d, r.question_id), 1e-12);
    EXPECT_NEAR(times.Delta(r.annotator_id), oracle::Delta(d, r.annotator_id),
                1e-12);
    EXPECT_NEAR(times.Normalize(r.annotator_id, r.question_id).value_seconds,
                oracle::NormalizedTime(d, r.annotator_id, r.question_id), 1e-12);
  }
}

TEST(NormalizedTime, MeanZeroPerAnnotator) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Dataset d = GenerateCohort(testing::SmallCohort(seed));
    const TimeNormalizer times(d);
    for (const auto& h : d.annotators()) {
      double sum = 0.0;
      for (const auto& q : d.AnsweredQuestions(h)) {
        sum += times.Normalize(h, q).value_seconds;
      }
      EXPECT_LT(std::abs(sum / 30.0), 1e-9) << h;
    }
  }
}

Dataset ShiftAnnotator(const Dataset& d, const std::string& h, double shift) {
  auto records = d.records();
  for (auto& r : records) {
    if (r.annotator_id == h) r.response_time_seconds += shift;
  }
  return BuildDataset(d.questions(), d.annotators(), records, d.reference());
}

TEST(NormalizedTime, TranslationInvariance) {
  const Dataset d = GenerateCohort(testing::SmallCohort(9, 6, 8));
  const std::string shifted = d.annotators().front();
  const Dataset moved = ShiftAnnotator(d, shifted, 7.25);
  const TimeNormalizer before(d);
  const TimeNormalizer after(moved);
  for (const auto& r : d.records()) {
    const double b = before.Normalize(r.annotator_id, r.question_id).value_seconds;
    const double a = after.Normalize(r.annotator_id, r.question_id).value_seconds;
    if (r.annotator_id == shifted) {
      EXPECT_NEAR(a, b, 1e-9);
    } else {
      // Other annotators move only through the question means, which all
      // rise by shift/K; their delta absorbs that too.
      EXPECT_NEAR(a, oracle::NormalizedTime(moved, r.annotator_id, r.question_id),
                  1e-9);
    }
  }
}

TEST(QuestionMeanTimes, PermutationInvariant) {
  const Dataset d = GenerateCohort(testing::SmallCohort(13, 12, 10));
  auto records = d.records();
  std::mt19937_64 engine(99);
  std::shuffle(records.begin(), records.end(), engine);
  const Dataset shuffled =
      BuildDataset(d.questions(), d.annotators(), records, d.reference());
  const auto a = QuestionMeanTimes(d);
  const auto b = QuestionMeanTimes(shuffled);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].question_id, b[i].question_id);
    EXPECT_EQ(a[i].mean_seconds, b[i].mean_seconds);  // bit-identical
  }
}

}  // namespace
}  // namespace louc

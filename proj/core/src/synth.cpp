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

#include "louc/synth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "louc/errors.hpp"
#include "louc/ingest.hpp"

namespace louc {
namespace {

double Clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

std::string PaddedId(char prefix, int value, int count) {
  const std::string digits = std::to_string(value);
  const std::size_t width = std::to_string(count).size();
  return std::string(1, prefix) +
         std::string(width > digits.size() ? width - digits.size() : 0, '0') +
         digits;
}

void Require(bool ok, const char* message) {
  if (!ok) throw RangeError(message);
}

}  // namespace

double SynthRandom::Uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t SynthRandom::Below(std::uint64_t n) {
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

double SynthRandom::Normal() {
  double sum = 0.0;
  for (int i = 0; i < 12; ++i) sum += Uniform();
  return sum - 6.0;
}

void CheckCohortSpec(const CohortSpec& spec) {
  Require(spec.annotator_count >= 1, "annotator_count must be >= 1");
  Require(spec.question_count >= 1, "question_count must be >= 1");
  Require(spec.true_match_fraction >= 0.0 && spec.true_match_fraction <= 1.0,
          "true_match_fraction must lie in [0, 1]");
  Require(spec.accuracy_mean >= 0.0 && spec.accuracy_mean <= 1.0,
          "accuracy_mean must lie in [0, 1]");
  Require(spec.accuracy_spread >= 0.0 && spec.accuracy_spread <= 1.0,
          "accuracy_spread must lie in [0, 1]");
  Require(spec.confidence_bias >= -1.0 && spec.confidence_bias <= 1.0,
          "confidence_bias must lie in [-1, 1]");
  Require(spec.confidence_noise >= 0.0 && spec.confidence_noise <= 1.0,
          "confidence_noise must lie in [0, 1]");
  Require(spec.time.base_seconds > 0.0 && std::isfinite(spec.time.base_seconds),
          "time base_seconds must be positive");
  Require(spec.time.speed_offset_seconds >= 0.0 &&
              std::isfinite(spec.time.speed_offset_seconds),
          "time speed_offset_seconds must be non-negative");
  Require(spec.time.noise_seconds >= 0.0 &&
              std::isfinite(spec.time.noise_seconds),
          "time noise_seconds must be non-negative");
}

Dataset GenerateCohort(const CohortSpec& spec) {
  CheckCohortSpec(spec);
  SynthRandom rng(spec.seed);
  const int question_count = spec.question_count;

  // Questions: a fixed number of true matches at shuffled positions.
  const auto match_count = static_cast<int>(
      std::lround(spec.true_match_fraction * question_count));
  std::vector<bool> labels(question_count, false);
  std::fill(labels.begin(), labels.begin() + match_count, true);
  for (int i = question_count - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng.Below(static_cast<std::uint64_t>(i) + 1));
    std::swap(labels[i], labels[j]);
  }

  std::vector<Question> questions;
  std::vector<double> base_seconds;
  ReferenceMatch reference;
  for (int i = 0; i < question_count; ++i) {
    Question q;
    q.id = PaddedId('q', i + 1, question_count);
    q.order_index = i;
    q.pair = {PaddedId('a', i + 1, question_count),
              PaddedId('b', i + 1, question_count)};
    if (labels[i]) reference.Insert(q.pair);
    questions.push_back(std::move(q));
    base_seconds.push_back(spec.time.base_seconds * (0.5 + rng.Uniform()));
  }

  std::vector<std::string> annotators;
  std::vector<AnnotationRecord> records;
  records.reserve(static_cast<std::size_t>(spec.annotator_count) *
                  question_count);
  for (int h = 0; h < spec.annotator_count; ++h) {
    const std::string annotator = PaddedId('h', h + 1, spec.annotator_count);
    annotators.push_back(annotator);
    const double skill = Clamp01(spec.accuracy_mean +
                                 spec.accuracy_spread * (2.0 * rng.Uniform() - 1.0));
    const double target = Clamp01(skill + spec.confidence_bias);
    const double offset = spec.time.speed_offset_seconds * rng.Normal();

    for (int i = 0; i < question_count; ++i) {
      const bool correct = rng.Uniform() < skill;
      const bool predicted_match = correct == labels[i];
      const double normalized =
          Clamp01(target + spec.confidence_noise * rng.Normal());
      const long strength = std::lround(normalized * 50.0);
      // A predicted match needs a confidence strictly above 50%.
      const long percent =
          predicted_match ? 50 + std::max(1L, strength) : 50 - strength;

      const double raw_time =
          base_seconds[i] + offset + spec.time.noise_seconds * rng.Normal();
      const double time = std::round(std::max(raw_time, 0.5) * 1000.0) / 1000.0;

      records.push_back({annotator, questions[i].id,
                         static_cast<double>(percent) / 100.0, time});
    }
  }
  return BuildDataset(std::move(questions), std::move(annotators),
                      std::move(records), reference);
}

}  // namespace louc

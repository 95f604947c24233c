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

#ifndef LOUC_SYNTH_HPP_
#define LOUC_SYNTH_HPP_

#include <cstdint>
#include <random>

#include "louc/dataset.hpp"

namespace louc {

// Response times are base(q) + offset(h) + noise, floored at 0.5 s and
// rounded to milliseconds. base(q) is uniform in [0.5, 1.5] * base_seconds,
// offset(h) and noise are centred with the given scales.
struct TimeModel {
  double base_seconds = 15.0;
  double speed_offset_seconds = 4.0;
  double noise_seconds = 4.0;
};

// Shape of a synthetic cohort. Every annotator answers every question.
//
// Each annotator draws a skill uniformly from accuracy_mean +- accuracy_spread
// and answers each question correctly with that probability. Their normalized
// confidence is drawn around skill + confidence_bias with spread
// confidence_noise, truncated to [0, 1], so confidence_bias is the expected
// accuracy-based calibration up to truncation.
struct CohortSpec {
  int annotator_count = 147;
  int question_count = 30;
  double true_match_fraction = 0.5;
  double accuracy_mean = 0.7;
  double accuracy_spread = 0.1;
  double confidence_bias = 0.0;
  double confidence_noise = 0.15;
  TimeModel time;
  std::uint64_t seed = 1;
};

// Throws RangeError when a field is outside its domain.
void CheckCohortSpec(const CohortSpec& spec);

// Deterministic for a given spec on every platform: raw bits come from
// std::mt19937_64 (whose output sequence is fixed by the standard) and all
// derived distributions are computed here with plain arithmetic.
// Confidences are whole percentages, as the annotation interface collects.
Dataset GenerateCohort(const CohortSpec& spec);

// Portable sampling on top of std::mt19937_64.
class SynthRandom {
 public:
  explicit SynthRandom(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double Uniform();
  // Uniform integer in [0, n).
  std::uint64_t Below(std::uint64_t n);
  // Approximately standard normal (Irwin-Hall sum of twelve uniforms), so
  // no libm call can perturb the stream.
  double Normal();

 private:
  std::mt19937_64 engine_;
};

}  // namespace louc

#endif  // LOUC_SYNTH_HPP_

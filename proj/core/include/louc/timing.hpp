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

#ifndef LOUC_TIMING_HPP_
#define LOUC_TIMING_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "louc/dataset.hpp"

namespace louc {

// Mean response time of one question over every annotator who answered it,
// the annotator being measured included.
struct QuestionMeanTime {
  std::string question_id;
  double mean_seconds = 0.0;
  std::size_t sample_count = 0;
};

// Mean of (T - question mean) over the questions an annotator answered.
// Negative for annotators faster than average.
struct AnsweringDelta {
  std::string annotator_id;
  double delta_seconds = 0.0;
};

// (T - question mean) - answering delta: how atypical a response time is
// for the annotator who gave it.
struct NormalizedTime {
  double value_seconds = 0.0;
};

// Per-question means and per-annotator deltas, computed once for a dataset.
// The dataset must outlive the model.
class TimeNormalizer {
 public:
  // Throws CoverageError naming the first question nobody answered.
  explicit TimeNormalizer(const Dataset& dataset);

  // In series order.
  const std::vector<QuestionMeanTime>& question_means() const {
    return question_means_;
  }

  // Throws NotFoundError.
  double QuestionMean(std::string_view question_id) const;
  double Delta(std::string_view annotator_id) const;
  NormalizedTime Normalize(std::string_view annotator_id,
                           std::string_view question_id) const;

 private:
  const Dataset* dataset_;
  std::vector<QuestionMeanTime> question_means_;
  std::unordered_map<std::string, std::size_t> question_position_;
  std::unordered_map<std::string, double> deltas_;
};

// One-shot helpers; each builds a TimeNormalizer internally.
std::vector<QuestionMeanTime> QuestionMeanTimes(const Dataset& dataset);
AnsweringDelta AnsweringDeltaOf(const Dataset& dataset,
                                std::string_view annotator_id);
NormalizedTime NormalizedTimeOf(const Dataset& dataset,
                                std::string_view annotator_id,
                                std::string_view question_id);

}  // namespace louc

#endif  // LOUC_TIMING_HPP_

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

#ifndef LOUC_TESTS_TEST_UTIL_HPP_
#define LOUC_TESTS_TEST_UTIL_HPP_

#include <string>
#include <utility>
#include <vector>

#include "louc/dataset.hpp"
#include "louc/ingest.hpp"
#include "louc/synth.hpp"

namespace louc::testing {

// Builds small hand-written datasets. Questions get pairs (a_<id>, b_<id>).
class DatasetBuilder {
 public:
  DatasetBuilder& Question(const std::string& id, bool true_match) {
    louc::Question q;
    q.id = id;
    q.order_index = static_cast<int>(questions_.size());
    q.pair = {"a_" + id, "b_" + id};
    if (true_match) reference_.Insert(q.pair);
    questions_.push_back(std::move(q));
    return *this;
  }

  DatasetBuilder& Answer(const std::string& annotator,
                         const std::string& question, double confidence,
                         double seconds = 10.0) {
    bool known = false;
    for (const auto& a : annotators_) known = known || a == annotator;
    if (!known) annotators_.push_back(annotator);
    records_.push_back({annotator, question, confidence, seconds});
    return *this;
  }

  Dataset Build() const {
    return BuildDataset(questions_, annotators_, records_, reference_);
  }

 private:
  std::vector<louc::Question> questions_;
  std::vector<std::string> annotators_;
  std::vector<AnnotationRecord> records_;
  ReferenceMatch reference_;
};

// One annotator "h" with one question per (confidence, true label) pair,
// questions named q0, q1, ...
inline Dataset SingleAnnotator(
    const std::vector<std::pair<double, bool>>& answers,
    const std::vector<double>& seconds = {}) {
  DatasetBuilder builder;
  for (std::size_t i = 0; i < answers.size(); ++i) {
    builder.Question("q" + std::to_string(i), answers[i].second);
  }
  for (std::size_t i = 0; i < answers.size(); ++i) {
    builder.Answer("h", "q" + std::to_string(i), answers[i].first,
                   seconds.empty() ? 10.0 : seconds[i]);
  }
  return builder.Build();
}

inline CohortSpec SmallCohort(std::uint64_t seed, int annotators = 20,
                              int questions = 30) {
  CohortSpec spec;
  spec.annotator_count = annotators;
  spec.question_count = questions;
  spec.seed = seed;
  return spec;
}

}  // namespace louc::testing

#endif  // LOUC_TESTS_TEST_UTIL_HPP_

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

#include <sstream>

#include <benchmark/benchmark.h>

#include "louc/analysis.hpp"
#include "louc/ingest.hpp"
#include "louc/louc.hpp"
#include "louc/synth.hpp"
#include "louc/timing.hpp"

namespace louc {
namespace {

Dataset Cohort(benchmark::State& state) {
  CohortSpec spec;
  spec.annotator_count = static_cast<int>(state.range(0));
  spec.question_count = 30;
  spec.seed = 1;
  return GenerateCohort(spec);
}

void BM_LoucAll(benchmark::State& state) {
  const Dataset dataset = Cohort(state);
  for (auto _ : state) {
    for (const auto& annotator : dataset.annotators()) {
      benchmark::DoNotOptimize(LoucAll(dataset, annotator, Basis::kAccuracy));
      benchmark::DoNotOptimize(LoucAll(dataset, annotator, Basis::kPrecision));
    }
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(dataset.records().size()));
}
BENCHMARK(BM_LoucAll)->Arg(147)->Arg(1000);

void BM_TimeNormalizer(benchmark::State& state) {
  const Dataset dataset = Cohort(state);
  for (auto _ : state) {
    const TimeNormalizer times(dataset);
    double sum = 0.0;
    for (const auto& r : dataset.records()) {
      sum += times.Normalize(r.annotator_id, r.question_id).value_seconds;
    }
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_TimeNormalizer)->Arg(147)->Arg(1000);

void BM_ReadAnnotations(benchmark::State& state) {
  const Dataset dataset = Cohort(state);
  std::ostringstream out;
  WriteAnnotations(dataset, out);
  const std::string text = out.str();
  for (auto _ : state) {
    std::istringstream in(text);
    benchmark::DoNotOptimize(ReadAnnotations(in, {}, dataset.reference()));
  }
  state.SetBytesProcessed(state.iterations() *
                          static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_ReadAnnotations)->Arg(147)->Arg(1000);

void BM_BuildFigures(benchmark::State& state) {
  const Dataset dataset = Cohort(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(BuildFigures(dataset, FigureOptions{}));
  }
}
BENCHMARK(BM_BuildFigures)->Arg(147);

void BM_GenerateCohort(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Cohort(state));
}
BENCHMARK(BM_GenerateCohort)->Arg(147);

}  // namespace
}  // namespace louc

// The packaged benchmark_main archive is LTO bytecode tied to one compiler
// release, so the entry point is defined here.
BENCHMARK_MAIN();

// Copyright 2026 The Bratteli Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "bratteli/combinatorics.hpp"
#include "bratteli/graph.hpp"
#include "bratteli/measures.hpp"
#include "bratteli/paths.hpp"

namespace {

using namespace bratteli;

void BM_EstimateLimitMeasure(benchmark::State& state) {
  const auto depth = static_cast<std::size_t>(state.range(0));
  const auto graph = build_pascal(2, depth);
  const auto path = frequency_path(graph, Rational(1, 3), depth);
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_limit_measure(graph, path, 5).rows.size());
  }
}
BENCHMARK(BM_EstimateLimitMeasure)->Arg(500)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_RegularityFloat(benchmark::State& state) {
  const auto depth = static_cast<std::size_t>(state.range(0));
  const auto graph = build_pascal(2, depth);
  const auto path = frequency_path(graph, Rational(1, 3), depth);
  RegularityOptions options;
  options.mode = ArithmeticMode::kFloat;
  for (auto _ : state) {
    PathCounter counter(graph);
    benchmark::DoNotOptimize(regularity_report(graph, counter, path, options).regular);
  }
}
BENCHMARK(BM_RegularityFloat)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_LevelMarginal(benchmark::State& state) {
  const auto graph = build_young(static_cast<std::size_t>(state.range(0)));
  const VertexRef anchor{static_cast<std::uint32_t>(graph.depth()), 3};
  for (auto _ : state) {
    PathCounter counter(graph);
    benchmark::DoNotOptimize(level_marginal(graph, counter, anchor, graph.depth() / 2).size());
  }
}
BENCHMARK(BM_LevelMarginal)->Arg(16)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

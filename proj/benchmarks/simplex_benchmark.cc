// Copyright 2026 The Simplex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "simplex/evaluation.h"
#include "simplex/pipeline.h"
#include "simplex/ranking.h"
#include "support/fixtures.h"

namespace simplex {
namespace {

using ::simplex::testing::Fixtures;
using ::simplex::testing::kExample1;
using ::simplex::testing::kExample2;

void BM_PpScore(benchmark::State& state) {
  const NGramModel& model = Fixtures().model;
  const Sentence s = Sentence::Parse(kExample2);
  const double phi = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(PpScore(model, s, phi));
  state.SetItemsProcessed(state.iterations() * s.size());
}
BENCHMARK(BM_PpScore)->Arg(0)->Arg(5);

void BM_Simplify(benchmark::State& state) {
  const Simplifier simplifier(Fixtures().Resources());
  const SimplificationConfig config{
      state.range(0) == 0 ? Mode::kWordEmbedding : Mode::kTransformer, 0.0};
  const Sentence s = Sentence::Parse(kExample1);
  for (auto _ : state) benchmark::DoNotOptimize(simplifier.Simplify(s, config));
  state.SetLabel(std::string(ModeName(config.mode)));
}
BENCHMARK(BM_Simplify)->Arg(0)->Arg(1);

std::vector<std::string> RandomWords(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> pick(0, 30);
  std::vector<std::string> out(n);
  for (auto& w : out) w = "w" + std::to_string(pick(rng));
  return out;
}

void BM_Sari(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int n = static_cast<int>(state.range(0));
  const Sentence in = Sentence::FromTokens(RandomWords(rng, n));
  const Sentence out = Sentence::FromTokens(RandomWords(rng, n));
  const std::vector<Sentence> refs = {Sentence::FromTokens(RandomWords(rng, n)),
                                      Sentence::FromTokens(RandomWords(rng, n))};
  for (auto _ : state) benchmark::DoNotOptimize(Sari(in, out, refs));
}
BENCHMARK(BM_Sari)->Arg(10)->Arg(40);

}  // namespace
}  // namespace simplex

BENCHMARK_MAIN();

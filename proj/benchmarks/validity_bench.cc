// Copyright 2026 The Heyting Toolkit Authors
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

#include "heyting/catalog.h"
#include "heyting/families.h"
#include "heyting/semantics.h"

namespace heyting {
namespace {

void BM_WidthFormulaOnAlgebra(benchmark::State& state) {
  HeytingAlgebra a = HeytingAlgebra::from_upsets(Poset::antichain(state.range(0)));
  Formula f = width_formula(2);
  for (auto _ : state) benchmark::DoNotOptimize(valid_in(a, f));
}
BENCHMARK(BM_WidthFormulaOnAlgebra)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_DepthFormulaOnPoset(benchmark::State& state) {
  Poset x = random_poset(state.range(0), 0.3, 2);
  Formula f = depth_formula(3);
  for (auto _ : state) benchmark::DoNotOptimize(valid_on_poset(x, f));
}
BENCHMARK(BM_DepthFormulaOnPoset)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace heyting

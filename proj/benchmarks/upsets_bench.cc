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

#include "heyting/algebra.h"
#include "heyting/catalog.h"
#include "heyting/upsets.h"

namespace heyting {
namespace {

void BM_CountUpsets(benchmark::State& state) {
  Poset x = random_poset(state.range(0), 0.2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(count_upsets(x, std::uint64_t{1} << 40));
}
BENCHMARK(BM_CountUpsets)->Arg(12)->Arg(20)->Arg(28);

void BM_BuildAlgebra(benchmark::State& state) {
  Poset x = random_poset(state.range(0), 0.3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(HeytingAlgebra::from_upsets(x));
}
BENCHMARK(BM_BuildAlgebra)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace heyting

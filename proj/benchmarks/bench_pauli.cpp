// Copyright 2026 The belltab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "belltab/pauli_string.hpp"
#include "belltab/rng.hpp"

namespace {

belltab::PauliString random_string(size_t n, belltab::Rng &rng) {
  belltab::PauliString p(n);
  for (size_t q = 0; q < n; ++q) {
    p.set_pauli(q, static_cast<belltab::Pauli>(rng() % 4));
  }
  return p;
}

void BM_PauliMultiply(benchmark::State &state) {
  belltab::Rng rng(1);
  size_t n = static_cast<size_t>(state.range(0));
  belltab::PauliString a = random_string(n, rng);
  belltab::PauliString b = random_string(n, rng);
  for (auto _ : state) {
    a *= b;
    benchmark::DoNotOptimize(a);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PauliMultiply)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_PauliCommutes(benchmark::State &state) {
  belltab::Rng rng(2);
  size_t n = static_cast<size_t>(state.range(0));
  belltab::PauliString a = random_string(n, rng);
  belltab::PauliString b = random_string(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a.commutes_with(b));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PauliCommutes)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_GroupClosure(benchmark::State &state) {
  using belltab::PauliString;
  std::vector<PauliString> gens{PauliString::from_label("ZZIII"),
                                PauliString::from_label("IZZII"),
                                PauliString::from_label("IIZZI"),
                                PauliString::from_label("IIIZZ")};
  for (auto _ : state) {
    benchmark::DoNotOptimize(belltab::group_closure(gens, 64, 5));
  }
}
BENCHMARK(BM_GroupClosure);

}  // namespace

BENCHMARK_MAIN();

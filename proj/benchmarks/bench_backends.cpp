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

// The headline comparison: circuit application cost on the quadratic-bit
// tableau against the exponential-amplitude dense vector.

#include <benchmark/benchmark.h>

#include "belltab/circuit.hpp"
#include "belltab/dense_state.hpp"
#include "belltab/tableau.hpp"

namespace {

void BM_TableauCircuit(benchmark::State &state) {
  uint32_t n = static_cast<uint32_t>(state.range(0));
  belltab::Rng rng(7);
  belltab::Circuit circuit = belltab::random_clifford_circuit(n, 1000, rng);
  for (auto _ : state) {
    belltab::StabilizerTableau t = belltab::StabilizerTableau::zero_state(n);
    for (const auto &inst : circuit.instructions) {
      t.apply_gate(std::get<belltab::GateOp>(inst));
    }
    benchmark::DoNotOptimize(t);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TableauCircuit)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_DenseCircuit(benchmark::State &state) {
  uint32_t n = static_cast<uint32_t>(state.range(0));
  belltab::Rng rng(7);
  belltab::Circuit circuit = belltab::random_clifford_circuit(n, 1000, rng);
  for (auto _ : state) {
    belltab::DenseState psi(n);
    for (const auto &inst : circuit.instructions) {
      psi.apply_gate(std::get<belltab::GateOp>(inst));
    }
    benchmark::DoNotOptimize(psi);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DenseCircuit)->RangeMultiplier(2)->Range(4, 16)->Complexity();

void BM_TableauMeasure(benchmark::State &state) {
  uint32_t n = static_cast<uint32_t>(state.range(0));
  belltab::Rng rng(9);
  belltab::Circuit circuit = belltab::random_clifford_circuit(n, 200, rng);
  belltab::TableauRun run = belltab::run_tableau(circuit, 0);
  belltab::StabilizerTableau scratch = run.state;
  for (auto _ : state) {
    scratch = run.state;
    for (uint32_t q = 0; q < n; ++q) {
      belltab::PauliString z =
          belltab::PauliString::single(n, q, belltab::Pauli::Z);
      benchmark::DoNotOptimize(scratch.measure_pauli(z, rng));
    }
  }
}
BENCHMARK(BM_TableauMeasure)->RangeMultiplier(2)->Range(8, 128);

void BM_CanonicalForm(benchmark::State &state) {
  uint32_t n = static_cast<uint32_t>(state.range(0));
  belltab::Rng rng(11);
  belltab::Circuit circuit = belltab::random_clifford_circuit(n, 400, rng);
  belltab::TableauRun run = belltab::run_tableau(circuit, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run.state.canonical_form());
  }
}
BENCHMARK(BM_CanonicalForm)->RangeMultiplier(2)->Range(8, 128);

}  // namespace

BENCHMARK_MAIN();

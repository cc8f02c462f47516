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

#include "belltab/scaling.hpp"

#include <chrono>
#include <cmath>
#include <ostream>

#include "belltab/circuit.hpp"
#include "belltab/dense_state.hpp"
#include "belltab/errors.hpp"
#include "belltab/tableau.hpp"

namespace belltab {

namespace {

uint64_t time_ns(const auto &fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  auto stop = std::chrono::steady_clock::now();
  return static_cast<uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start)
          .count());
}

}  // namespace

std::vector<ScalingRow> run_scaling_bench(uint32_t min_qubits,
                                          uint32_t max_qubits, size_t gates,
                                          uint64_t seed) {
  if (min_qubits == 0 || min_qubits > max_qubits) {
    throw DomainError("need 0 < min_qubits <= max_qubits");
  }
  std::vector<ScalingRow> rows;
  for (uint32_t n = min_qubits; n <= max_qubits; n *= 2) {
    Rng rng(derive_stream_seed(seed, n));
    Circuit circuit = random_clifford_circuit(n, gates, rng);

    StabilizerTableau tableau = StabilizerTableau::zero_state(n);
    uint64_t tableau_ns = time_ns([&] {
      for (const auto &inst : circuit.instructions) {
        tableau.apply_gate(std::get<GateOp>(inst));
      }
    });
    rows.push_back(ScalingRow{n, gates, "tableau", tableau_ns,
                              tableau.representation_bytes()});

    if (n <= DenseState::kMaxQubits) {
      DenseState dense(n);
      uint64_t dense_ns = time_ns([&] {
        for (const auto &inst : circuit.instructions) {
          dense.apply_gate(std::get<GateOp>(inst));
        }
      });
      rows.push_back(ScalingRow{
          n, gates, "dense", dense_ns,
          uint64_t{16} * (uint64_t{1} << n)});  // sizeof(complex<double>)
    } else {
      rows.push_back(ScalingRow{n, gates, "dense", std::nullopt, 0});
    }
  }
  return rows;
}

void write_scaling_csv(std::ostream &out, std::span<const ScalingRow> rows) {
  out << "n,gates,backend,wall_time_ns,peak_bytes\n";
  for (const auto &row : rows) {
    out << row.num_qubits << ',' << row.gates << ',' << row.backend << ',';
    if (row.wall_time_ns) {
      out << *row.wall_time_ns << ',' << row.peak_bytes << '\n';
    } else {
      out << "skipped:cap,0\n";
    }
  }
}

double log_log_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw DomainError("slope fit needs two matching samples at least");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double count = static_cast<double>(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    double lx = std::log2(x[i]);
    double ly = std::log2(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

}  // namespace belltab

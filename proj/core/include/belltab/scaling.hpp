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

#ifndef BELLTAB_SCALING_HPP
#define BELLTAB_SCALING_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace belltab {

/// One row of the tableau-vs-dense scaling comparison. peak_bytes counts
/// the state representation itself (tableau: 2n rows of 2n+1 bits; dense:
/// 16 bytes per amplitude), not allocator overhead or process RSS, so
/// rows are comparable across platforms.
struct ScalingRow {
  uint32_t num_qubits;
  size_t gates;
  std::string backend;
  std::optional<uint64_t> wall_time_ns;  // nullopt => skipped:cap
  uint64_t peak_bytes;
};

/// For each n = min_qubits, 2*min_qubits, ... <= max_qubits: generate one
/// random Clifford circuit with `gates` gates, run it on the tableau
/// backend, and on the dense backend while n is under its cap (beyond it
/// the row is marked skipped).
std::vector<ScalingRow> run_scaling_bench(uint32_t min_qubits,
                                          uint32_t max_qubits, size_t gates,
                                          uint64_t seed);

/// CSV schema: `n,gates,backend,wall_time_ns,peak_bytes`; a skipped run
/// reports `skipped:cap` in the wall_time_ns column.
void write_scaling_csv(std::ostream &out, std::span<const ScalingRow> rows);

/// Least-squares slope of log2(y) against log2(x).
double log_log_slope(std::span<const double> x, std::span<const double> y);

}  // namespace belltab

#endif  // BELLTAB_SCALING_HPP

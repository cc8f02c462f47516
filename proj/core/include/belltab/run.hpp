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

#ifndef BELLTAB_RUN_HPP
#define BELLTAB_RUN_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "belltab/circuit.hpp"

namespace belltab {

enum class Backend { Tableau, Dense };

std::string_view backend_name(Backend backend);

/// Everything needed to replay a shot run: (circuit, seed, backend)
/// reproduce the record bit for bit. Shot s draws its own stream from
/// derive_stream_seed(seed, s), so the record is also independent of how
/// shots are spread over workers.
struct RunRecord {
  uint64_t seed = 0;
  Backend backend = Backend::Tableau;
  size_t shots = 0;
  unsigned workers = 1;
  /// One classical-register string per shot, clbit 0 leftmost.
  std::vector<std::string> shot_bits;
  /// Final state of the last shot: canonical stabilizer rows, or the
  /// amplitude CSV on the dense backend.
  std::string final_state;
};

/// Runs `shots` executions of the circuit. The tableau backend rejects
/// rotations (UnsupportedGateError); the dense backend enforces its qubit
/// cap (CapacityError).
RunRecord run_shots(const Circuit &circuit, Backend backend, size_t shots,
                    uint64_t seed, unsigned workers = 1);

/// Prints the record: header, classical-bit frequency table, final state.
void write_run_record(std::ostream &out, const RunRecord &record);

}  // namespace belltab

#endif  // BELLTAB_RUN_HPP

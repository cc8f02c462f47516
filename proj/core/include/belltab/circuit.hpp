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

#ifndef BELLTAB_CIRCUIT_HPP
#define BELLTAB_CIRCUIT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "belltab/errors.hpp"
#include "belltab/rng.hpp"

namespace belltab {

enum class GateKind : uint8_t { H, S, X, Y, Z, CNOT, RX, RY, RZ };

/// Gates the stabilizer backend supports; rotations are the deliberate
/// extension handled by the dense backend only.
bool is_clifford_gate(GateKind kind);
bool is_rotation_gate(GateKind kind);
bool is_two_qubit_gate(GateKind kind);
std::string_view gate_name(GateKind kind);

struct GateOp {
  GateKind kind;
  uint32_t q0 = 0;
  uint32_t q1 = 0;     // CNOT target; unused otherwise
  double angle = 0.0;  // rotations only, radians
};

struct MeasureOp {
  uint32_t qubit;
  uint32_t clbit;
};

/// Gate applied iff the named classical bit is 1.
struct CondGateOp {
  uint32_t clbit;
  GateOp gate;
};

using Instruction = std::variant<GateOp, MeasureOp, CondGateOp>;

struct Circuit {
  uint32_t num_qubits = 0;
  uint32_t num_clbits = 0;
  std::vector<Instruction> instructions;

  size_t gate_count() const;
  size_t measure_count() const;
};

/// Parses the line-oriented circuit grammar:
///
///   qubits <n>
///   clbits <m>
///   h q | s q | x q | y q | z q | cnot c t
///   rx theta q | ry theta q | rz theta q
///   measure q -> c
///   cif c <gate line>
///
/// '#' starts a comment; blank lines are ignored. Errors (unknown
/// mnemonic, out-of-range index, cnot with control == target, malformed
/// angle) throw ParseError naming the line.
Circuit parse_circuit(std::string_view text);

Circuit parse_circuit_file(const std::string &path);

/// Random Clifford circuit: `num_gates` draws uniform over {H, S, CNOT}
/// with uniform qubit choices (CNOT needs num_qubits >= 2). This is not
/// Haar-uniform over the Clifford group; it is adequate for equivalence
/// testing and benchmarks.
Circuit random_clifford_circuit(uint32_t num_qubits, size_t num_gates,
                                Rng &rng);

}  // namespace belltab

#endif  // BELLTAB_CIRCUIT_HPP

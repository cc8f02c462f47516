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

#ifndef BELLTAB_CLIFFORD_ACTION_HPP
#define BELLTAB_CLIFFORD_ACTION_HPP

#include "belltab/circuit.hpp"
#include "belltab/pauli_string.hpp"

namespace belltab {

// In-place conjugation p <- U p U^dagger for the generator gates. These
// rules are the single source of truth for both the tableau rows and the
// Heisenberg-picture audit.
//
// Conventions (phase gate: diag(1, i)):
//   H:    X <-> Z,  Y -> -Y
//   S:    X -> Y,   Y -> -X,  Z -> Z
//   X:    Z -> -Z,  Y -> -Y
//   Y:    X -> -X,  Z -> -Z
//   Z:    X -> -X,  Y -> -Y
//   CNOT: X_c -> X_c X_t,  Z_t -> Z_c Z_t,  X_t -> X_t,  Z_c -> Z_c

inline void conjugate_h(PauliString &p, size_t q) {
  bool x = p.x_bit(q);
  bool z = p.z_bit(q);
  if (x && z) {
    p.mul_phase_exp(2);
  }
  p.set_x_bit(q, z);
  p.set_z_bit(q, x);
}

inline void conjugate_s(PauliString &p, size_t q) {
  bool x = p.x_bit(q);
  bool z = p.z_bit(q);
  if (x && z) {
    p.mul_phase_exp(2);
  }
  p.set_z_bit(q, z ^ x);
}

inline void conjugate_x(PauliString &p, size_t q) {
  if (p.z_bit(q)) {
    p.mul_phase_exp(2);
  }
}

inline void conjugate_y(PauliString &p, size_t q) {
  if (p.x_bit(q) ^ p.z_bit(q)) {
    p.mul_phase_exp(2);
  }
}

inline void conjugate_z(PauliString &p, size_t q) {
  if (p.x_bit(q)) {
    p.mul_phase_exp(2);
  }
}

inline void conjugate_cnot(PauliString &p, size_t control, size_t target) {
  bool xc = p.x_bit(control);
  bool zc = p.z_bit(control);
  bool xt = p.x_bit(target);
  bool zt = p.z_bit(target);
  if (xc && zt && (xt == zc)) {
    p.mul_phase_exp(2);
  }
  p.set_x_bit(target, xt ^ xc);
  p.set_z_bit(control, zc ^ zt);
}

/// Applies the conjugation rule for `gate`. Throws UnsupportedGateError for
/// rotations: they leave the Pauli group, which is exactly the boundary the
/// stabilizer formalism lives inside.
inline void conjugate_gate(PauliString &p, const GateOp &gate) {
  switch (gate.kind) {
    case GateKind::H:
      conjugate_h(p, gate.q0);
      return;
    case GateKind::S:
      conjugate_s(p, gate.q0);
      return;
    case GateKind::X:
      conjugate_x(p, gate.q0);
      return;
    case GateKind::Y:
      conjugate_y(p, gate.q0);
      return;
    case GateKind::Z:
      conjugate_z(p, gate.q0);
      return;
    case GateKind::CNOT:
      conjugate_cnot(p, gate.q0, gate.q1);
      return;
    default:
      throw UnsupportedGateError(
          std::string("gate '") + std::string(gate_name(gate.kind)) +
          "' is not in the supported stabilizer gate set {h, s, x, y, z, "
          "cnot}");
  }
}

}  // namespace belltab

#endif  // BELLTAB_CLIFFORD_ACTION_HPP

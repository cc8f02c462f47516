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

#ifndef BELLTAB_CLIFFORD_AUDIT_HPP
#define BELLTAB_CLIFFORD_AUDIT_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <vector>

#include "belltab/bell.hpp"
#include "belltab/circuit.hpp"
#include "belltab/pauli_string.hpp"
#include "belltab/tableau.hpp"

namespace belltab {

// Heisenberg-picture machinery behind one operational fact: Clifford
// circuits move Pauli observables only onto signed Pauli axes, and on
// those axes CHSH never exceeds 2. Reaching 2*sqrt(2) on the very same
// states requires observables the stabilizer gate set cannot produce.

/// U p U^dagger for a measurement-free, rotation-free circuit, applying
/// per-gate conjugation rules in circuit order. Always a single phased
/// Pauli string. Conditional gates are rejected too: they are not
/// unitaries.
PauliString conjugate_pauli_by_circuit(const PauliString &p,
                                       const Circuit &circuit);

/// Action of a single-qubit Clifford circuit on the Bloch (X, Y, Z) axes:
/// column a holds the signed image axis of Pauli a.
using AxisAction = std::array<std::array<int, 3>, 3>;

bool is_signed_permutation(const AxisAction &m);
int axis_action_determinant(const AxisAction &m);

struct BlochRotation {
  AxisAction matrix;
  /// Rotation angle in [0, pi], from arccos((trace - 1) / 2).
  double angle;
  /// Rotation axis; absent when the angle is 0 or pi (degenerate axis).
  std::optional<std::array<double, 3>> axis;
};

/// Builds the axis action of a single-qubit Clifford circuit by
/// conjugating X, Y, Z, checks it is a signed permutation of determinant
/// +1 (a proper octahedral rotation), and extracts the rotation angle.
BlochRotation bloch_rotation_of(const Circuit &circuit);

/// The closure of the H and S axis actions under composition: the 24
/// proper signed permutations, i.e. the rotation group of the octahedron.
std::vector<AxisAction> single_qubit_axis_action_closure();

struct StabilizerCHSHAudit {
  double max_chsh;
  /// Observables attaining the maximum: A, A' on qubit 0, B, B' on qubit 1.
  std::array<Pauli, 4> settings;
};

/// Exhausts all 81 quadruples A, A' in {X,Y,Z} on qubit 0 and B, B' in
/// {X,Y,Z} on qubit 1 of a two-qubit stabilizer state; every expectation
/// is in {-1, 0, +1}. Signs of the axes are redundant here: flipping a
/// sign flips E values inside absolute values.
StabilizerCHSHAudit stabilizer_chsh_audit(const StabilizerTableau &state);

/// CHSH value of the named settings on the dense output state of a
/// two-qubit circuit; arbitrary directions allowed.
double nonclifford_witness(const Circuit &circuit,
                           const CHSHSettings &settings);

struct AuditReportRow {
  std::string state_id;
  StabilizerCHSHAudit audit;
};

/// Report format: `state_id,A,Aprime,B,Bprime,chsh` rows, then a summary
/// line `pauli_max=<v> nonclifford=<v>`.
void write_audit_csv(std::ostream &out, std::span<const AuditReportRow> rows,
                     double pauli_max, double nonclifford);

}  // namespace belltab

#endif  // BELLTAB_CLIFFORD_AUDIT_HPP

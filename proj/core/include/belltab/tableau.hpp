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

#ifndef BELLTAB_TABLEAU_HPP
#define BELLTAB_TABLEAU_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "belltab/circuit.hpp"
#include "belltab/pauli_string.hpp"
#include "belltab/rng.hpp"

namespace belltab {

struct MeasureResult {
  int outcome;         // +1 or -1 eigenvalue
  bool deterministic;  // true when the state already fixed the outcome
};

/// A stabilizer state on n qubits, stored as n stabilizer generator rows
/// plus n destabilizer rows. The destabilizers are what make measurement
/// cheap: destab[i] anticommutes with stab[i] and commutes with every
/// other stabilizer row, so membership questions reduce to row lookups
/// instead of a group search.
///
/// Invariants (checked by validate(), asserted after mutations in debug
/// builds):
///   - stabilizer rows pairwise commute and are independent (rank n),
///   - destab[i] anticommutes with stab[i], commutes with stab[j != i],
///   - all row phases are +1 or -1, and -I is not in the generated group.
///
/// A tableau mutates in place; drive one instance from one thread at a
/// time. Distinct tableaus are fully independent.
class StabilizerTableau {
 public:
  /// |0...0>: stabilizers {+Z_i}, destabilizers {+X_i}.
  static StabilizerTableau zero_state(size_t num_qubits);

  size_t num_qubits() const { return num_qubits_; }
  const PauliString &stabilizer(size_t i) const { return stab_[i]; }
  const PauliString &destabilizer(size_t i) const { return destab_[i]; }

  /// Conjugates every row by the gate. Rotations throw
  /// UnsupportedGateError.
  void apply_gate(const GateOp &gate);
  void apply_h(size_t q);
  void apply_s(size_t q);
  void apply_x(size_t q);
  void apply_y(size_t q);
  void apply_z(size_t q);
  void apply_cnot(size_t control, size_t target);

  /// Measures a Hermitian Pauli observable. If the observable commutes
  /// with every stabilizer row the outcome is deterministic and the state
  /// is unchanged; otherwise the outcome is a fair coin from `rng` and
  /// the state is updated so that outcome * p becomes a stabilizer row.
  MeasureResult measure_pauli(const PauliString &p, Rng &rng);

  /// Same, but a random outcome is forced to `outcome_bit` (0 -> +1,
  /// 1 -> -1). Lets tests enumerate measurement branches.
  MeasureResult measure_pauli_forced(const PauliString &p, bool outcome_bit);

  /// +1 if +p is in the stabilizer group, -1 if -p is, 0 if the
  /// measurement would be random. Non-mutating.
  int expectation_pauli(const PauliString &p) const;

  /// Unique row-reduced stabilizer generating set: eliminate on x bits
  /// first (column-major by qubit index), then z bits. Two tableaus
  /// describe the same state iff their canonical forms are identical.
  std::vector<PauliString> canonical_form() const;

  /// One row per line, destabilizers then stabilizers, sign-prefixed
  /// labels. Golden-file format.
  std::string to_display_string() const;

  /// State description size in bytes: 2n rows of 2n+1 bits. This is the
  /// quantity the scaling benchmark reports, deliberately free of
  /// allocator and padding noise.
  uint64_t representation_bytes() const;

  /// Checks the class invariants; throws Error on violation. O(n^3).
  void validate() const;

  bool operator==(const StabilizerTableau &other) const = default;

 private:
  StabilizerTableau() = default;

  MeasureResult measure_impl(const PauliString &p, bool have_forced,
                             bool forced_bit, Rng *rng);
  void check_observable(const PauliString &p) const;

  size_t num_qubits_ = 0;
  std::vector<PauliString> destab_;
  std::vector<PauliString> stab_;
};

/// Outcome of running a circuit on the tableau backend.
struct TableauRun {
  StabilizerTableau state;
  std::vector<uint8_t> clbits;      // final classical register
  size_t random_measurements = 0;  // coin flips consumed
};

/// Runs a Clifford-only circuit: gates, Z measurements into classical
/// bits, classically conditioned gates. Identical seed => identical
/// record. Rotations throw UnsupportedGateError.
TableauRun run_tableau(const Circuit &circuit, uint64_t seed);
TableauRun run_tableau(const Circuit &circuit, Rng &rng);

/// Branch-enumeration variant: each measurement that would flip a coin
/// consumes the next bit of `branch_bits` instead (fails if exhausted).
TableauRun run_tableau_forced(const Circuit &circuit,
                              std::span<const uint8_t> branch_bits);

}  // namespace belltab

#endif  // BELLTAB_TABLEAU_HPP

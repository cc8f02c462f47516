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

#ifndef BELLTAB_DENSE_STATE_HPP
#define BELLTAB_DENSE_STATE_HPP

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "belltab/circuit.hpp"
#include "belltab/direction.hpp"
#include "belltab/pauli_string.hpp"
#include "belltab/rng.hpp"

namespace belltab {

/// Brute-force 2^n-amplitude state vector: ground truth for the tableau
/// engine, and the only backend that accepts rotation gates and
/// arbitrary-direction spin observables. Optimized for clarity over
/// speed; hard-capped at 24 qubits.
///
/// Amplitude ordering: qubit 0 is the most significant bit of the index.
class DenseState {
 public:
  static constexpr size_t kMaxQubits = 24;
  using Amplitude = std::complex<double>;

  /// |0...0>. Throws CapacityError above the qubit cap.
  explicit DenseState(size_t num_qubits);

  /// Computational basis state from a bitstring like "01" (qubit 0 first).
  static DenseState basis_state(size_t num_qubits, std::string_view bits);

  size_t num_qubits() const { return num_qubits_; }
  const std::vector<Amplitude> &amplitudes() const { return amps_; }

  /// Applies any supported gate, rotations included.
  void apply_gate(const GateOp &gate);

  /// True iff ||p|psi> - |psi>|| < 1e-10, i.e. p fixes the state.
  /// Throws UnsupportedObservableError for non-Hermitian p.
  bool is_stabilized_by(const PauliString &p) const;

  /// <psi| p |psi> for Hermitian p.
  double expectation_pauli(const PauliString &p) const;

  /// <psi| (sigma . dir) on `qubit` |psi>, identity elsewhere.
  double expectation_spin(size_t qubit, const Direction &dir) const;

  /// <psi| (sigma . dir1)_{q1} (sigma . dir2)_{q2} |psi>.
  double expectation_spin_pair(size_t q1, const Direction &dir1, size_t q2,
                               const Direction &dir2) const;

  /// Probability that a Z measurement of `qubit` yields the bit value.
  double probability_of_bit(size_t qubit, int bit) const;

  /// Born-rule Z measurement; returns the +-1 eigenvalue (bit 0 -> +1)
  /// and collapses/renormalizes the state.
  int measure_qubit(size_t qubit, Rng &rng);

  /// Collapses to the given bit without sampling; returns the probability
  /// that branch had. A zero-probability branch leaves the state alone.
  double collapse_qubit(size_t qubit, int bit);

  /// Joint probabilities of the computational outcomes of `qubits`, in
  /// qubit-list order (first qubit = most significant result bit).
  std::vector<double> joint_distribution(std::span<const uint32_t> qubits) const;

  double norm_squared() const;

  /// |<other|this>|^2; global phase invisible by construction.
  double fidelity(const DenseState &other) const;

  /// Debug dump, one `index,real,imag` row per amplitude.
  void dump_amplitudes_csv(std::ostream &out) const;

 private:
  size_t bit_position(size_t qubit) const { return num_qubits_ - 1 - qubit; }
  void apply_single_qubit(size_t qubit, const Amplitude m00, const Amplitude m01,
                          const Amplitude m10, const Amplitude m11);
  void check_qubit(size_t qubit) const;

  size_t num_qubits_;
  std::vector<Amplitude> amps_;
};

/// Outcome of running a circuit on the dense backend.
struct DenseRun {
  DenseState state;
  std::vector<uint8_t> clbits;
};

DenseRun run_dense(const Circuit &circuit, uint64_t seed);
DenseRun run_dense(const Circuit &circuit, Rng &rng);

/// Forced-branch run: every measurement consumes one bit of
/// `branch_bits`. branch_probability is the product of the probabilities
/// of the forced outcomes (0 if the branch is impossible).
struct ForcedDenseRun {
  DenseState state;
  std::vector<uint8_t> clbits;
  double branch_probability;
};

ForcedDenseRun run_dense_forced(const Circuit &circuit,
                                std::span<const uint8_t> branch_bits);

}  // namespace belltab

#endif  // BELLTAB_DENSE_STATE_HPP

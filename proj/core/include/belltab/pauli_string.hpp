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

#ifndef BELLTAB_PAULI_STRING_HPP
#define BELLTAB_PAULI_STRING_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "belltab/errors.hpp"

namespace belltab {

/// One tensor factor of a Pauli string.
enum class Pauli : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_to_char(Pauli p);

/// An n-qubit Pauli group element: a global phase i^k (k mod 4) times a
/// tensor product of single-qubit Paulis.
///
/// Qubit q carries X iff x_bit(q) && !z_bit(q), Z iff !x && z, Y iff both,
/// I iff neither. The matrix interpretation is i^phase_exp * (s_0 x s_1 x
/// ... x s_{n-1}) with s_q in {I, X, Y, Z} Hermitian, so phase_exp in
/// {0, 2} means a Hermitian operator and {1, 3} an anti-Hermitian one.
///
/// Bit masks are packed 64 qubits per word. Multiplication and commutation
/// are word-parallel and track phases exactly (integer arithmetic only).
/// Values are immutable in spirit: nothing here shares state, so strings
/// may be copied and moved across threads freely.
class PauliString {
 public:
  /// The identity on `num_qubits` qubits.
  explicit PauliString(size_t num_qubits);

  /// Parses a label such as "+XXI", "-ZZ" or "-iYZ". The phase prefix
  /// ("+", "-", "+i", "-i") is optional and defaults to "+"; the remainder
  /// must be one character per qubit from {I, X, Y, Z}.
  static PauliString from_label(std::string_view label);

  /// A string with `p` on qubit `q` of `num_qubits` and identity elsewhere.
  static PauliString single(size_t num_qubits, size_t q, Pauli p);

  /// Canonical label with explicit sign, e.g. "+XX", "-YY", "+iY".
  std::string to_label() const;

  size_t num_qubits() const { return num_qubits_; }

  /// k of the global phase i^k, in {0, 1, 2, 3}.
  uint8_t phase_exp() const { return phase_exp_; }
  void set_phase_exp(uint8_t k) { phase_exp_ = k & 3u; }
  void mul_phase_exp(int k);

  /// Hermitian iff the phase is +1 or -1.
  bool is_hermitian() const { return (phase_exp_ & 1u) == 0; }

  /// +1 or -1. Only meaningful for Hermitian strings.
  int sign() const { return phase_exp_ == 2 ? -1 : +1; }

  bool x_bit(size_t q) const { return (x_[q >> 6] >> (q & 63u)) & 1u; }
  bool z_bit(size_t q) const { return (z_[q >> 6] >> (q & 63u)) & 1u; }
  void set_x_bit(size_t q, bool v);
  void set_z_bit(size_t q, bool v);

  Pauli pauli_at(size_t q) const;
  void set_pauli(size_t q, Pauli p);

  /// Count of non-identity tensor factors. The phase is ignored.
  size_t weight() const;

  bool is_identity_bits() const;

  /// True iff ab == ba, from the parity of the per-qubit anticommutation
  /// count. Throws DimensionError on mismatched qubit counts.
  bool commutes_with(const PauliString &other) const;

  /// Group product with exact phase accumulation.
  PauliString &operator*=(const PauliString &rhs);
  friend PauliString operator*(PauliString lhs, const PauliString &rhs) {
    lhs *= rhs;
    return lhs;
  }

  bool operator==(const PauliString &other) const = default;

  std::span<const uint64_t> x_words() const { return x_; }
  std::span<const uint64_t> z_words() const { return z_; }

 private:
  size_t num_qubits_;
  uint8_t phase_exp_;
  std::vector<uint64_t> x_;
  std::vector<uint64_t> z_;

  void check_same_size(const PauliString &other) const;
};

/// Strict total order on (z_bits, x_bits, phase_exp); bit masks compare as
/// little-endian word integers. Fixes the output order of group_closure
/// and makes golden files deterministic.
bool canonical_less(const PauliString &a, const PauliString &b);

struct GroupClosure {
  /// The generated group in canonical order, identity included.
  std::vector<PauliString> elements;
  /// Set when -I is an element; such a group stabilizes no state.
  bool contains_minus_identity = false;
};

/// Multiplicative closure of `generators`, capped at `cap` elements
/// (CapacityError beyond that). Empty input yields just the identity,
/// which requires `num_qubits` to size it.
GroupClosure group_closure(std::span<const PauliString> generators, size_t cap,
                           size_t num_qubits);

}  // namespace belltab

#endif  // BELLTAB_PAULI_STRING_HPP

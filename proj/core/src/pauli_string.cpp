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

#include "belltab/pauli_string.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace belltab {

namespace {

size_t words_for(size_t num_qubits) { return (num_qubits + 63) / 64; }

const char *kPhasePrefix[4] = {"+", "+i", "-", "-i"};

}  // namespace

char pauli_to_char(Pauli p) {
  switch (p) {
    case Pauli::I:
      return 'I';
    case Pauli::X:
      return 'X';
    case Pauli::Y:
      return 'Y';
    case Pauli::Z:
      return 'Z';
  }
  return '?';
}

PauliString::PauliString(size_t num_qubits)
    : num_qubits_(num_qubits),
      phase_exp_(0),
      x_(words_for(num_qubits), 0),
      z_(words_for(num_qubits), 0) {
  if (num_qubits == 0) {
    throw DimensionError("PauliString needs at least one qubit");
  }
}

PauliString PauliString::from_label(std::string_view label) {
  size_t pos = 0;
  uint8_t phase = 0;
  if (pos < label.size() && (label[pos] == '+' || label[pos] == '-')) {
    phase = label[pos] == '-' ? 2 : 0;
    ++pos;
  }
  if (pos < label.size() && label[pos] == 'i') {
    phase = (phase + 1) & 3u;
    ++pos;
  }
  if (pos == label.size()) {
    throw ParseError("Pauli label \"" + std::string(label) +
                     "\" has no tensor factors after position " +
                     std::to_string(pos));
  }
  PauliString result(label.size() - pos);
  for (size_t q = 0; pos < label.size(); ++pos, ++q) {
    switch (label[pos]) {
      case 'I':
        break;
      case 'X':
        result.set_pauli(q, Pauli::X);
        break;
      case 'Y':
        result.set_pauli(q, Pauli::Y);
        break;
      case 'Z':
        result.set_pauli(q, Pauli::Z);
        break;
      default:
        throw ParseError("invalid character '" + std::string(1, label[pos]) +
                         "' at position " + std::to_string(pos) +
                         " of Pauli label \"" + std::string(label) + "\"");
    }
  }
  result.phase_exp_ = phase;
  return result;
}

PauliString PauliString::single(size_t num_qubits, size_t q, Pauli p) {
  PauliString result(num_qubits);
  if (q >= num_qubits) {
    throw DimensionError("qubit index " + std::to_string(q) +
                         " out of range for " + std::to_string(num_qubits) +
                         " qubits");
  }
  result.set_pauli(q, p);
  return result;
}

std::string PauliString::to_label() const {
  std::string out = kPhasePrefix[phase_exp_];
  out.reserve(out.size() + num_qubits_);
  for (size_t q = 0; q < num_qubits_; ++q) {
    out.push_back(pauli_to_char(pauli_at(q)));
  }
  return out;
}

void PauliString::mul_phase_exp(int k) {
  phase_exp_ = static_cast<uint8_t>(((phase_exp_ + k) % 4 + 4) % 4);
}

void PauliString::set_x_bit(size_t q, bool v) {
  uint64_t mask = 1ULL << (q & 63u);
  if (v) {
    x_[q >> 6] |= mask;
  } else {
    x_[q >> 6] &= ~mask;
  }
}

void PauliString::set_z_bit(size_t q, bool v) {
  uint64_t mask = 1ULL << (q & 63u);
  if (v) {
    z_[q >> 6] |= mask;
  } else {
    z_[q >> 6] &= ~mask;
  }
}

Pauli PauliString::pauli_at(size_t q) const {
  bool x = x_bit(q);
  bool z = z_bit(q);
  if (x && z) {
    return Pauli::Y;
  }
  if (x) {
    return Pauli::X;
  }
  if (z) {
    return Pauli::Z;
  }
  return Pauli::I;
}

void PauliString::set_pauli(size_t q, Pauli p) {
  set_x_bit(q, p == Pauli::X || p == Pauli::Y);
  set_z_bit(q, p == Pauli::Z || p == Pauli::Y);
}

size_t PauliString::weight() const {
  size_t count = 0;
  for (size_t w = 0; w < x_.size(); ++w) {
    count += std::popcount(x_[w] | z_[w]);
  }
  return count;
}

bool PauliString::is_identity_bits() const {
  for (size_t w = 0; w < x_.size(); ++w) {
    if ((x_[w] | z_[w]) != 0) {
      return false;
    }
  }
  return true;
}

void PauliString::check_same_size(const PauliString &other) const {
  if (num_qubits_ != other.num_qubits_) {
    throw DimensionError("Pauli strings act on different qubit counts (" +
                         std::to_string(num_qubits_) + " vs " +
                         std::to_string(other.num_qubits_) + ")");
  }
}

bool PauliString::commutes_with(const PauliString &other) const {
  check_same_size(other);
  uint64_t parity_acc = 0;
  for (size_t w = 0; w < x_.size(); ++w) {
    parity_acc ^= (x_[w] & other.z_[w]) ^ (z_[w] & other.x_[w]);
  }
  return (std::popcount(parity_acc) & 1) == 0;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
  check_same_size(rhs);
  // Per qubit, s_a * s_b = i^g * s_{a^b} with g in {0, +1, -1}. The masks
  // below pick out the +1 (cyclic: XY, YZ, ZX) and -1 (anticyclic)
  // positions; the total phase is the signed popcount mod 4.
  int64_t plus = 0;
  int64_t minus = 0;
  for (size_t w = 0; w < x_.size(); ++w) {
    uint64_t x1 = x_[w];
    uint64_t z1 = z_[w];
    uint64_t x2 = rhs.x_[w];
    uint64_t z2 = rhs.z_[w];
    uint64_t cyc = (~x1 & z1 & x2 & ~z2) | (x1 & ~z1 & x2 & z2) |
                   (x1 & z1 & ~x2 & z2);
    uint64_t anti = (x1 & ~z1 & ~x2 & z2) | (x1 & z1 & x2 & ~z2) |
                    (~x1 & z1 & x2 & z2);
    plus += std::popcount(cyc);
    minus += std::popcount(anti);
    x_[w] ^= x2;
    z_[w] ^= z2;
  }
  mul_phase_exp(static_cast<int>(rhs.phase_exp_) +
                static_cast<int>((plus - minus) & 3));
  return *this;
}

bool canonical_less(const PauliString &a, const PauliString &b) {
  if (a.num_qubits() != b.num_qubits()) {
    return a.num_qubits() < b.num_qubits();
  }
  auto cmp_words = [](std::span<const uint64_t> u, std::span<const uint64_t> v) {
    for (size_t w = u.size(); w-- > 0;) {
      if (u[w] != v[w]) {
        return u[w] < v[w] ? -1 : 1;
      }
    }
    return 0;
  };
  if (int c = cmp_words(a.z_words(), b.z_words()); c != 0) {
    return c < 0;
  }
  if (int c = cmp_words(a.x_words(), b.x_words()); c != 0) {
    return c < 0;
  }
  return a.phase_exp() < b.phase_exp();
}

GroupClosure group_closure(std::span<const PauliString> generators, size_t cap,
                           size_t num_qubits) {
  for (const auto &g : generators) {
    if (g.num_qubits() != num_qubits) {
      throw DimensionError("group_closure generators must all act on " +
                           std::to_string(num_qubits) + " qubits");
    }
  }
  std::set<PauliString, decltype(&canonical_less)> seen(&canonical_less);
  std::vector<PauliString> worklist;
  PauliString identity(num_qubits);
  seen.insert(identity);
  worklist.push_back(identity);
  while (!worklist.empty()) {
    PauliString current = std::move(worklist.back());
    worklist.pop_back();
    for (const auto &g : generators) {
      PauliString next = current * g;
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw CapacityError("group closure exceeds cap of " +
                              std::to_string(cap) + " elements");
        }
        worklist.push_back(std::move(next));
      }
    }
  }
  GroupClosure result;
  result.elements.assign(seen.begin(), seen.end());
  for (const auto &e : result.elements) {
    if (e.is_identity_bits() && e.phase_exp() == 2) {
      result.contains_minus_identity = true;
      break;
    }
  }
  return result;
}

}  // namespace belltab

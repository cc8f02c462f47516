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

#include "belltab/dense_state.hpp"

#include <bit>
#include <cassert>
#include <cmath>
#include <ostream>

namespace belltab {

namespace {

constexpr double kSqrtHalf = 0.70710678118654752440;
const std::complex<double> kImag(0.0, 1.0);

}  // namespace

DenseState::DenseState(size_t num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits == 0) {
    throw DimensionError("dense state needs at least one qubit");
  }
  if (num_qubits > kMaxQubits) {
    throw CapacityError("dense backend caps at " + std::to_string(kMaxQubits) +
                        " qubits (2^n amplitudes); requested " +
                        std::to_string(num_qubits));
  }
  amps_.assign(size_t{1} << num_qubits, Amplitude(0.0, 0.0));
  amps_[0] = Amplitude(1.0, 0.0);
}

DenseState DenseState::basis_state(size_t num_qubits, std::string_view bits) {
  DenseState state(num_qubits);
  if (bits.size() != num_qubits) {
    throw DimensionError("bitstring length " + std::to_string(bits.size()) +
                         " does not match qubit count " +
                         std::to_string(num_qubits));
  }
  size_t index = 0;
  for (size_t q = 0; q < num_qubits; ++q) {
    if (bits[q] != '0' && bits[q] != '1') {
      throw ParseError("bitstring may contain only 0 and 1");
    }
    if (bits[q] == '1') {
      index |= size_t{1} << (num_qubits - 1 - q);
    }
  }
  state.amps_[0] = Amplitude(0.0, 0.0);
  state.amps_[index] = Amplitude(1.0, 0.0);
  return state;
}

void DenseState::check_qubit(size_t qubit) const {
  if (qubit >= num_qubits_) {
    throw DimensionError("qubit index " + std::to_string(qubit) +
                         " out of range for " + std::to_string(num_qubits_) +
                         " qubits");
  }
}

void DenseState::apply_single_qubit(size_t qubit, const Amplitude m00,
                                    const Amplitude m01, const Amplitude m10,
                                    const Amplitude m11) {
  size_t stride = size_t{1} << bit_position(qubit);
  size_t size = amps_.size();
  for (size_t base = 0; base < size; base += 2 * stride) {
    for (size_t offset = 0; offset < stride; ++offset) {
      size_t i0 = base + offset;
      size_t i1 = i0 + stride;
      Amplitude a0 = amps_[i0];
      Amplitude a1 = amps_[i1];
      amps_[i0] = m00 * a0 + m01 * a1;
      amps_[i1] = m10 * a0 + m11 * a1;
    }
  }
}

void DenseState::apply_gate(const GateOp &gate) {
  check_qubit(gate.q0);
  switch (gate.kind) {
    case GateKind::H:
      apply_single_qubit(gate.q0, kSqrtHalf, kSqrtHalf, kSqrtHalf, -kSqrtHalf);
      break;
    case GateKind::S:
      apply_single_qubit(gate.q0, 1.0, 0.0, 0.0, kImag);
      break;
    case GateKind::X:
      apply_single_qubit(gate.q0, 0.0, 1.0, 1.0, 0.0);
      break;
    case GateKind::Y:
      apply_single_qubit(gate.q0, 0.0, -kImag, kImag, 0.0);
      break;
    case GateKind::Z:
      apply_single_qubit(gate.q0, 1.0, 0.0, 0.0, -1.0);
      break;
    case GateKind::RX: {
      double c = std::cos(gate.angle / 2);
      double s = std::sin(gate.angle / 2);
      apply_single_qubit(gate.q0, c, -kImag * s, -kImag * s, c);
      break;
    }
    case GateKind::RY: {
      double c = std::cos(gate.angle / 2);
      double s = std::sin(gate.angle / 2);
      apply_single_qubit(gate.q0, c, -s, s, c);
      break;
    }
    case GateKind::RZ: {
      Amplitude e0 = std::exp(-kImag * (gate.angle / 2));
      Amplitude e1 = std::exp(kImag * (gate.angle / 2));
      apply_single_qubit(gate.q0, e0, 0.0, 0.0, e1);
      break;
    }
    case GateKind::CNOT: {
      check_qubit(gate.q1);
      if (gate.q0 == gate.q1) {
        throw DimensionError("cnot control and target must differ");
      }
      size_t control_mask = size_t{1} << bit_position(gate.q0);
      size_t target_mask = size_t{1} << bit_position(gate.q1);
      for (size_t i = 0; i < amps_.size(); ++i) {
        if ((i & control_mask) && !(i & target_mask)) {
          std::swap(amps_[i], amps_[i | target_mask]);
        }
      }
      break;
    }
  }
  assert(std::abs(norm_squared() - 1.0) < 1e-12);
}

bool DenseState::is_stabilized_by(const PauliString &p) const {
  if (!p.is_hermitian()) {
    throw UnsupportedObservableError("stabilizer check requires a Hermitian "
                                     "Pauli, got " +
                                     p.to_label());
  }
  if (p.num_qubits() != num_qubits_) {
    throw DimensionError("observable qubit count mismatch");
  }
  // P|b> = i^(k + #Y) (-1)^(z.b) |b ^ x>; accumulate ||P psi - psi||^2
  // without materializing P psi.
  size_t x_mask = 0;
  size_t z_mask = 0;
  size_t y_count = 0;
  for (size_t q = 0; q < num_qubits_; ++q) {
    if (p.x_bit(q)) {
      x_mask |= size_t{1} << bit_position(q);
    }
    if (p.z_bit(q)) {
      z_mask |= size_t{1} << bit_position(q);
    }
    if (p.x_bit(q) && p.z_bit(q)) {
      ++y_count;
    }
  }
  Amplitude front(1.0, 0.0);
  switch ((p.phase_exp() + y_count) & 3u) {
    case 0:
      front = 1.0;
      break;
    case 1:
      front = kImag;
      break;
    case 2:
      front = -1.0;
      break;
    case 3:
      front = -kImag;
      break;
  }
  double diff2 = 0.0;
  for (size_t b = 0; b < amps_.size(); ++b) {
    size_t src = b ^ x_mask;
    double sign = (std::popcount(src & z_mask) & 1) ? -1.0 : 1.0;
    Amplitude mapped = front * sign * amps_[src];
    diff2 += std::norm(mapped - amps_[b]);
  }
  return std::sqrt(diff2) < 1e-10;
}

double DenseState::expectation_pauli(const PauliString &p) const {
  if (!p.is_hermitian()) {
    throw UnsupportedObservableError("expectation requires a Hermitian Pauli");
  }
  if (p.num_qubits() != num_qubits_) {
    throw DimensionError("observable qubit count mismatch");
  }
  size_t x_mask = 0;
  size_t z_mask = 0;
  size_t y_count = 0;
  for (size_t q = 0; q < num_qubits_; ++q) {
    if (p.x_bit(q)) {
      x_mask |= size_t{1} << bit_position(q);
    }
    if (p.z_bit(q)) {
      z_mask |= size_t{1} << bit_position(q);
    }
    if (p.x_bit(q) && p.z_bit(q)) {
      ++y_count;
    }
  }
  Amplitude front = 1.0;
  switch ((p.phase_exp() + y_count) & 3u) {
    case 1:
      front = kImag;
      break;
    case 2:
      front = -1.0;
      break;
    case 3:
      front = -kImag;
      break;
    default:
      break;
  }
  Amplitude acc(0.0, 0.0);
  for (size_t b = 0; b < amps_.size(); ++b) {
    size_t src = b ^ x_mask;
    double sign = (std::popcount(src & z_mask) & 1) ? -1.0 : 1.0;
    acc += std::conj(amps_[b]) * front * sign * amps_[src];
  }
  return acc.real();
}

double DenseState::expectation_spin(size_t qubit, const Direction &dir) const {
  check_qubit(qubit);
  Amplitude m00(dir.z, 0.0);
  Amplitude m01(dir.x, -dir.y);
  Amplitude m10(dir.x, dir.y);
  Amplitude m11(-dir.z, 0.0);
  size_t stride = size_t{1} << bit_position(qubit);
  Amplitude acc(0.0, 0.0);
  for (size_t base = 0; base < amps_.size(); base += 2 * stride) {
    for (size_t offset = 0; offset < stride; ++offset) {
      size_t i0 = base + offset;
      size_t i1 = i0 + stride;
      acc += std::conj(amps_[i0]) * (m00 * amps_[i0] + m01 * amps_[i1]);
      acc += std::conj(amps_[i1]) * (m10 * amps_[i0] + m11 * amps_[i1]);
    }
  }
  return acc.real();
}

double DenseState::expectation_spin_pair(size_t q1, const Direction &dir1,
                                         size_t q2,
                                         const Direction &dir2) const {
  check_qubit(q1);
  check_qubit(q2);
  if (q1 == q2) {
    throw DimensionError("spin pair must address two distinct qubits");
  }
  DenseState scratch = *this;
  scratch.apply_single_qubit(q1, Amplitude(dir1.z, 0), Amplitude(dir1.x, -dir1.y),
                             Amplitude(dir1.x, dir1.y), Amplitude(-dir1.z, 0));
  scratch.apply_single_qubit(q2, Amplitude(dir2.z, 0), Amplitude(dir2.x, -dir2.y),
                             Amplitude(dir2.x, dir2.y), Amplitude(-dir2.z, 0));
  Amplitude acc(0.0, 0.0);
  for (size_t i = 0; i < amps_.size(); ++i) {
    acc += std::conj(amps_[i]) * scratch.amps_[i];
  }
  return acc.real();
}

double DenseState::probability_of_bit(size_t qubit, int bit) const {
  check_qubit(qubit);
  size_t mask = size_t{1} << bit_position(qubit);
  double p1 = 0.0;
  for (size_t i = 0; i < amps_.size(); ++i) {
    if (i & mask) {
      p1 += std::norm(amps_[i]);
    }
  }
  return bit ? p1 : 1.0 - p1;
}

int DenseState::measure_qubit(size_t qubit, Rng &rng) {
  double p1 = probability_of_bit(qubit, 1);
  int bit = uniform_unit(rng) < p1 ? 1 : 0;
  collapse_qubit(qubit, bit);
  return bit ? -1 : +1;
}

double DenseState::collapse_qubit(size_t qubit, int bit) {
  check_qubit(qubit);
  double prob = probability_of_bit(qubit, bit);
  if (prob <= 0.0) {
    return 0.0;
  }
  size_t mask = size_t{1} << bit_position(qubit);
  double scale = 1.0 / std::sqrt(prob);
  for (size_t i = 0; i < amps_.size(); ++i) {
    bool keeps = ((i & mask) != 0) == (bit != 0);
    amps_[i] = keeps ? amps_[i] * scale : Amplitude(0.0, 0.0);
  }
  return prob;
}

std::vector<double> DenseState::joint_distribution(
    std::span<const uint32_t> qubits) const {
  for (uint32_t q : qubits) {
    check_qubit(q);
  }
  std::vector<double> dist(size_t{1} << qubits.size(), 0.0);
  for (size_t b = 0; b < amps_.size(); ++b) {
    size_t out = 0;
    for (uint32_t q : qubits) {
      out = (out << 1) | ((b >> bit_position(q)) & 1u);
    }
    dist[out] += std::norm(amps_[b]);
  }
  return dist;
}

double DenseState::norm_squared() const {
  double acc = 0.0;
  for (const auto &a : amps_) {
    acc += std::norm(a);
  }
  return acc;
}

double DenseState::fidelity(const DenseState &other) const {
  if (other.num_qubits_ != num_qubits_) {
    throw DimensionError("fidelity between different qubit counts");
  }
  Amplitude overlap(0.0, 0.0);
  for (size_t i = 0; i < amps_.size(); ++i) {
    overlap += std::conj(other.amps_[i]) * amps_[i];
  }
  return std::norm(overlap);
}

void DenseState::dump_amplitudes_csv(std::ostream &out) const {
  out << "index,real,imag\n";
  for (size_t i = 0; i < amps_.size(); ++i) {
    out << i << ',' << amps_[i].real() << ',' << amps_[i].imag() << '\n';
  }
}

namespace {

DenseRun run_dense_impl(const Circuit &circuit, Rng &rng) {
  DenseRun run{DenseState(circuit.num_qubits),
               std::vector<uint8_t>(circuit.num_clbits, 0)};
  for (const auto &inst : circuit.instructions) {
    if (const auto *gate = std::get_if<GateOp>(&inst)) {
      run.state.apply_gate(*gate);
    } else if (const auto *cond = std::get_if<CondGateOp>(&inst)) {
      if (run.clbits[cond->clbit]) {
        run.state.apply_gate(cond->gate);
      }
    } else {
      const auto &m = std::get<MeasureOp>(inst);
      int outcome = run.state.measure_qubit(m.qubit, rng);
      run.clbits[m.clbit] = outcome < 0 ? 1 : 0;
    }
  }
  return run;
}

}  // namespace

DenseRun run_dense(const Circuit &circuit, Rng &rng) {
  return run_dense_impl(circuit, rng);
}

DenseRun run_dense(const Circuit &circuit, uint64_t seed) {
  Rng rng(seed);
  return run_dense_impl(circuit, rng);
}

ForcedDenseRun run_dense_forced(const Circuit &circuit,
                                std::span<const uint8_t> branch_bits) {
  ForcedDenseRun run{DenseState(circuit.num_qubits),
                     std::vector<uint8_t>(circuit.num_clbits, 0), 1.0};
  size_t next_bit = 0;
  for (const auto &inst : circuit.instructions) {
    if (const auto *gate = std::get_if<GateOp>(&inst)) {
      run.state.apply_gate(*gate);
    } else if (const auto *cond = std::get_if<CondGateOp>(&inst)) {
      if (run.clbits[cond->clbit]) {
        run.state.apply_gate(cond->gate);
      }
    } else {
      const auto &m = std::get<MeasureOp>(inst);
      if (next_bit >= branch_bits.size()) {
        throw Error("branch bits exhausted while forcing measurements");
      }
      int bit = branch_bits[next_bit++] != 0 ? 1 : 0;
      run.branch_probability *= run.state.collapse_qubit(m.qubit, bit);
      run.clbits[m.clbit] = static_cast<uint8_t>(bit);
    }
  }
  return run;
}

}  // namespace belltab

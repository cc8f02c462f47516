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

#include "belltab/tableau.hpp"

#include <cassert>
#include <utility>

#include "belltab/clifford_action.hpp"

namespace belltab {

namespace {

#ifndef NDEBUG
constexpr bool kDebugValidate = true;
#else
constexpr bool kDebugValidate = false;
#endif

}  // namespace

StabilizerTableau StabilizerTableau::zero_state(size_t num_qubits) {
  if (num_qubits == 0) {
    throw DimensionError("tableau needs at least one qubit");
  }
  StabilizerTableau t;
  t.num_qubits_ = num_qubits;
  t.destab_.reserve(num_qubits);
  t.stab_.reserve(num_qubits);
  for (size_t q = 0; q < num_qubits; ++q) {
    t.destab_.push_back(PauliString::single(num_qubits, q, Pauli::X));
    t.stab_.push_back(PauliString::single(num_qubits, q, Pauli::Z));
  }
  return t;
}

void StabilizerTableau::apply_h(size_t q) {
  for (size_t i = 0; i < num_qubits_; ++i) {
    conjugate_h(destab_[i], q);
    conjugate_h(stab_[i], q);
  }
}

void StabilizerTableau::apply_s(size_t q) {
  for (size_t i = 0; i < num_qubits_; ++i) {
    conjugate_s(destab_[i], q);
    conjugate_s(stab_[i], q);
  }
}

void StabilizerTableau::apply_x(size_t q) {
  for (size_t i = 0; i < num_qubits_; ++i) {
    conjugate_x(destab_[i], q);
    conjugate_x(stab_[i], q);
  }
}

void StabilizerTableau::apply_y(size_t q) {
  for (size_t i = 0; i < num_qubits_; ++i) {
    conjugate_y(destab_[i], q);
    conjugate_y(stab_[i], q);
  }
}

void StabilizerTableau::apply_z(size_t q) {
  for (size_t i = 0; i < num_qubits_; ++i) {
    conjugate_z(destab_[i], q);
    conjugate_z(stab_[i], q);
  }
}

void StabilizerTableau::apply_cnot(size_t control, size_t target) {
  for (size_t i = 0; i < num_qubits_; ++i) {
    conjugate_cnot(destab_[i], control, target);
    conjugate_cnot(stab_[i], control, target);
  }
}

void StabilizerTableau::apply_gate(const GateOp &gate) {
  if (!is_clifford_gate(gate.kind)) {
    throw UnsupportedGateError(
        std::string("gate '") + std::string(gate_name(gate.kind)) +
        "' is outside the stabilizer gate set; use the dense backend");
  }
  if (gate.q0 >= num_qubits_ ||
      (is_two_qubit_gate(gate.kind) && gate.q1 >= num_qubits_)) {
    throw DimensionError("gate qubit index out of range");
  }
  for (size_t i = 0; i < num_qubits_; ++i) {
    conjugate_gate(destab_[i], gate);
    conjugate_gate(stab_[i], gate);
  }
  if (kDebugValidate) {
    validate();
  }
}

void StabilizerTableau::check_observable(const PauliString &p) const {
  if (p.num_qubits() != num_qubits_) {
    throw DimensionError("observable acts on " +
                         std::to_string(p.num_qubits()) + " qubits, state has " +
                         std::to_string(num_qubits_));
  }
  if (!p.is_hermitian()) {
    throw UnsupportedObservableError(
        "observable " + p.to_label() +
        " has imaginary phase and is not a Hermitian Pauli");
  }
}

int StabilizerTableau::expectation_pauli(const PauliString &p) const {
  check_observable(p);
  for (const auto &row : stab_) {
    if (!p.commutes_with(row)) {
      return 0;
    }
  }
  // p commutes with the whole group, so +-p is a member. Its generator
  // expansion is read off the destabilizers: stab[i] participates iff p
  // anticommutes with destab[i].
  PauliString member(num_qubits_);
  for (size_t i = 0; i < num_qubits_; ++i) {
    if (!p.commutes_with(destab_[i])) {
      member *= stab_[i];
    }
  }
  assert(member.x_words().size() == p.x_words().size());
  return member.phase_exp() == p.phase_exp() ? +1 : -1;
}

MeasureResult StabilizerTableau::measure_impl(const PauliString &p,
                                              bool have_forced,
                                              bool forced_bit, Rng *rng) {
  check_observable(p);
  size_t pivot = num_qubits_;
  for (size_t i = 0; i < num_qubits_; ++i) {
    if (!p.commutes_with(stab_[i])) {
      pivot = i;
      break;
    }
  }
  if (pivot == num_qubits_) {
    int value = expectation_pauli(p);
    return MeasureResult{value, true};
  }

  bool bit = have_forced ? forced_bit : (((*rng)() & 1u) != 0);
  int outcome = bit ? -1 : +1;

  // Copy first: p may alias a row this update rewrites.
  PauliString observable = p;

  // Every other row anticommuting with p is repaired by multiplying in
  // the old pivot stabilizer; then the pivot pair is replaced.
  for (size_t i = 0; i < num_qubits_; ++i) {
    if (i != pivot && !observable.commutes_with(destab_[i])) {
      destab_[i] *= stab_[pivot];
    }
    if (i != pivot && !observable.commutes_with(stab_[i])) {
      stab_[i] *= stab_[pivot];
    }
  }
  std::swap(destab_[pivot], stab_[pivot]);
  stab_[pivot] = std::move(observable);
  if (outcome < 0) {
    stab_[pivot].mul_phase_exp(2);
  }
  if (kDebugValidate) {
    validate();
  }
  return MeasureResult{outcome, false};
}

MeasureResult StabilizerTableau::measure_pauli(const PauliString &p, Rng &rng) {
  return measure_impl(p, false, false, &rng);
}

MeasureResult StabilizerTableau::measure_pauli_forced(const PauliString &p,
                                                      bool outcome_bit) {
  return measure_impl(p, true, outcome_bit, nullptr);
}

std::vector<PauliString> StabilizerTableau::canonical_form() const {
  std::vector<PauliString> rows = stab_;
  size_t rank = 0;
  auto reduce_on = [&](auto bit_of) {
    for (size_t q = 0; q < num_qubits_; ++q) {
      size_t pivot = rank;
      while (pivot < rows.size() && !bit_of(rows[pivot], q)) {
        ++pivot;
      }
      if (pivot == rows.size()) {
        continue;
      }
      std::swap(rows[rank], rows[pivot]);
      for (size_t j = 0; j < rows.size(); ++j) {
        if (j != rank && bit_of(rows[j], q)) {
          rows[j] *= rows[rank];
        }
      }
      ++rank;
    }
  };
  reduce_on([](const PauliString &r, size_t q) { return r.x_bit(q); });
  reduce_on([](const PauliString &r, size_t q) { return r.z_bit(q); });
  return rows;
}

std::string StabilizerTableau::to_display_string() const {
  std::string out;
  for (const auto &row : destab_) {
    out += row.to_label();
    out += '\n';
  }
  for (const auto &row : stab_) {
    out += row.to_label();
    out += '\n';
  }
  return out;
}

uint64_t StabilizerTableau::representation_bytes() const {
  uint64_t n = num_qubits_;
  uint64_t bits = 2 * n * (2 * n + 1);
  return (bits + 7) / 8;
}

void StabilizerTableau::validate() const {
  auto expect = [](bool ok, const char *what) {
    if (!ok) {
      throw Error(std::string("tableau invariant violated: ") + what);
    }
  };
  for (size_t i = 0; i < num_qubits_; ++i) {
    expect(stab_[i].is_hermitian(), "stabilizer row phase must be +-1");
    expect(destab_[i].is_hermitian(), "destabilizer row phase must be +-1");
    expect(!destab_[i].commutes_with(stab_[i]),
           "destab[i] must anticommute with stab[i]");
    for (size_t j = 0; j < num_qubits_; ++j) {
      if (j != i) {
        expect(stab_[i].commutes_with(stab_[j]),
               "stabilizer rows must commute");
        expect(destab_[i].commutes_with(stab_[j]),
               "destab[i] must commute with stab[j], j != i");
      }
    }
  }
  // Rank n over GF(2) also rules out -I in the group: a product hitting
  // -I would need identical bit content, i.e. a dependent row set.
  std::vector<PauliString> reduced = canonical_form();
  size_t nonzero = 0;
  for (const auto &row : reduced) {
    if (!row.is_identity_bits()) {
      ++nonzero;
    }
  }
  expect(nonzero == num_qubits_, "stabilizer rows must be independent");
}

namespace {

TableauRun run_tableau_impl(const Circuit &circuit, Rng *rng,
                            std::span<const uint8_t> branch_bits) {
  TableauRun run{StabilizerTableau::zero_state(circuit.num_qubits),
                 std::vector<uint8_t>(circuit.num_clbits, 0), 0};
  size_t next_branch_bit = 0;
  for (const auto &inst : circuit.instructions) {
    if (const auto *gate = std::get_if<GateOp>(&inst)) {
      run.state.apply_gate(*gate);
    } else if (const auto *cond = std::get_if<CondGateOp>(&inst)) {
      if (run.clbits[cond->clbit]) {
        run.state.apply_gate(cond->gate);
      }
    } else {
      const auto &m = std::get<MeasureOp>(inst);
      PauliString z = PauliString::single(circuit.num_qubits, m.qubit, Pauli::Z);
      MeasureResult result{};
      if (rng != nullptr) {
        result = run.state.measure_pauli(z, *rng);
      } else {
        int probe = run.state.expectation_pauli(z);
        if (probe != 0) {
          result = MeasureResult{probe, true};
        } else {
          if (next_branch_bit >= branch_bits.size()) {
            throw Error("branch bits exhausted while forcing measurements");
          }
          result = run.state.measure_pauli_forced(
              z, branch_bits[next_branch_bit++] != 0);
        }
      }
      if (!result.deterministic) {
        ++run.random_measurements;
      }
      run.clbits[m.clbit] = result.outcome < 0 ? 1 : 0;
    }
  }
  return run;
}

}  // namespace

TableauRun run_tableau(const Circuit &circuit, Rng &rng) {
  return run_tableau_impl(circuit, &rng, {});
}

TableauRun run_tableau(const Circuit &circuit, uint64_t seed) {
  Rng rng(seed);
  return run_tableau_impl(circuit, &rng, {});
}

TableauRun run_tableau_forced(const Circuit &circuit,
                              std::span<const uint8_t> branch_bits) {
  return run_tableau_impl(circuit, nullptr, branch_bits);
}

}  // namespace belltab

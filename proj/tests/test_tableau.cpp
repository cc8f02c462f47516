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

#include <string>
#include <vector>

#include "belltab/dense_state.hpp"
#include "doctest.h"

using namespace belltab;

namespace {

const std::string kCircuitsDir = BELLTAB_CIRCUITS_DIR;

StabilizerTableau bell_phiplus() {
  StabilizerTableau t = StabilizerTableau::zero_state(2);
  t.apply_h(0);
  t.apply_cnot(0, 1);
  return t;
}

std::vector<std::string> canonical_labels(const StabilizerTableau &t) {
  std::vector<std::string> labels;
  for (const auto &row : t.canonical_form()) {
    labels.push_back(row.to_label());
  }
  return labels;
}

/// Cross-backend contract: every canonical generator of the tableau fixes
/// the dense state evolved by the same circuit.
void check_generators_against_dense(const StabilizerTableau &t,
                                    const DenseState &psi) {
  for (const auto &g : t.canonical_form()) {
    CHECK(psi.is_stabilized_by(g));
  }
}

}  // namespace

TEST_CASE("zero state has +Z stabilizers and +X destabilizers") {
  StabilizerTableau t1 = StabilizerTableau::zero_state(1);
  CHECK(t1.stabilizer(0).to_label() == "+Z");
  CHECK(t1.destabilizer(0).to_label() == "+X");

  StabilizerTableau t3 = StabilizerTableau::zero_state(3);
  CHECK(t3.stabilizer(0).to_label() == "+ZII");
  CHECK(t3.stabilizer(1).to_label() == "+IZI");
  CHECK(t3.stabilizer(2).to_label() == "+IIZ");
  t3.validate();

  StabilizerTableau t64 = StabilizerTableau::zero_state(64);
  CHECK(t64.num_qubits() == 64);
  CHECK(t64.stabilizer(63).pauli_at(63) == Pauli::Z);

  CHECK_THROWS_AS(StabilizerTableau::zero_state(0), DimensionError);
}

TEST_CASE("Hadamard turns the Z stabilizer into X") {
  StabilizerTableau t = StabilizerTableau::zero_state(1);
  t.apply_h(0);
  CHECK(t.stabilizer(0).to_label() == "+X");
  t.validate();
}

TEST_CASE("H then CNOT yields the +XX,+ZZ Bell tableau") {
  StabilizerTableau t = bell_phiplus();
  CHECK(canonical_labels(t) == std::vector<std::string>{"+XX", "+ZZ"});
  DenseState psi(2);
  psi.apply_gate({GateKind::H, 0});
  psi.apply_gate({GateKind::CNOT, 0, 1});
  check_generators_against_dense(t, psi);
}

TEST_CASE("the 11-input Bell circuit gives the -XX,-ZZ singlet tableau") {
  Circuit c = parse_circuit_file(kCircuitsDir + "/bell_psiminus.qc");
  TableauRun run = run_tableau(c, 1);
  CHECK(canonical_labels(run.state) ==
        std::vector<std::string>{"-XX", "-ZZ"});
  DenseRun dense = run_dense(c, 1);
  check_generators_against_dense(run.state, dense.state);
}

TEST_CASE("rotations are rejected with the gate-set error") {
  StabilizerTableau t = StabilizerTableau::zero_state(1);
  CHECK_THROWS_WITH_AS(t.apply_gate({GateKind::RZ, 0, 0, 0.3}),
                       doctest::Contains("stabilizer gate set"),
                       UnsupportedGateError);
}

TEST_CASE("measuring Z on |0> is deterministic +1") {
  StabilizerTableau t = StabilizerTableau::zero_state(1);
  Rng rng(5);
  auto result = t.measure_pauli(PauliString::from_label("Z"), rng);
  CHECK(result.outcome == +1);
  CHECK(result.deterministic);
}

TEST_CASE("X(x)X on the Bell state is deterministic +1") {
  StabilizerTableau t = bell_phiplus();
  Rng rng(5);
  auto result = t.measure_pauli(PauliString::from_label("XX"), rng);
  CHECK(result.outcome == +1);
  CHECK(result.deterministic);
}

TEST_CASE("Bell-state Z measurements are random but perfectly correlated") {
  Rng rng(123);
  int plus_seen = 0;
  int minus_seen = 0;
  for (int trial = 0; trial < 64; ++trial) {
    StabilizerTableau t = bell_phiplus();
    auto first = t.measure_pauli(PauliString::from_label("ZI"), rng);
    CHECK_FALSE(first.deterministic);
    auto second = t.measure_pauli(PauliString::from_label("IZ"), rng);
    CHECK(second.deterministic);
    CHECK(second.outcome == first.outcome);
    t.validate();
    (first.outcome > 0 ? plus_seen : minus_seen) += 1;
  }
  CHECK(plus_seen > 0);
  CHECK(minus_seen > 0);
}

TEST_CASE("forced measurement selects the branch") {
  for (bool bit : {false, true}) {
    StabilizerTableau t = bell_phiplus();
    auto result = t.measure_pauli_forced(PauliString::from_label("ZI"), bit);
    CHECK_FALSE(result.deterministic);
    CHECK(result.outcome == (bit ? -1 : +1));
    CHECK(t.expectation_pauli(PauliString::from_label("ZI")) ==
          result.outcome);
  }
}

TEST_CASE("expectation values on Bell states match the stabilizer group") {
  StabilizerTableau phi = bell_phiplus();
  CHECK(phi.expectation_pauli(PauliString::from_label("ZI")) == 0);
  CHECK(phi.expectation_pauli(PauliString::from_label("ZZ")) == +1);
  CHECK(phi.expectation_pauli(PauliString::from_label("XX")) == +1);
  CHECK(phi.expectation_pauli(PauliString::from_label("YY")) == -1);

  TableauRun psi_minus =
      run_tableau(parse_circuit_file(kCircuitsDir + "/bell_psiminus.qc"), 1);
  CHECK(psi_minus.state.expectation_pauli(PauliString::from_label("XX")) == -1);

  CHECK_THROWS_AS(phi.expectation_pauli(PauliString::from_label("+iXX")),
                  UnsupportedObservableError);
  CHECK_THROWS_AS(phi.expectation_pauli(PauliString::from_label("X")),
                  DimensionError);
}

TEST_CASE("canonical form is state-unique, not generator-unique") {
  // Two different circuits for the same Bell state.
  StabilizerTableau a = bell_phiplus();
  StabilizerTableau b = StabilizerTableau::zero_state(2);
  b.apply_h(1);
  b.apply_cnot(1, 0);
  CHECK(canonical_labels(a) == canonical_labels(b));

  // Zero state is already reduced.
  CHECK(canonical_labels(StabilizerTableau::zero_state(3)) ==
        std::vector<std::string>{"+ZII", "+IZI", "+IIZ"});

  // The 01-input Bell circuit pins {+XX, -ZZ}.
  TableauRun run =
      run_tableau(parse_circuit_file(kCircuitsDir + "/bell_psiplus.qc"), 9);
  CHECK(canonical_labels(run.state) ==
        std::vector<std::string>{"+XX", "-ZZ"});
}

TEST_CASE("gate conjugation and measurement preserve the invariants") {
  Rng rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    uint32_t n = 2 + rng() % 5;
    Circuit c = random_clifford_circuit(n, 60, rng);
    TableauRun run = run_tableau(c, rng());
    run.state.validate();
    // A few random measurements on top.
    for (int m = 0; m < 3; ++m) {
      PauliString z =
          PauliString::single(n, rng() % n, Pauli::Z);
      run.state.measure_pauli(z, rng);
      run.state.validate();
    }
  }
}

TEST_CASE("determinism detection equals nonzero expectation") {
  Rng rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    uint32_t n = 1 + rng() % 4;
    Circuit c = random_clifford_circuit(n, 40, rng);
    TableauRun run = run_tableau(c, rng());
    PauliString p(n);
    for (uint32_t q = 0; q < n; ++q) {
      p.set_pauli(q, static_cast<Pauli>(rng() % 4));
    }
    if (rng() & 1) {
      p.mul_phase_exp(2);
    }
    int expectation = run.state.expectation_pauli(p);
    StabilizerTableau copy = run.state;
    auto measured = copy.measure_pauli(p, rng);
    CHECK((expectation != 0) == measured.deterministic);
    if (measured.deterministic) {
      CHECK(measured.outcome == expectation);
    }
  }
}

TEST_CASE("measuring a string that aliases a tableau row is safe") {
  StabilizerTableau t = bell_phiplus();
  Rng rng(3);
  // destabilizer rows anticommute with their stabilizer partner, so this
  // takes the mutating update path while reading through the alias
  t.measure_pauli(t.destabilizer(0), rng);
  t.validate();
}

TEST_CASE("empty circuit leaves the zero state") {
  Circuit c;
  c.num_qubits = 3;
  TableauRun run = run_tableau(c, 4);
  CHECK(run.state == StabilizerTableau::zero_state(3));
}

TEST_CASE("identical seeds reproduce the classical record") {
  Circuit c = parse_circuit(
      "qubits 3\nclbits 3\nh 0\nh 1\ncnot 1 2\nmeasure 0 -> 0\n"
      "measure 1 -> 1\nmeasure 2 -> 2\n");
  TableauRun a = run_tableau(c, 31337);
  TableauRun b = run_tableau(c, 31337);
  CHECK(a.clbits == b.clbits);
  CHECK(a.state == b.state);
}

TEST_CASE("display format: destabilizers then stabilizers, one per line") {
  CHECK(StabilizerTableau::zero_state(2).to_display_string() ==
        "+XI\n+IX\n+ZI\n+IZ\n");
  CHECK(bell_phiplus().to_display_string() == "+ZI\n+IX\n+XX\n+ZZ\n");
}

TEST_CASE("representation size is quadratic bits") {
  CHECK(StabilizerTableau::zero_state(16).representation_bytes() == 132);
  CHECK(StabilizerTableau::zero_state(128).representation_bytes() == 8224);
}

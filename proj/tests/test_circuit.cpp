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

#include "belltab/circuit.hpp"

#include <string>

#include "doctest.h"

using namespace belltab;

namespace {
const std::string kCircuitsDir = BELLTAB_CIRCUITS_DIR;
}

TEST_CASE("the Hadamard+CNOT file parses to a 2-instruction circuit") {
  Circuit c = parse_circuit("qubits 2\nh 0\ncnot 0 1\n");
  CHECK(c.num_qubits == 2);
  CHECK(c.num_clbits == 0);
  REQUIRE(c.instructions.size() == 2);
  auto h = std::get<GateOp>(c.instructions[0]);
  CHECK(h.kind == GateKind::H);
  CHECK(h.q0 == 0);
  auto cx = std::get<GateOp>(c.instructions[1]);
  CHECK(cx.kind == GateKind::CNOT);
  CHECK(cx.q0 == 0);
  CHECK(cx.q1 == 1);
}

TEST_CASE("the teleport corpus file parses with conditionals") {
  Circuit c = parse_circuit_file(kCircuitsDir + "/teleport_plus.qc");
  CHECK(c.num_qubits == 3);
  CHECK(c.num_clbits == 2);
  CHECK(c.measure_count() == 2);
  size_t conditionals = 0;
  for (const auto &inst : c.instructions) {
    if (std::holds_alternative<CondGateOp>(inst)) {
      ++conditionals;
    }
  }
  CHECK(conditionals == 2);
}

TEST_CASE("parse errors carry the line number") {
  CHECK_THROWS_WITH_AS(parse_circuit("qubits 2\ncnot 0 0\n"),
                       doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_WITH_AS(parse_circuit("qubits 2\nh 0\nfoo 1\n"),
                       doctest::Contains("line 3"), ParseError);
  CHECK_THROWS_WITH_AS(parse_circuit("qubits 2\nh 5\n"),
                       doctest::Contains("out of range"), ParseError);
  CHECK_THROWS_WITH_AS(parse_circuit("qubits 1\nrx fast 0\n"),
                       doctest::Contains("angle"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 1\nmeasure 0 -> 0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("h 0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nh 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit(""), ParseError);
}

TEST_CASE("comments, blank lines and angles parse") {
  Circuit c = parse_circuit(
      "# bell test\n"
      "qubits 2\n"
      "clbits 2\n"
      "\n"
      "rx 0.25 0   # quarter-winding\n"
      "rz -1.5e-1 1\n"
      "measure 0 -> 1\n"
      "cif 1 s 0\n");
  REQUIRE(c.instructions.size() == 4);
  CHECK(std::get<GateOp>(c.instructions[0]).angle == doctest::Approx(0.25));
  CHECK(std::get<GateOp>(c.instructions[1]).angle == doctest::Approx(-0.15));
  auto m = std::get<MeasureOp>(c.instructions[2]);
  CHECK(m.qubit == 0);
  CHECK(m.clbit == 1);
  auto cond = std::get<CondGateOp>(c.instructions[3]);
  CHECK(cond.clbit == 1);
  CHECK(cond.gate.kind == GateKind::S);
}

TEST_CASE("random clifford circuits stay inside the gate set") {
  Rng rng(11);
  Circuit c = random_clifford_circuit(5, 300, rng);
  CHECK(c.num_qubits == 5);
  CHECK(c.instructions.size() == 300);
  for (const auto &inst : c.instructions) {
    const auto &gate = std::get<GateOp>(inst);
    CHECK(is_clifford_gate(gate.kind));
    CHECK(gate.q0 < 5);
    if (is_two_qubit_gate(gate.kind)) {
      CHECK(gate.q1 < 5);
      CHECK(gate.q0 != gate.q1);
    }
  }
}

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

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace belltab {

bool is_clifford_gate(GateKind kind) {
  switch (kind) {
    case GateKind::H:
    case GateKind::S:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::CNOT:
      return true;
    default:
      return false;
  }
}

bool is_rotation_gate(GateKind kind) {
  return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

bool is_two_qubit_gate(GateKind kind) { return kind == GateKind::CNOT; }

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H:
      return "h";
    case GateKind::S:
      return "s";
    case GateKind::X:
      return "x";
    case GateKind::Y:
      return "y";
    case GateKind::Z:
      return "z";
    case GateKind::CNOT:
      return "cnot";
    case GateKind::RX:
      return "rx";
    case GateKind::RY:
      return "ry";
    case GateKind::RZ:
      return "rz";
  }
  return "?";
}

size_t Circuit::gate_count() const {
  size_t count = 0;
  for (const auto &inst : instructions) {
    if (!std::holds_alternative<MeasureOp>(inst)) {
      ++count;
    }
  }
  return count;
}

size_t Circuit::measure_count() const {
  size_t count = 0;
  for (const auto &inst : instructions) {
    if (std::holds_alternative<MeasureOp>(inst)) {
      ++count;
    }
  }
  return count;
}

namespace {

struct LineParser {
  std::vector<std::string> tokens;
  size_t line_number;
  size_t next = 0;

  [[noreturn]] void fail(const std::string &what) const {
    throw ParseError("line " + std::to_string(line_number) + ": " + what);
  }

  bool done() const { return next >= tokens.size(); }

  const std::string &take(const char *what) {
    if (done()) {
      fail(std::string("missing ") + what);
    }
    return tokens[next++];
  }

  uint32_t take_index(const char *what, uint32_t limit, const char *kind) {
    const std::string &tok = take(what);
    uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      fail("expected " + std::string(what) + ", got \"" + tok + "\"");
    }
    if (value >= limit) {
      fail(std::string(kind) + " index " + tok + " out of range (have " +
           std::to_string(limit) + ")");
    }
    return value;
  }

  double take_angle() {
    const std::string &tok = take("angle");
    try {
      size_t consumed = 0;
      double value = std::stod(tok, &consumed);
      if (consumed != tok.size()) {
        fail("malformed angle \"" + tok + "\"");
      }
      return value;
    } catch (const std::logic_error &) {
      fail("malformed angle \"" + tok + "\"");
    }
  }
};

const std::unordered_map<std::string_view, GateKind> kGateTable = {
    {"h", GateKind::H},   {"s", GateKind::S},   {"x", GateKind::X},
    {"y", GateKind::Y},   {"z", GateKind::Z},   {"cnot", GateKind::CNOT},
    {"rx", GateKind::RX}, {"ry", GateKind::RY}, {"rz", GateKind::RZ},
};

GateOp parse_gate(LineParser &lp, const Circuit &circuit) {
  const std::string &mnemonic = lp.take("gate mnemonic");
  auto it = kGateTable.find(mnemonic);
  if (it == kGateTable.end()) {
    lp.fail("unknown mnemonic \"" + mnemonic + "\"");
  }
  GateOp gate;
  gate.kind = it->second;
  if (is_rotation_gate(gate.kind)) {
    gate.angle = lp.take_angle();
  }
  gate.q0 = lp.take_index("qubit", circuit.num_qubits, "qubit");
  if (is_two_qubit_gate(gate.kind)) {
    gate.q1 = lp.take_index("target qubit", circuit.num_qubits, "qubit");
    if (gate.q0 == gate.q1) {
      lp.fail("cnot control and target must differ");
    }
  }
  return gate;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  Circuit circuit;
  bool saw_qubits = false;
  std::istringstream stream{std::string(text)};
  std::string raw_line;
  size_t line_number = 0;
  while (std::getline(stream, raw_line)) {
    ++line_number;
    if (auto hash = raw_line.find('#'); hash != std::string::npos) {
      raw_line.erase(hash);
    }
    LineParser lp{{}, line_number};
    std::istringstream words(raw_line);
    std::string word;
    while (words >> word) {
      lp.tokens.push_back(word);
    }
    if (lp.tokens.empty()) {
      continue;
    }
    const std::string &head = lp.take("directive");
    if (head == "qubits") {
      circuit.num_qubits =
          lp.take_index("qubit count", UINT32_MAX, "qubit count");
      if (circuit.num_qubits == 0) {
        lp.fail("qubit count must be positive");
      }
      saw_qubits = true;
    } else if (head == "clbits") {
      circuit.num_clbits =
          lp.take_index("clbit count", UINT32_MAX, "clbit count");
    } else if (head == "measure") {
      if (!saw_qubits) {
        lp.fail("measure before qubits declaration");
      }
      MeasureOp m;
      m.qubit = lp.take_index("qubit", circuit.num_qubits, "qubit");
      if (lp.take("'->'") != "->") {
        lp.fail("expected '->' in measure statement");
      }
      m.clbit = lp.take_index("clbit", circuit.num_clbits, "clbit");
      circuit.instructions.emplace_back(m);
    } else if (head == "cif") {
      if (!saw_qubits) {
        lp.fail("cif before qubits declaration");
      }
      CondGateOp cond;
      cond.clbit = lp.take_index("clbit", circuit.num_clbits, "clbit");
      cond.gate = parse_gate(lp, circuit);
      circuit.instructions.emplace_back(cond);
    } else {
      if (!saw_qubits) {
        lp.fail("gate before qubits declaration");
      }
      --lp.next;  // hand the mnemonic back
      circuit.instructions.emplace_back(parse_gate(lp, circuit));
    }
    if (!lp.done()) {
      lp.fail("trailing token \"" + lp.tokens[lp.next] + "\"");
    }
  }
  if (!saw_qubits) {
    throw ParseError("circuit has no qubits declaration");
  }
  return circuit;
}

Circuit parse_circuit_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open circuit file \"" + path + "\"");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_circuit(buffer.str());
}

Circuit random_clifford_circuit(uint32_t num_qubits, size_t num_gates,
                                Rng &rng) {
  if (num_qubits == 0) {
    throw DimensionError("random circuit needs at least one qubit");
  }
  Circuit circuit;
  circuit.num_qubits = num_qubits;
  circuit.instructions.reserve(num_gates);
  for (size_t i = 0; i < num_gates; ++i) {
    GateOp gate;
    uint64_t pick = rng() % (num_qubits >= 2 ? 3 : 2);
    if (pick == 0) {
      gate.kind = GateKind::H;
      gate.q0 = static_cast<uint32_t>(rng() % num_qubits);
    } else if (pick == 1) {
      gate.kind = GateKind::S;
      gate.q0 = static_cast<uint32_t>(rng() % num_qubits);
    } else {
      gate.kind = GateKind::CNOT;
      gate.q0 = static_cast<uint32_t>(rng() % num_qubits);
      do {
        gate.q1 = static_cast<uint32_t>(rng() % num_qubits);
      } while (gate.q1 == gate.q0);
    }
    circuit.instructions.emplace_back(gate);
  }
  return circuit;
}

}  // namespace belltab

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

#include "belltab/clifford_audit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>

#include "belltab/clifford_action.hpp"
#include "belltab/dense_state.hpp"

namespace belltab {

PauliString conjugate_pauli_by_circuit(const PauliString &p,
                                       const Circuit &circuit) {
  if (p.num_qubits() != circuit.num_qubits) {
    throw DimensionError("observable and circuit qubit counts differ");
  }
  PauliString result = p;
  for (const auto &inst : circuit.instructions) {
    const auto *gate = std::get_if<GateOp>(&inst);
    if (gate == nullptr) {
      throw UnsupportedGateError(
          "conjugation is defined for pure gate circuits; measurements and "
          "conditional gates are not unitaries");
    }
    conjugate_gate(result, *gate);
  }
  return result;
}

bool is_signed_permutation(const AxisAction &m) {
  for (int r = 0; r < 3; ++r) {
    int row_nonzero = 0;
    int col_nonzero = 0;
    for (int c = 0; c < 3; ++c) {
      if (m[r][c] != 0) {
        if (m[r][c] != 1 && m[r][c] != -1) {
          return false;
        }
        ++row_nonzero;
      }
      if (m[c][r] != 0) {
        ++col_nonzero;
      }
    }
    if (row_nonzero != 1 || col_nonzero != 1) {
      return false;
    }
  }
  return true;
}

int axis_action_determinant(const AxisAction &m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

namespace {

constexpr std::array<Pauli, 3> kAxes{Pauli::X, Pauli::Y, Pauli::Z};

AxisAction axis_action_of_circuit(const Circuit &circuit) {
  AxisAction m{};
  for (int a = 0; a < 3; ++a) {
    PauliString image = conjugate_pauli_by_circuit(
        PauliString::single(1, 0, kAxes[a]), circuit);
    int image_axis = static_cast<int>(image.pauli_at(0)) - 1;
    if (image_axis < 0 || !image.is_hermitian()) {
      throw Error("axis action is not a signed permutation; input circuit "
                  "was not Clifford");
    }
    m[image_axis][a] = image.sign();
  }
  return m;
}

AxisAction compose(const AxisAction &a, const AxisAction &b) {
  AxisAction out{};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      int acc = 0;
      for (int k = 0; k < 3; ++k) {
        acc += a[r][k] * b[k][c];
      }
      out[r][c] = acc;
    }
  }
  return out;
}

char pauli_letter(Pauli p) { return pauli_to_char(p); }

}  // namespace

BlochRotation bloch_rotation_of(const Circuit &circuit) {
  if (circuit.num_qubits != 1) {
    throw DimensionError("Bloch rotation extraction needs a 1-qubit circuit");
  }
  AxisAction m = axis_action_of_circuit(circuit);
  if (!is_signed_permutation(m) || axis_action_determinant(m) != 1) {
    throw Error("axis action must be a signed permutation with det +1; "
                "this cannot happen for Clifford input");
  }
  int trace = m[0][0] + m[1][1] + m[2][2];
  double cosine = (static_cast<double>(trace) - 1.0) / 2.0;
  cosine = std::fmax(-1.0, std::fmin(1.0, cosine));
  BlochRotation rotation{m, std::acos(cosine), std::nullopt};
  if (trace != 3 && trace != -1) {
    // sin(angle) != 0, so the axis is read off the antisymmetric part.
    double ax = static_cast<double>(m[2][1] - m[1][2]);
    double ay = static_cast<double>(m[0][2] - m[2][0]);
    double az = static_cast<double>(m[1][0] - m[0][1]);
    double norm = std::sqrt(ax * ax + ay * ay + az * az);
    rotation.axis = std::array<double, 3>{ax / norm, ay / norm, az / norm};
  }
  return rotation;
}

std::vector<AxisAction> single_qubit_axis_action_closure() {
  auto gate_action = [](GateKind kind) {
    Circuit c;
    c.num_qubits = 1;
    c.instructions.emplace_back(GateOp{kind, 0});
    return axis_action_of_circuit(c);
  };
  std::array<AxisAction, 2> generators{gate_action(GateKind::H),
                                       gate_action(GateKind::S)};
  AxisAction identity{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  std::set<AxisAction> seen{identity};
  std::vector<AxisAction> worklist{identity};
  while (!worklist.empty()) {
    AxisAction current = worklist.back();
    worklist.pop_back();
    for (const auto &g : generators) {
      AxisAction next = compose(g, current);
      if (seen.insert(next).second) {
        worklist.push_back(next);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

StabilizerCHSHAudit stabilizer_chsh_audit(const StabilizerTableau &state) {
  if (state.num_qubits() != 2) {
    throw DimensionError("CHSH audit is defined for 2-qubit states");
  }
  // Cache the 9 pairwise expectations first; the 81 quadruples reuse them.
  double e[3][3];
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      PauliString obs(2);
      obs.set_pauli(0, kAxes[a]);
      obs.set_pauli(1, kAxes[b]);
      e[a][b] = static_cast<double>(state.expectation_pauli(obs));
    }
  }
  StabilizerCHSHAudit best{-1.0, {Pauli::X, Pauli::X, Pauli::X, Pauli::X}};
  for (int a = 0; a < 3; ++a) {
    for (int ap = 0; ap < 3; ++ap) {
      for (int b = 0; b < 3; ++b) {
        for (int bp = 0; bp < 3; ++bp) {
          double value =
              std::abs(e[a][b] + e[a][bp]) + std::abs(e[ap][b] - e[ap][bp]);
          if (value > best.max_chsh) {
            best.max_chsh = value;
            best.settings = {kAxes[a], kAxes[ap], kAxes[b], kAxes[bp]};
          }
        }
      }
    }
  }
  return best;
}

double nonclifford_witness(const Circuit &circuit,
                           const CHSHSettings &settings) {
  if (circuit.num_qubits != 2) {
    throw DimensionError("witness circuit must produce a 2-qubit state");
  }
  DenseRun run = run_dense(circuit, uint64_t{0});
  DenseStateModel model(std::move(run.state), 0, 1);
  return chsh_value(settings, model);
}

void write_audit_csv(std::ostream &out, std::span<const AuditReportRow> rows,
                     double pauli_max, double nonclifford) {
  out << "state_id,A,Aprime,B,Bprime,chsh\n";
  char line[128];
  for (const auto &row : rows) {
    std::snprintf(line, sizeof line, "%s,%c,%c,%c,%c,%.9f\n",
                  row.state_id.c_str(), pauli_letter(row.audit.settings[0]),
                  pauli_letter(row.audit.settings[1]),
                  pauli_letter(row.audit.settings[2]),
                  pauli_letter(row.audit.settings[3]), row.audit.max_chsh);
    out << line;
  }
  std::snprintf(line, sizeof line, "pauli_max=%.9f nonclifford=%.9f\n",
                pauli_max, nonclifford);
  out << line;
}

}  // namespace belltab

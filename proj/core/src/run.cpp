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

#include "belltab/run.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "belltab/dense_state.hpp"
#include "belltab/tableau.hpp"

namespace belltab {

std::string_view backend_name(Backend backend) {
  return backend == Backend::Tableau ? "tableau" : "dense";
}

namespace {

std::string bits_to_string(const std::vector<uint8_t> &bits) {
  std::string out(bits.size(), '0');
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) {
      out[i] = '1';
    }
  }
  return out;
}

void validate_for_backend(const Circuit &circuit, Backend backend) {
  if (backend == Backend::Dense) {
    if (circuit.num_qubits > DenseState::kMaxQubits) {
      throw CapacityError(
          "dense backend caps at " + std::to_string(DenseState::kMaxQubits) +
          " qubits; circuit has " + std::to_string(circuit.num_qubits));
    }
    return;
  }
  for (const auto &inst : circuit.instructions) {
    const GateOp *gate = std::get_if<GateOp>(&inst);
    if (gate == nullptr) {
      if (const auto *cond = std::get_if<CondGateOp>(&inst)) {
        gate = &cond->gate;
      }
    }
    if (gate != nullptr && !is_clifford_gate(gate->kind)) {
      throw UnsupportedGateError(
          std::string("gate '") + std::string(gate_name(gate->kind)) +
          "' is outside the stabilizer gate set; use --backend dense");
    }
  }
}

}  // namespace

RunRecord run_shots(const Circuit &circuit, Backend backend, size_t shots,
                    uint64_t seed, unsigned workers) {
  validate_for_backend(circuit, backend);
  if (workers == 0) {
    workers = 1;
  }
  RunRecord record;
  record.seed = seed;
  record.backend = backend;
  record.shots = shots;
  record.workers = workers;
  record.shot_bits.assign(shots, {});

  auto run_one = [&](size_t shot) {
    uint64_t shot_seed = derive_stream_seed(seed, shot);
    if (backend == Backend::Tableau) {
      TableauRun run = run_tableau(circuit, shot_seed);
      record.shot_bits[shot] = bits_to_string(run.clbits);
      if (shot + 1 == shots) {
        std::string rendered;
        for (const auto &row : run.state.canonical_form()) {
          rendered += row.to_label();
          rendered += '\n';
        }
        record.final_state = rendered;
      }
    } else {
      DenseRun run = run_dense(circuit, shot_seed);
      record.shot_bits[shot] = bits_to_string(run.clbits);
      if (shot + 1 == shots) {
        std::ostringstream amps;
        run.state.dump_amplitudes_csv(amps);
        record.final_state = amps.str();
      }
    }
  };

  if (workers == 1 || shots < 2 * workers) {
    for (size_t shot = 0; shot < shots; ++shot) {
      run_one(shot);
    }
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (size_t shot = w; shot < shots; shot += workers) {
          run_one(shot);
        }
      });
    }
    for (auto &t : pool) {
      t.join();
    }
  }
  return record;
}

void write_run_record(std::ostream &out, const RunRecord &record) {
  out << "backend: " << backend_name(record.backend) << '\n';
  out << "seed: " << record.seed << '\n';
  out << "shots: " << record.shots << '\n';
  out << "workers: " << record.workers << '\n';
  if (!record.shot_bits.empty() && !record.shot_bits.front().empty()) {
    std::map<std::string, size_t> counts;
    for (const auto &bits : record.shot_bits) {
      ++counts[bits];
    }
    out << "counts:\n";
    for (const auto &[bits, count] : counts) {
      out << "  " << bits << ' ' << count << ' '
          << static_cast<double>(count) / static_cast<double>(record.shots)
          << '\n';
    }
  }
  out << "final state (last shot):\n" << record.final_state;
}

}  // namespace belltab

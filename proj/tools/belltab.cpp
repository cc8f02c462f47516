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

// belltab command line: run circuits on either backend, evaluate CHSH
// correlation models, audit stabilizer states, and benchmark the
// tableau-vs-dense scaling wall.
//
// Exit codes: 0 success, 2 parse error, 3 unsupported gate/observable for
// the chosen backend, 4 capacity exceeded, 1 anything else.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "belltab/bell.hpp"
#include "belltab/circuit.hpp"
#include "belltab/clifford_audit.hpp"
#include "belltab/dense_state.hpp"
#include "belltab/run.hpp"
#include "belltab/scaling.hpp"
#include "belltab/tableau.hpp"

namespace {

using namespace belltab;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitCapacity = 4;

/// The four-Bell-state generator circuit with both inputs set to 1: the
/// singlet. Used by the dense/tableau correlation models.
Circuit singlet_circuit() {
  Circuit c;
  c.num_qubits = 2;
  c.instructions = {GateOp{GateKind::X, 0}, GateOp{GateKind::X, 1},
                    GateOp{GateKind::H, 0}, GateOp{GateKind::CNOT, 0, 1}};
  return c;
}

std::unique_ptr<CorrelationModel> make_model(const std::string &name,
                                             uint64_t samples, uint64_t seed,
                                             unsigned workers) {
  if (name == "singlet") {
    return std::make_unique<SingletModel>();
  }
  if (name == "lhv") {
    return std::make_unique<LhvClosedFormModel>();
  }
  if (name == "lhv-mc") {
    return std::make_unique<LhvMonteCarloModel>(samples, seed, workers);
  }
  if (name == "dense") {
    DenseRun run = run_dense(singlet_circuit(), seed);
    return std::make_unique<DenseStateModel>(std::move(run.state), 0, 1);
  }
  if (name == "tableau") {
    TableauRun run = run_tableau(singlet_circuit(), seed);
    return std::make_unique<TableauModel>(std::move(run.state), 0, 1);
  }
  throw ParseError("unknown model \"" + name +
                   "\"; expected singlet|lhv|lhv-mc|dense|tableau");
}

int cmd_run(const std::string &path, const std::string &backend_name,
            size_t shots, uint64_t seed, unsigned workers) {
  Circuit circuit = parse_circuit_file(path);
  Backend backend;
  if (backend_name == "tableau") {
    backend = Backend::Tableau;
  } else if (backend_name == "dense") {
    backend = Backend::Dense;
  } else {
    throw ParseError("unknown backend \"" + backend_name +
                     "\"; expected tableau|dense");
  }
  RunRecord record = run_shots(circuit, backend, shots, seed, workers);
  write_run_record(std::cout, record);
  return kExitOk;
}

int cmd_chsh(const std::string &model_name, std::vector<double> angles,
             unsigned sweep, uint64_t samples, uint64_t seed, unsigned workers,
             bool maximize, unsigned resolution, unsigned rounds) {
  auto model = make_model(model_name, samples, seed, workers);
  if (maximize) {
    CHSHSearchResult best = chsh_max_search(*model, resolution, rounds);
    std::printf("max=%.9f\n", best.value);
    std::printf("angles=%.9g,%.9g,%.9g,%.9g\n", best.angles[0], best.angles[1],
                best.angles[2], best.angles[3]);
    return kExitOk;
  }
  if (sweep > 0) {
    write_chsh_sweep_csv(std::cout, *model, sweep);
    return kExitOk;
  }
  if (angles.size() != 4) {
    throw ParseError("--angles needs exactly four comma-separated radians");
  }
  double value = chsh_value(
      CHSHSettings::planar(angles[0], angles[1], angles[2], angles[3]),
      *model);
  std::printf("%.9f\n", value);
  return kExitOk;
}

int cmd_audit(size_t states, uint64_t seed) {
  std::vector<AuditReportRow> rows;
  const char *bell_names[4] = {"bell_phiplus", "bell_psiplus", "bell_phiminus",
                               "bell_psiminus"};
  const bool bell_inputs[4][2] = {
      {false, false}, {false, true}, {true, false}, {true, true}};
  for (int k = 0; k < 4; ++k) {
    StabilizerTableau t = StabilizerTableau::zero_state(2);
    if (bell_inputs[k][0]) {
      t.apply_x(0);
    }
    if (bell_inputs[k][1]) {
      t.apply_x(1);
    }
    t.apply_h(0);
    t.apply_cnot(0, 1);
    rows.push_back(AuditReportRow{bell_names[k], stabilizer_chsh_audit(t)});
  }
  Rng rng(seed);
  for (size_t k = 0; k < states; ++k) {
    Circuit c = random_clifford_circuit(2, 24, rng);
    TableauRun run = run_tableau(c, rng());
    rows.push_back(AuditReportRow{"random_" + std::to_string(k),
                                  stabilizer_chsh_audit(run.state)});
  }
  double pauli_max = 0.0;
  for (const auto &row : rows) {
    pauli_max = std::max(pauli_max, row.audit.max_chsh);
  }
  constexpr double kPi = std::numbers::pi;
  double witness = nonclifford_witness(
      singlet_circuit(), CHSHSettings::planar(0, kPi / 2, kPi / 4, -kPi / 4));
  write_audit_csv(std::cout, rows, pauli_max, witness);
  return kExitOk;
}

int cmd_bench(uint32_t min_qubits, uint32_t max_qubits, size_t gates,
              uint64_t seed) {
  auto rows = run_scaling_bench(min_qubits, max_qubits, gates, seed);
  write_scaling_csv(std::cout, rows);
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"stabilizer circuit and Bell-correlation laboratory"};
  app.require_subcommand(1);

  auto *run = app.add_subcommand("run", "execute a circuit file");
  std::string circuit_path;
  std::string backend = "tableau";
  size_t shots = 1;
  uint64_t seed = 0;
  unsigned parallel_shots = 1;
  run->add_option("circuit", circuit_path, "circuit file")->required();
  run->add_option("--backend", backend, "tableau|dense");
  run->add_option("--shots", shots, "number of shots");
  run->add_option("--seed", seed, "PRNG seed");
  run->add_option("--parallel-shots", parallel_shots, "worker threads");

  auto *chsh = app.add_subcommand("chsh", "evaluate the CHSH functional");
  std::string model = "singlet";
  std::vector<double> angles;
  unsigned sweep = 0;
  uint64_t samples = 1000000;
  uint64_t chsh_seed = 0;
  unsigned workers = 1;
  bool maximize = false;
  unsigned resolution = 16;
  unsigned rounds = 8;
  chsh->add_option("--model", model, "singlet|lhv|lhv-mc|dense|tableau");
  chsh->add_option("--angles", angles,
                   "four planar orientations m,m',n,n' in radians")
      ->delimiter(',');
  chsh->add_option("--sweep", sweep, "emit a CSV over an NxNxNxN angle grid");
  chsh->add_option("--samples", samples, "lhv-mc sample count");
  chsh->add_option("--seed", chsh_seed, "lhv-mc seed");
  chsh->add_option("--workers", workers, "lhv-mc worker threads");
  chsh->add_flag("--maximize", maximize, "grid-search the maximum");
  chsh->add_option("--resolution", resolution, "search grid points per angle");
  chsh->add_option("--rounds", rounds, "search refinement rounds");

  auto *audit = app.add_subcommand(
      "audit", "CHSH over Pauli axes on stabilizer states, plus the "
               "non-Clifford witness");
  size_t states = 100;
  uint64_t audit_seed = 0;
  audit->add_option("--states", states, "random 2-qubit stabilizer states");
  audit->add_option("--seed", audit_seed, "PRNG seed");

  auto *bench = app.add_subcommand("bench", "tableau-vs-dense scaling CSV");
  uint32_t min_qubits = 16;
  uint32_t max_qubits = 128;
  size_t gates = 1000;
  uint64_t bench_seed = 0;
  bench->add_option("--min-qubits", min_qubits, "smallest size (doubles up)");
  bench->add_option("--max-qubits", max_qubits, "largest size");
  bench->add_option("--gates", gates, "gates per circuit");
  bench->add_option("--seed", bench_seed, "PRNG seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return cmd_run(circuit_path, backend, shots, seed, parallel_shots);
    }
    if (chsh->parsed()) {
      return cmd_chsh(model, angles, sweep, samples, chsh_seed, workers,
                      maximize, resolution, rounds);
    }
    if (audit->parsed()) {
      return cmd_audit(states, audit_seed);
    }
    if (bench->parsed()) {
      return cmd_bench(min_qubits, max_qubits, gates, bench_seed);
    }
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const UnsupportedGateError &e) {
    std::cerr << "unsupported gate: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const UnsupportedObservableError &e) {
    std::cerr << "unsupported observable: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const CapacityError &e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitOk;
}

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

#include "belltab/bell.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <thread>
#include <utility>
#include <vector>

namespace belltab {

namespace {

constexpr double kPi = std::numbers::pi;

int sign_of(double x) { return x < 0.0 ? -1 : +1; }

/// Uniform point on the unit sphere: z uniform in [-1, 1), azimuth
/// uniform in [0, 2pi).
void sample_sphere(Rng &rng, double &x, double &y, double &z) {
  z = 2.0 * uniform_unit(rng) - 1.0;
  double phi = 2.0 * kPi * uniform_unit(rng);
  double r = std::sqrt(std::fmax(0.0, 1.0 - z * z));
  x = r * std::cos(phi);
  y = r * std::sin(phi);
}

void check_theta(double theta) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw DomainError("theta must lie in [0, pi], got " +
                      std::to_string(theta));
  }
}

}  // namespace

double singlet_correlation(const Direction &m, const Direction &n) {
  return -m.dot(n);
}

int lhv_outcome(const HiddenVariable &lambda, const Direction &setting,
                Party party) {
  int s = sign_of(setting.dot(lambda));
  return party == Party::Alice ? s : -s;
}

JointProbabilities lhv_joint_probabilities(double theta) {
  check_theta(theta);
  double same = theta / (2.0 * kPi);
  double diff = 0.5 * (1.0 - theta / kPi);
  return JointProbabilities{same, same, diff, diff};
}

double lhv_correlation(double theta) {
  check_theta(theta);
  return 2.0 * theta / kPi - 1.0;
}

MonteCarloEstimate lhv_monte_carlo(const Direction &m, const Direction &n,
                                   uint64_t samples, uint64_t seed,
                                   unsigned workers) {
  if (samples == 0) {
    throw DomainError("Monte Carlo needs at least one sample");
  }
  if (workers == 0) {
    workers = 1;
  }
  if (static_cast<uint64_t>(workers) > samples) {
    workers = static_cast<unsigned>(samples);
  }

  struct Tally {
    std::array<uint64_t, 4> counts{0, 0, 0, 0};
  };
  std::vector<Tally> tallies(workers);

  auto run_worker = [&](unsigned w) {
    uint64_t chunk = samples / workers + (w < samples % workers ? 1 : 0);
    Rng rng(derive_stream_seed(seed, w));
    auto &counts = tallies[w].counts;
    for (uint64_t i = 0; i < chunk; ++i) {
      double lx, ly, lz;
      sample_sphere(rng, lx, ly, lz);
      int a = sign_of(m.x * lx + m.y * ly + m.z * lz);
      int b = -sign_of(n.x * lx + n.y * ly + n.z * lz);
      if (a > 0) {
        counts[b > 0 ? 0 : 2] += 1;
      } else {
        counts[b > 0 ? 3 : 1] += 1;
      }
    }
  };

  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(run_worker, w);
    }
    for (auto &t : pool) {
      t.join();
    }
  }

  std::array<uint64_t, 4> counts{0, 0, 0, 0};
  for (const auto &t : tallies) {
    for (size_t k = 0; k < 4; ++k) {
      counts[k] += t.counts[k];
    }
  }
  // Products are +-1, so the mean comes straight off the tallies and the
  // sample variance is (1 - mean^2) * N / (N - 1).
  double total = static_cast<double>(samples);
  double mean =
      (static_cast<double>(counts[0]) + static_cast<double>(counts[1]) -
       static_cast<double>(counts[2]) - static_cast<double>(counts[3])) /
      total;
  double std_error =
      samples > 1 ? std::sqrt(std::fmax(0.0, 1.0 - mean * mean) /
                              (total - 1.0))
                  : 0.0;
  return MonteCarloEstimate{mean, std_error, counts, samples, seed, workers};
}

CHSHSettings CHSHSettings::planar(double a_m, double a_mp, double a_n,
                                  double a_np) {
  return CHSHSettings{Direction::planar(a_m), Direction::planar(a_mp),
                      Direction::planar(a_n), Direction::planar(a_np)};
}

double SingletModel::correlation(const Direction &m, const Direction &n) const {
  return singlet_correlation(m, n);
}

double LhvClosedFormModel::correlation(const Direction &m,
                                       const Direction &n) const {
  return lhv_correlation(angle_between(m, n));
}

double LhvMonteCarloModel::correlation(const Direction &m,
                                       const Direction &n) const {
  return lhv_monte_carlo(m, n, samples_, seed_, workers_).estimate;
}

DenseStateModel::DenseStateModel(DenseState state, size_t qubit_a,
                                 size_t qubit_b)
    : state_(std::move(state)), qubit_a_(qubit_a), qubit_b_(qubit_b) {
  if (qubit_a_ == qubit_b_ || qubit_a_ >= state_.num_qubits() ||
      qubit_b_ >= state_.num_qubits()) {
    throw DimensionError("dense correlation model needs two distinct qubits");
  }
}

double DenseStateModel::correlation(const Direction &m,
                                    const Direction &n) const {
  return state_.expectation_spin_pair(qubit_a_, m, qubit_b_, n);
}

TableauModel::TableauModel(StabilizerTableau state, size_t qubit_a,
                           size_t qubit_b)
    : state_(std::move(state)), qubit_a_(qubit_a), qubit_b_(qubit_b) {
  if (qubit_a_ == qubit_b_ || qubit_a_ >= state_.num_qubits() ||
      qubit_b_ >= state_.num_qubits()) {
    throw DimensionError("tableau correlation model needs two distinct qubits");
  }
}

double TableauModel::correlation(const Direction &m, const Direction &n) const {
  auto axis_a = as_pauli_axis(m);
  auto axis_b = as_pauli_axis(n);
  if (!axis_a || !axis_b) {
    throw UnsupportedObservableError(
        "tableau backend can only measure signed Pauli axes; got a "
        "direction off the X/Y/Z axes");
  }
  PauliString obs(state_.num_qubits());
  obs.set_pauli(qubit_a_, axis_a->first);
  obs.set_pauli(qubit_b_, axis_b->first);
  double value = state_.expectation_pauli(obs);
  return axis_a->second * axis_b->second * value;
}

double chsh_value(const CHSHSettings &settings, const CorrelationModel &model) {
  double e_mn = model.correlation(settings.m, settings.n);
  double e_mnp = model.correlation(settings.m, settings.n_prime);
  double e_mpn = model.correlation(settings.m_prime, settings.n);
  double e_mpnp = model.correlation(settings.m_prime, settings.n_prime);
  return std::abs(e_mn + e_mnp) + std::abs(e_mpn - e_mpnp);
}

CHSHSearchResult chsh_max_search(const CorrelationModel &model,
                                 unsigned resolution,
                                 unsigned refinement_rounds) {
  if (resolution < 2) {
    throw DomainError("search needs at least 2 grid points per angle");
  }
  auto evaluate = [&](const std::array<double, 4> &angles) {
    return chsh_value(
        CHSHSettings::planar(angles[0], angles[1], angles[2], angles[3]),
        model);
  };

  CHSHSearchResult best{-1.0, {0, 0, 0, 0}};
  double step = 2.0 * kPi / resolution;
  for (unsigned i = 0; i < resolution; ++i) {
    for (unsigned j = 0; j < resolution; ++j) {
      for (unsigned k = 0; k < resolution; ++k) {
        for (unsigned l = 0; l < resolution; ++l) {
          std::array<double, 4> angles{i * step, j * step, k * step, l * step};
          double value = evaluate(angles);
          if (value > best.value) {
            best = CHSHSearchResult{value, angles};
          }
        }
      }
    }
  }

  // Shrinking local grid around the incumbent: 5 points per axis, step
  // divided by 4 each round.
  for (unsigned round = 0; round < refinement_rounds; ++round) {
    step /= 4.0;
    bool improved = true;
    while (improved) {
      improved = false;
      CHSHSearchResult local = best;
      for (int di = -2; di <= 2; ++di) {
        for (int dj = -2; dj <= 2; ++dj) {
          for (int dk = -2; dk <= 2; ++dk) {
            for (int dl = -2; dl <= 2; ++dl) {
              std::array<double, 4> angles{best.angles[0] + di * step,
                                           best.angles[1] + dj * step,
                                           best.angles[2] + dk * step,
                                           best.angles[3] + dl * step};
              double value = evaluate(angles);
              if (value > local.value) {
                local = CHSHSearchResult{value, angles};
              }
            }
          }
        }
      }
      if (local.value > best.value) {
        best = local;
        improved = true;
      }
    }
  }
  return best;
}

void write_chsh_sweep_csv(std::ostream &out, const CorrelationModel &model,
                          unsigned resolution) {
  if (resolution < 1) {
    throw DomainError("sweep needs at least 1 grid point per angle");
  }
  out << "model,theta_m,theta_mp,theta_n,theta_np,chsh\n";
  double step = 2.0 * kPi / resolution;
  char line[160];
  for (unsigned i = 0; i < resolution; ++i) {
    for (unsigned j = 0; j < resolution; ++j) {
      for (unsigned k = 0; k < resolution; ++k) {
        for (unsigned l = 0; l < resolution; ++l) {
          std::array<double, 4> angles{i * step, j * step, k * step, l * step};
          double value = chsh_value(
              CHSHSettings::planar(angles[0], angles[1], angles[2], angles[3]),
              model);
          std::snprintf(line, sizeof line, "%s,%.9g,%.9g,%.9g,%.9g,%.9f\n",
                        model.name().c_str(), angles[0], angles[1], angles[2],
                        angles[3], value);
          out << line;
        }
      }
    }
  }
}

}  // namespace belltab

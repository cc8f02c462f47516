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

#ifndef BELLTAB_BELL_HPP
#define BELLTAB_BELL_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include "belltab/dense_state.hpp"
#include "belltab/direction.hpp"
#include "belltab/rng.hpp"
#include "belltab/tableau.hpp"

namespace belltab {

/// Spin-pair correlation of the singlet state: -m.n = -cos(theta).
double singlet_correlation(const Direction &m, const Direction &n);

enum class Party { Alice, Bob };

/// Deterministic outcome of the sign-function hidden-variable model:
/// Alice reports sign(m.lambda), Bob reports -sign(n.lambda). sign(0) is
/// +1 by convention (a measure-zero event; keeps outcomes total).
int lhv_outcome(const HiddenVariable &lambda, const Direction &setting,
                Party party);

struct JointProbabilities {
  double pp;  // same sign (+,+)
  double mm;  // same sign (-,-)
  double pm;  // opposite (+,-)
  double mp;  // opposite (-,+)
};

/// Closed-form joint outcome probabilities of the sign model under a
/// uniform lambda distribution, as a function of the angle between the
/// settings: Pr(+,+) = Pr(-,-) = theta/2pi, Pr(+,-) = Pr(-,+) =
/// (1 - theta/pi)/2. theta must lie in [0, pi].
JointProbabilities lhv_joint_probabilities(double theta);

/// Closed-form correlation of the sign model: 2*theta/pi - 1.
double lhv_correlation(double theta);

struct MonteCarloEstimate {
  double estimate;
  double std_error;
  // Outcome tallies in the order (+,+), (-,-), (+,-), (-,+).
  std::array<uint64_t, 4> joint_counts;
  uint64_t samples;
  // Replay parameters: the estimate is a pure function of these.
  uint64_t seed;
  unsigned workers;
};

/// Monte Carlo estimate of the sign-model correlation: lambda uniform on
/// the unit sphere. Reproducible for a fixed (seed, workers) pair; the
/// sample budget is split across `workers` independently seeded streams.
MonteCarloEstimate lhv_monte_carlo(const Direction &m, const Direction &n,
                                   uint64_t samples, uint64_t seed,
                                   unsigned workers = 1);

/// The four measurement orientations of the CHSH functional.
struct CHSHSettings {
  Direction m;
  Direction m_prime;
  Direction n;
  Direction n_prime;

  /// All four settings in the x-z plane at the given angles.
  static CHSHSettings planar(double a_m, double a_mp, double a_n, double a_np);
};

/// A bipartite correlation: E(m, n) in [-1, 1].
class CorrelationModel {
 public:
  virtual ~CorrelationModel() = default;
  virtual double correlation(const Direction &m, const Direction &n) const = 0;
  virtual std::string name() const = 0;
};

/// Closed-form quantum singlet: E = -cos(theta).
class SingletModel final : public CorrelationModel {
 public:
  double correlation(const Direction &m, const Direction &n) const override;
  std::string name() const override { return "singlet"; }
};

/// Closed-form sign-function hidden-variable model: E = 2*theta/pi - 1.
class LhvClosedFormModel final : public CorrelationModel {
 public:
  double correlation(const Direction &m, const Direction &n) const override;
  std::string name() const override { return "lhv"; }
};

/// Monte Carlo sign model. Every correlation() call replays the same
/// lambda streams (fixed seed), so repeated evaluations are consistent.
class LhvMonteCarloModel final : public CorrelationModel {
 public:
  LhvMonteCarloModel(uint64_t samples, uint64_t seed, unsigned workers = 1)
      : samples_(samples), seed_(seed), workers_(workers) {}
  double correlation(const Direction &m, const Direction &n) const override;
  std::string name() const override { return "lhv-mc"; }

 private:
  uint64_t samples_;
  uint64_t seed_;
  unsigned workers_;
};

/// Correlations measured on a dense two-qubit state via spin-pair
/// expectations; supports arbitrary directions.
class DenseStateModel final : public CorrelationModel {
 public:
  DenseStateModel(DenseState state, size_t qubit_a, size_t qubit_b);
  double correlation(const Direction &m, const Direction &n) const override;
  std::string name() const override { return "dense"; }

 private:
  DenseState state_;
  size_t qubit_a_;
  size_t qubit_b_;
};

/// Correlations measured on a stabilizer tableau. Only signed Pauli axes
/// are measurable: any other direction throws UnsupportedObservableError,
/// which is precisely the boundary the audit module probes.
class TableauModel final : public CorrelationModel {
 public:
  TableauModel(StabilizerTableau state, size_t qubit_a, size_t qubit_b);
  double correlation(const Direction &m, const Direction &n) const override;
  std::string name() const override { return "tableau"; }

 private:
  StabilizerTableau state_;
  size_t qubit_a_;
  size_t qubit_b_;
};

/// |E(m,n) + E(m,n')| + |E(m',n) - E(m',n')|.
double chsh_value(const CHSHSettings &settings, const CorrelationModel &model);

struct CHSHSearchResult {
  double value;
  std::array<double, 4> angles;  // m, m', n, n' in the x-z plane
};

/// Maximizes the CHSH value over planar settings: a coarse grid with
/// `resolution` points per angle, then `refinement_rounds` of local grid
/// shrinking. Deterministic for fixed parameters. resolution = 4 with
/// zero rounds enumerates exactly the pi/2-multiple quadruples; use >= 8
/// when actually searching.
CHSHSearchResult chsh_max_search(const CorrelationModel &model,
                                 unsigned resolution,
                                 unsigned refinement_rounds);

/// CHSH sweep over the full planar grid (resolution^4 rows):
/// `model,theta_m,theta_mp,theta_n,theta_np,chsh`, angles in radians at 9
/// significant digits.
void write_chsh_sweep_csv(std::ostream &out, const CorrelationModel &model,
                          unsigned resolution);

}  // namespace belltab

#endif  // BELLTAB_BELL_HPP

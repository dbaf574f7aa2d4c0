// Copyright 2026 The fastgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fastgate/gate_engine.hpp"

namespace fastgate {

struct OptimizerConfig {
  double gate_time_tau0 = 2.0;
  int z_bound = 100;
  int group_count = 16;
  int restarts = 64;
  std::uint64_t rng_seed = 1;
  /// Stop after the first restart whose result is at or below this value.
  /// Zero runs the whole restart budget.
  double target_infidelity = 0.0;

  /// Throws ConfigError for an odd or non-positive group count, z_bound < 1,
  /// restarts < 1, a non-positive gate time or a negative target.
  void validate() const;
};

struct OptResult {
  PulseSequence sequence;
  GateMetrics metrics;
  int n_max = 0;
  double characteristic = 0.0;  // n_max^2 * xi
  long long evaluations = 0;
  std::chrono::duration<double> wall_time{0.0};
  int restarts_run = 0;
  bool reached_target = false;
};

/// Multi-start integer search over the free half of an anti-symmetric
/// sequence on the uniform grid. Each restart draws a random half-vector,
/// runs coordinate descent with steps {16, 8, 4, 2, 1}, then two-coordinate
/// block moves (every pair within +-100 of the current point) until neither
/// improves. Restarts are merged by infidelity, then lower n_max, then
/// lexicographic half-vector.
OptResult optimize_apg(const GateContext& ctx, const OptimizerConfig& cfg);

/// Exhaustive enumeration of every half-vector in [-z_bound, z_bound]^(G/2).
/// Throws DomainError when the lattice has more than 10^8 points.
OptResult brute_force_apg(const GateContext& ctx, const OptimizerConfig& cfg);

struct SweepRow {
  double gate_time_tau0;
  double f_min;  // omega_t / 2 pi
  double infidelity;
  OptResult result;
};

/// One optimized point per gate time, sorted by gate time.
std::vector<SweepRow> sweep_rep_rate(const GateContext& ctx, std::span<const double> gate_times,
                                     const OptimizerConfig& cfg);

struct CharacteristicRow {
  double characteristic;
  double infidelity;
  /// Infidelity above 1e-2, where it should fall monotonically with
  /// n_max^2 xi.
  bool in_monotone_region;
};

struct CharacteristicCurve {
  std::vector<CharacteristicRow> rows;  // sorted by characteristic
  /// True when infidelity is non-increasing along the rows flagged as in the
  /// monotone region.
  bool monotone;
};

CharacteristicCurve characteristic_curve(std::span<const OptResult> results);

struct PowerLawFit {
  double coefficient;
  double residual;  // RMS of log-space residuals
};

/// Least-squares fit of f = a * T^(-5/3) in log space.
PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points);

struct RateForTarget {
  OptResult result;
  int z_bound = 0;
  bool reached = false;
};

/// Smallest z_bound (by bisection up to max_bound) at which optimize_apg
/// reaches the target. result.metrics.f_min_trap_units is the achieved rate.
RateForTarget min_rate_for_target(const GateContext& ctx, OptimizerConfig cfg, double target,
                                  int max_bound);

}  // namespace fastgate

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

#include <complex>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "fastgate/physics_core.hpp"

namespace fastgate {

/// Pulse groups of a fast gate. Group k delivers |z_k| counter-propagating
/// pulse pairs (sign = kick direction) arriving at time t_k. Times are in
/// trap periods tau0 = 2 pi / omega_t, centred on the gate midpoint.
struct PulseSequence {
  std::vector<int> kicks;
  std::vector<double> times_tau0;
  double gate_time_tau0 = 0.0;

  /// Anti-symmetric sequence on the uniform grid
  /// t = (T_G / G) * {-G/2, ..., -1, 1, ..., G/2} with z_{-k} = -z_k, where
  /// half[k-1] is the kick count of the group at +k * T_G / G.
  static PulseSequence antisymmetric(std::span<const int> half, double gate_time_tau0);

  std::size_t group_count() const { return kicks.size(); }
  /// Throws DomainError on length mismatch, non-increasing times or times
  /// outside [-T_G/2, T_G/2].
  void validate() const;
  /// z_{N+1-k} == -z_k and t_{N+1-k} == -t_k exactly.
  bool is_antisymmetric() const;
  int total_pulse_pairs() const;
  int n_max() const;
};

/// A gate between two ions of a solved mode set.
class GateContext {
 public:
  /// The laser direction defaults to the unit vector from ion mu to ion nu at
  /// equilibrium. Thermal occupations default to zero.
  GateContext(std::shared_ptr<const ModeSet> modes, const EquilibriumConfig& eq, int ion_mu,
              int ion_nu, std::optional<Vec2> direction = std::nullopt,
              std::vector<double> nbar = {});

  const ModeSet& modes() const { return *modes_; }
  std::shared_ptr<const ModeSet> shared_modes() const { return modes_; }
  int ion_mu() const { return ion_mu_; }
  int ion_nu() const { return ion_nu_; }
  const Vec2& direction() const { return direction_; }
  std::span<const double> nbar() const { return nbar_; }

  std::size_t mode_count() const { return angular_.size(); }
  /// omega_m * tau0, i.e. phase advance per trap period, in radians.
  std::span<const double> angular_per_tau0() const { return angular_; }
  std::span<const double> coupling_mu() const { return coupling_mu_; }
  std::span<const double> coupling_nu() const { return coupling_nu_; }
  std::span<const double> eta() const { return eta_; }

  /// Copy with a different thermal occupation per mode.
  GateContext with_nbar(std::vector<double> nbar) const;
  /// Copy restricted to a subset of modes (used to check that no mode is
  /// silently dropped from the sums).
  GateContext without_mode(std::size_t m) const;

 private:
  std::shared_ptr<const ModeSet> modes_;
  int ion_mu_;
  int ion_nu_;
  Vec2 direction_;
  std::vector<double> nbar_;
  std::vector<double> angular_;
  std::vector<double> coupling_mu_;
  std::vector<double> coupling_nu_;
  std::vector<double> eta_;
};

struct GateMetrics {
  double phase_sum = 0.0;   // signed accumulated entangling phase
  double delta_phi = 0.0;   // |phase_sum| - pi/4
  std::vector<std::complex<double>> delta_alpha;
  double phase_term = 0.0;
  double motional_term = 0.0;
  /// Truncated infidelity clamped to [0, 1]. The neglected higher orders are
  /// negative, so 1 - infidelity bounds the fidelity from below.
  double infidelity = 0.0;
  double f_min_trap_units = 0.0;  // 0 when the sequence has fewer than 2 groups
  int total_pulse_pairs = 0;
};

std::vector<std::complex<double>> delta_alpha(const PulseSequence& seq, const GateContext& ctx);
/// Signed entangling phase sum_m 8 eta_m^2 (K.b_m)_mu (K.b_m)_nu
///   sum_{i<j} z_i z_j sin(omega_m |t_i - t_j|).
double phase_sum(const PulseSequence& seq, const GateContext& ctx);
double delta_phi(const PulseSequence& seq, const GateContext& ctx);
GateMetrics infidelity(const PulseSequence& seq, const GateContext& ctx);
/// Recombines the stored delta_phi / delta_alpha fields of a metrics record.
double recompute_infidelity(const GateMetrics& metrics, const GateContext& ctx);

enum class RateConvention {
  /// Each group of |z| pairs occupies |z|/f centred on its arrival time;
  /// adjacent groups may not overlap.
  half_overlap,
  /// Each group starts at its arrival time and must finish before the next
  /// group arrives.
  whole_group_in_gap,
};

/// Minimum resolving repetition rate in units of omega_t / 2 pi (pulses per
/// trap period). Throws DomainError for fewer than two groups or coincident
/// adjacent times carrying pulses.
double min_rep_rate(std::span<const int> kicks, std::span<const double> times_tau0,
                    RateConvention convention = RateConvention::half_overlap);
double min_rep_rate(const PulseSequence& seq,
                    RateConvention convention = RateConvention::half_overlap);

enum class Branch { same_spin, opposite_spin };

struct Trajectory {
  Branch branch;
  std::vector<double> times_tau0;
  /// alpha[m][s]: mode m at sample s, in the frame rotating at omega_m.
  std::vector<std::vector<std::complex<double>>> alpha;
  /// Displacement of each mode after the last kick.
  std::vector<std::complex<double>> endpoint;
  /// Geometric phase accumulated by this branch, summed over modes.
  double geometric_phase = 0.0;
};

/// Kick-by-kick phase-space trajectory. Same-spin kicks both ions with equal
/// sign, opposite-spin with opposite signs. Samples are uniform over
/// [-T_G/2, T_G/2]; a sample at time t includes every kick with t_k <= t.
Trajectory trajectory(const PulseSequence& seq, const GateContext& ctx, Branch branch,
                      int samples);

struct ChainLink {
  double fidelity;
  double duration;
  long long pulse_pairs = 0;
};

struct ChainResult {
  double fidelity;
  double total_time;
  long long total_pulses;
};

/// Serial composition: fidelities multiply, times and pulse counts add.
ChainResult compose_chain(std::span<const ChainLink> gates);
ChainLink chain_link(const GateMetrics& metrics, double duration);

/// Pulse-error degraded fidelity |1 - N_p eps|^2 F0.
double effective_fidelity(long long pulse_pairs, double epsilon, double f0);

}  // namespace fastgate

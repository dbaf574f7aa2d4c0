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

#include "fastgate/gate_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fastgate/error.hpp"
#include "fastgate/simd/kernels.hpp"

namespace fastgate {

namespace {
constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr double kTimeSlack = 1e-12;
}  // namespace

PulseSequence PulseSequence::antisymmetric(std::span<const int> half, double gate_time_tau0) {
  const int h = static_cast<int>(half.size());
  const double spacing = gate_time_tau0 / (2.0 * h);
  PulseSequence seq;
  seq.gate_time_tau0 = gate_time_tau0;
  seq.kicks.resize(2 * h);
  seq.times_tau0.resize(2 * h);
  for (int k = 0; k < h; ++k) {
    seq.kicks[h + k] = half[k];
    seq.kicks[h - 1 - k] = -half[k];
    seq.times_tau0[h + k] = (k + 1) * spacing;
    seq.times_tau0[h - 1 - k] = -(k + 1) * spacing;
  }
  return seq;
}

void PulseSequence::validate() const {
  if (kicks.size() != times_tau0.size()) {
    throw DomainError("pulse sequence has " + std::to_string(kicks.size()) + " kick counts but " +
                      std::to_string(times_tau0.size()) + " times");
  }
  if (!(gate_time_tau0 >= 0.0)) throw DomainError("gate time must be non-negative");
  const double half = 0.5 * gate_time_tau0 + kTimeSlack;
  for (std::size_t k = 0; k < times_tau0.size(); ++k) {
    if (std::fabs(times_tau0[k]) > half) {
      throw DomainError("pulse group " + std::to_string(k) + " lies outside the gate window");
    }
    if (k > 0 && !(times_tau0[k] > times_tau0[k - 1])) {
      throw DomainError("pulse times must be strictly increasing (group " + std::to_string(k) +
                        ")");
    }
  }
}

bool PulseSequence::is_antisymmetric() const {
  const std::size_t n = kicks.size();
  if (times_tau0.size() != n) return false;
  for (std::size_t k = 0; k < n; ++k) {
    if (kicks[n - 1 - k] != -kicks[k] || times_tau0[n - 1 - k] != -times_tau0[k]) return false;
  }
  return true;
}

int PulseSequence::total_pulse_pairs() const {
  int total = 0;
  for (int z : kicks) total += std::abs(z);
  return total;
}

int PulseSequence::n_max() const {
  int best = 0;
  for (int z : kicks) best = std::max(best, std::abs(z));
  return best;
}

GateContext::GateContext(std::shared_ptr<const ModeSet> modes, const EquilibriumConfig& eq,
                         int ion_mu, int ion_nu, std::optional<Vec2> direction,
                         std::vector<double> nbar)
    : modes_(std::move(modes)), ion_mu_(ion_mu), ion_nu_(ion_nu), nbar_(std::move(nbar)) {
  const int ions = modes_->ion_count();
  if (ion_mu < 0 || ion_nu < 0 || ion_mu >= ions || ion_nu >= ions) {
    throw DomainError("target ion index out of range");
  }
  if (ion_mu == ion_nu) throw DomainError("gate needs two distinct target ions");
  if (direction) {
    const double len = std::hypot((*direction)[0], (*direction)[1]);
    if (std::fabs(len - 1.0) > 1e-12) throw DomainError("laser direction must be a unit vector");
    direction_ = *direction;
  } else {
    const Vec2& a = eq.positions.at(ion_mu);
    const Vec2& b = eq.positions.at(ion_nu);
    const double dx = b[0] - a[0];
    const double dy = b[1] - a[1];
    const double len = std::hypot(dx, dy);
    direction_ = {dx / len, dy / len};
  }
  const std::size_t m_count = modes_->mode_count();
  if (nbar_.empty()) nbar_.assign(m_count, 0.0);
  if (nbar_.size() != m_count) throw DomainError("thermal occupation list has the wrong length");
  for (double n : nbar_) {
    if (!std::isfinite(n) || n < 0.0) throw DomainError("thermal occupations must be finite and >= 0");
  }
  angular_.resize(m_count);
  coupling_mu_.resize(m_count);
  coupling_nu_.resize(m_count);
  eta_.resize(m_count);
  for (std::size_t m = 0; m < m_count; ++m) {
    angular_[m] = 2.0 * std::numbers::pi * modes_->frequency_ratio(m);
    coupling_mu_[m] = modes_->projection(m, ion_mu, direction_);
    coupling_nu_[m] = modes_->projection(m, ion_nu, direction_);
    eta_[m] = modes_->lamb_dicke[m];
  }
}

GateContext GateContext::with_nbar(std::vector<double> nbar) const {
  if (nbar.size() != mode_count()) throw DomainError("thermal occupation list has the wrong length");
  for (double n : nbar) {
    if (!std::isfinite(n) || n < 0.0) throw DomainError("thermal occupations must be finite and >= 0");
  }
  GateContext copy = *this;
  copy.nbar_ = std::move(nbar);
  return copy;
}

GateContext GateContext::without_mode(std::size_t m) const {
  GateContext copy = *this;
  auto drop = [m](std::vector<double>& v) { v.erase(v.begin() + static_cast<long>(m)); };
  drop(copy.nbar_);
  drop(copy.angular_);
  drop(copy.coupling_mu_);
  drop(copy.coupling_nu_);
  drop(copy.eta_);
  return copy;
}

std::vector<std::complex<double>> delta_alpha(const PulseSequence& seq, const GateContext& ctx) {
  const std::size_t modes = ctx.mode_count();
  std::vector<double> weights(seq.kicks.begin(), seq.kicks.end());
  std::vector<double> c(modes), s(modes);
  simd::phasor_sums({ctx.angular_per_tau0(), weights, seq.times_tau0}, c, s);
  std::vector<std::complex<double>> out(modes);
  for (std::size_t m = 0; m < modes; ++m) {
    out[m] = 2.0 * ctx.eta()[m] * std::complex<double>(c[m], -s[m]);
  }
  return out;
}

double phase_sum(const PulseSequence& seq, const GateContext& ctx) {
  const std::size_t n = seq.kicks.size();
  std::vector<double> weights;
  std::vector<double> gaps;
  weights.reserve(n * (n - (n > 0)) / 2);
  gaps.reserve(weights.capacity());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      weights.push_back(static_cast<double>(seq.kicks[i]) * seq.kicks[j]);
      gaps.push_back(std::fabs(seq.times_tau0[j] - seq.times_tau0[i]));
    }
  }
  const std::size_t modes = ctx.mode_count();
  std::vector<double> c(modes), s(modes);
  simd::phasor_sums({ctx.angular_per_tau0(), weights, gaps}, c, s);
  double total = 0.0;
  for (std::size_t m = 0; m < modes; ++m) {
    const double eta = ctx.eta()[m];
    total += 8.0 * eta * eta * ctx.coupling_mu()[m] * ctx.coupling_nu()[m] * s[m];
  }
  return total;
}

double delta_phi(const PulseSequence& seq, const GateContext& ctx) {
  return std::fabs(phase_sum(seq, ctx)) - kQuarterPi;
}

namespace {

struct Terms {
  double phase;
  double motional;
};

Terms infidelity_terms(double dphi, std::span<const std::complex<double>> dalpha,
                       const GateContext& ctx) {
  double motional = 0.0;
  for (std::size_t m = 0; m < dalpha.size(); ++m) {
    const double kmu = ctx.coupling_mu()[m];
    const double knu = ctx.coupling_nu()[m];
    motional += (0.5 + ctx.nbar()[m]) * (kmu * kmu + knu * knu) * std::norm(dalpha[m]);
  }
  return {2.0 / 3.0 * dphi * dphi, 4.0 / 3.0 * motional};
}

}  // namespace

GateMetrics infidelity(const PulseSequence& seq, const GateContext& ctx) {
  seq.validate();
  GateMetrics out;
  out.phase_sum = phase_sum(seq, ctx);
  out.delta_phi = std::fabs(out.phase_sum) - kQuarterPi;
  out.delta_alpha = delta_alpha(seq, ctx);
  const Terms terms = infidelity_terms(out.delta_phi, out.delta_alpha, ctx);
  out.phase_term = terms.phase;
  out.motional_term = terms.motional;
  out.infidelity = std::clamp(terms.phase + terms.motional, 0.0, 1.0);
  out.total_pulse_pairs = seq.total_pulse_pairs();
  out.f_min_trap_units = seq.group_count() >= 2 ? min_rep_rate(seq) : 0.0;
  return out;
}

double recompute_infidelity(const GateMetrics& metrics, const GateContext& ctx) {
  const Terms terms = infidelity_terms(metrics.delta_phi, metrics.delta_alpha, ctx);
  return std::clamp(terms.phase + terms.motional, 0.0, 1.0);
}

double min_rep_rate(std::span<const int> kicks, std::span<const double> times_tau0,
                    RateConvention convention) {
  if (kicks.size() < 2 || kicks.size() != times_tau0.size()) {
    throw DomainError("minimum repetition rate needs at least two pulse groups");
  }
  double rate = 0.0;
  for (std::size_t k = 0; k + 1 < kicks.size(); ++k) {
    const double a = std::abs(kicks[k]);
    const double b = std::abs(kicks[k + 1]);
    const double gap = times_tau0[k + 1] - times_tau0[k];
    const double demand = convention == RateConvention::half_overlap ? 0.5 * (a + b) : a;
    if (demand == 0.0) continue;
    if (!(gap > 0.0)) {
      throw DomainError("pulse groups " + std::to_string(k) + " and " + std::to_string(k + 1) +
                        " coincide; no finite repetition rate resolves them");
    }
    rate = std::max(rate, demand / gap);
  }
  return rate;
}

double min_rep_rate(const PulseSequence& seq, RateConvention convention) {
  return min_rep_rate(seq.kicks, seq.times_tau0, convention);
}

Trajectory trajectory(const PulseSequence& seq, const GateContext& ctx, Branch branch,
                      int samples) {
  seq.validate();
  if (samples < 2) throw DomainError("trajectory needs at least two samples");
  const double sign = branch == Branch::same_spin ? 1.0 : -1.0;
  const std::size_t modes = ctx.mode_count();
  const std::size_t groups = seq.group_count();

  Trajectory out;
  out.branch = branch;
  out.times_tau0.resize(samples);
  const double start = -0.5 * seq.gate_time_tau0;
  for (int s = 0; s < samples; ++s) {
    out.times_tau0[s] = start + seq.gate_time_tau0 * s / (samples - 1);
  }
  out.alpha.assign(modes, std::vector<std::complex<double>>(samples));
  out.endpoint.resize(modes);

  const std::complex<double> i_unit(0.0, 1.0);
  for (std::size_t m = 0; m < modes; ++m) {
    const double coupling = ctx.coupling_mu()[m] + sign * ctx.coupling_nu()[m];
    const double w = ctx.angular_per_tau0()[m];
    std::complex<double> alpha(0.0, 0.0);
    std::size_t next = 0;
    auto apply_kick = [&](std::size_t k) {
      const std::complex<double> jump = i_unit * (2.0 * ctx.eta()[m] * seq.kicks[k] * coupling) *
                                        std::polar(1.0, w * seq.times_tau0[k]);
      out.geometric_phase += std::imag(jump * std::conj(alpha));
      alpha += jump;
    };
    for (int s = 0; s < samples; ++s) {
      while (next < groups && seq.times_tau0[next] <= out.times_tau0[s] + kTimeSlack) {
        apply_kick(next++);
      }
      out.alpha[m][s] = alpha;
    }
    while (next < groups) apply_kick(next++);
    out.endpoint[m] = alpha;
  }
  return out;
}

ChainResult compose_chain(std::span<const ChainLink> gates) {
  if (gates.empty()) throw DomainError("cannot compose an empty gate chain");
  ChainResult out{1.0, 0.0, 0};
  for (const auto& g : gates) {
    out.fidelity *= g.fidelity;
    out.total_time += g.duration;
    out.total_pulses += g.pulse_pairs;
  }
  return out;
}

ChainLink chain_link(const GateMetrics& metrics, double duration) {
  return {1.0 - metrics.infidelity, duration, metrics.total_pulse_pairs};
}

double effective_fidelity(long long pulse_pairs, double epsilon, double f0) {
  if (epsilon < 0.0) throw DomainError("pulse error must be non-negative");
  if (f0 < 0.0 || f0 > 1.0) throw DomainError("raw fidelity must lie in [0, 1]");
  const double amp = 1.0 - static_cast<double>(pulse_pairs) * epsilon;
  return amp * amp * f0;
}

}  // namespace fastgate

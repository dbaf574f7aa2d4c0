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

#include "fastgate/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "fastgate/error.hpp"
#include "fastgate/simd/kernels.hpp"

namespace fastgate {

namespace {

constexpr double kPhaseWeight = 2.0 / 3.0;
constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr int kSteps[] = {16, 8, 4, 2, 1};
// Relative gain below which a move counts as no improvement. Guards against
// cycling between lattice points whose costs differ only by rounding.
constexpr double kMinGain = 1e-13;
// Half-width of the two-coordinate block scanned around the current point.
// Covers the whole lattice at the default z_bound.
constexpr int kBlockRadius = 100;

// Truncated infidelity of the half-vector h as two quadratic forms:
//   (2/3) (|h.Q.h| - pi/4)^2 + h.M.h
struct CostModel {
  int half = 0;
  std::vector<double> q;  // half x half, row-major
  std::vector<double> m;

  double q_at(int i, int j) const { return q[i * half + j]; }
  double m_at(int i, int j) const { return m[i * half + j]; }

  static double form(const std::vector<double>& a, std::span<const int> h, int n) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      if (h[i] == 0) continue;
      double row = 0.0;
      for (int j = 0; j < n; ++j) row += a[i * n + j] * h[j];
      total += h[i] * row;
    }
    return total;
  }

  double cost(std::span<const int> h) const {
    const double p = form(q, h, half);
    const double dphi = std::fabs(p) - kQuarterPi;
    return kPhaseWeight * dphi * dphi + form(m, h, half);
  }
};

CostModel build_model(const GateContext& ctx, const PulseSequence& grid) {
  const int groups = static_cast<int>(grid.group_count());
  const int half = groups / 2;
  const auto& t = grid.times_tau0;
  const std::size_t modes = ctx.mode_count();

  // Full-sequence phase coefficients, A[i][j] for i != j.
  std::vector<double> a(static_cast<std::size_t>(groups) * groups, 0.0);
  for (std::size_t mi = 0; mi < modes; ++mi) {
    const double eta = ctx.eta()[mi];
    const double amp = 8.0 * eta * eta * ctx.coupling_mu()[mi] * ctx.coupling_nu()[mi];
    const double w = ctx.angular_per_tau0()[mi];
    for (int i = 0; i < groups; ++i) {
      for (int j = i + 1; j < groups; ++j) {
        const double v = amp * std::sin(w * std::fabs(t[j] - t[i]));
        a[i * groups + j] += v;
        a[j * groups + i] += v;
      }
    }
  }
  // Map a half-vector index to its two full-sequence slots.
  auto plus = [half](int k) { return half + k; };
  auto minus = [half](int k) { return half - 1 - k; };

  CostModel model;
  model.half = half;
  model.q.assign(static_cast<std::size_t>(half) * half, 0.0);
  model.m.assign(static_cast<std::size_t>(half) * half, 0.0);
  for (int k = 0; k < half; ++k) {
    for (int l = 0; l < half; ++l) {
      const double v = a[plus(k) * groups + plus(l)] - a[plus(k) * groups + minus(l)] -
                       a[minus(k) * groups + plus(l)] + a[minus(k) * groups + minus(l)];
      model.q[k * half + l] = 0.5 * v;
    }
  }

  std::vector<double> u(half), s(half);
  for (std::size_t mi = 0; mi < modes; ++mi) {
    const double eta = ctx.eta()[mi];
    const double kmu = ctx.coupling_mu()[mi];
    const double knu = ctx.coupling_nu()[mi];
    const double weight = 4.0 / 3.0 * (0.5 + ctx.nbar()[mi]) * (kmu * kmu + knu * knu) * 4.0 *
                          eta * eta;
    const double w = ctx.angular_per_tau0()[mi];
    for (int k = 0; k < half; ++k) {
      u[k] = std::cos(w * t[plus(k)]) - std::cos(w * t[minus(k)]);
      s[k] = std::sin(w * t[plus(k)]) - std::sin(w * t[minus(k)]);
    }
    for (int k = 0; k < half; ++k) {
      for (int l = 0; l < half; ++l) {
        model.m[k * half + l] += weight * (u[k] * u[l] + s[k] * s[l]);
      }
    }
  }
  return model;
}

struct Candidate {
  std::vector<int> half;
  double cost;
};

class Search {
 public:
  Search(const CostModel& model, int bound) : model_(model), bound_(bound) {}

  long long evaluations() const { return evaluations_; }

  Candidate run(std::vector<int> h) {
    double cost = eval(h);
    for (int round = 0; round < 1000; ++round) {
      const double before = cost;
      cost = coordinate_descent(h, cost);
      cost = model_.half == 1 ? line_scan(h, cost) : block_sweep(h, cost);
      if (!(cost < before * (1.0 - kMinGain))) break;
    }
    return {std::move(h), cost};
  }

 private:
  double eval(std::span<const int> h) {
    ++evaluations_;
    return model_.cost(h);
  }

  double coordinate_descent(std::vector<int>& h, double cost) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (int step : kSteps) {
        for (int i = 0; i < model_.half; ++i) {
          for (int dir : {1, -1}) {
            const int keep = h[i];
            const int next = keep + dir * step;
            if (next < -bound_ || next > bound_) continue;
            h[i] = next;
            const double c = eval(h);
            if (c < cost * (1.0 - kMinGain)) {
              cost = c;
              improved = true;
            } else {
              h[i] = keep;
            }
          }
        }
      }
    }
    return cost;
  }

  // Linear and constant parts of both forms with coordinates i (and j) zeroed.
  struct Partial {
    double base_q, li_q, lj_q, base_m, li_m, lj_m;
  };

  Partial partial(const std::vector<int>& h, int i, int j) const {
    const int n = model_.half;
    std::vector<int> rest = h;
    rest[i] = 0;
    if (j >= 0) rest[j] = 0;
    Partial p{};
    p.base_q = CostModel::form(model_.q, rest, n);
    p.base_m = CostModel::form(model_.m, rest, n);
    for (int k = 0; k < n; ++k) {
      p.li_q += 2.0 * model_.q_at(i, k) * rest[k];
      p.li_m += 2.0 * model_.m_at(i, k) * rest[k];
      if (j >= 0) {
        p.lj_q += 2.0 * model_.q_at(j, k) * rest[k];
        p.lj_m += 2.0 * model_.m_at(j, k) * rest[k];
      }
    }
    return p;
  }

  double line_scan(std::vector<int>& h, double cost) {
    for (int i = 0; i < model_.half; ++i) {
      const Partial p = partial(h, i, -1);
      simd::QuarticRow row{p.base_q, p.li_q, model_.q_at(i, i),
                           p.base_m, p.li_m, model_.m_at(i, i),
                           kPhaseWeight, kQuarterPi, -bound_, 2 * bound_ + 1};
      const simd::RowMin r = simd::scan_row(row);
      evaluations_ += row.count;
      if (r.value < cost * (1.0 - kMinGain)) {
        cost = r.value;
        h[i] = row.first + r.index;
      }
    }
    return cost;
  }

  double block_sweep(std::vector<int>& h, double cost) {
    const int n = model_.half;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const Partial p = partial(h, i, j);
        const double qii = model_.q_at(i, i);
        const double qij = model_.q_at(i, j);
        const double mii = model_.m_at(i, i);
        const double mij = model_.m_at(i, j);
        const int a_lo = std::max(-bound_, h[i] - kBlockRadius);
        const int a_hi = std::min(bound_, h[i] + kBlockRadius);
        simd::QuarticRow row;
        row.p2 = model_.q_at(j, j);
        row.m2 = model_.m_at(j, j);
        row.weight = kPhaseWeight;
        row.target = kQuarterPi;
        row.first = std::max(-bound_, h[j] - kBlockRadius);
        row.count = std::min(bound_, h[j] + kBlockRadius) - row.first + 1;
        double best = cost * (1.0 - kMinGain);
        int best_a = h[i];
        int best_b = h[j];
        bool found = false;
        for (int a = a_lo; a <= a_hi; ++a) {
          row.p0 = p.base_q + a * (p.li_q + a * qii);
          row.p1 = p.lj_q + 2.0 * qij * a;
          row.m0 = p.base_m + a * (p.li_m + a * mii);
          row.m1 = p.lj_m + 2.0 * mij * a;
          const simd::RowMin r = simd::scan_row(row);
          if (r.value < best) {
            best = r.value;
            best_a = a;
            best_b = row.first + r.index;
            found = true;
          }
        }
        evaluations_ += static_cast<long long>(row.count) * (a_hi - a_lo + 1);
        if (found) {
          h[i] = best_a;
          h[j] = best_b;
          cost = best;
        }
      }
    }
    return cost;
  }

  const CostModel& model_;
  int bound_;
  long long evaluations_ = 0;
};

// Merge order: infidelity, then n_max, then lexicographic half-vector.
bool better(const OptResult& a, const std::vector<int>& ha, const OptResult& b,
            const std::vector<int>& hb) {
  if (a.metrics.infidelity != b.metrics.infidelity) {
    return a.metrics.infidelity < b.metrics.infidelity;
  }
  if (a.n_max != b.n_max) return a.n_max < b.n_max;
  return ha < hb;
}

OptResult finish(const GateContext& ctx, const OptimizerConfig& cfg, std::span<const int> half) {
  OptResult out;
  out.sequence = PulseSequence::antisymmetric(half, cfg.gate_time_tau0);
  out.metrics = infidelity(out.sequence, ctx);
  out.n_max = out.sequence.n_max();
  out.characteristic = static_cast<double>(out.n_max) * out.n_max * ctx.modes().xi;
  out.reached_target = out.metrics.infidelity <= cfg.target_infidelity;
  return out;
}

}  // namespace

void OptimizerConfig::validate() const {
  if (group_count < 2 || group_count % 2 != 0) {
    throw ConfigError("group_count must be a positive even integer, got " +
                      std::to_string(group_count));
  }
  if (z_bound < 1) throw ConfigError("z_bound must be >= 1");
  if (restarts < 1) throw ConfigError("restarts must be >= 1");
  if (!(gate_time_tau0 > 0.0) || !std::isfinite(gate_time_tau0)) {
    throw ConfigError("gate time must be positive");
  }
  if (!(target_infidelity >= 0.0)) throw ConfigError("target infidelity must be >= 0");
}

OptResult optimize_apg(const GateContext& ctx, const OptimizerConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  const int half = cfg.group_count / 2;
  const std::vector<int> zeros(half, 0);
  const CostModel model = build_model(ctx, PulseSequence::antisymmetric(zeros, cfg.gate_time_tau0));

  std::mt19937_64 rng(cfg.rng_seed);
  std::uniform_int_distribution<int> draw(-cfg.z_bound, cfg.z_bound);
  Search search(model, cfg.z_bound);

  OptResult best;
  std::vector<int> best_half;
  int run = 0;
  for (; run < cfg.restarts; ++run) {
    std::vector<int> h(half);
    for (int& v : h) v = draw(rng);
    Candidate c = search.run(std::move(h));
    OptResult r = finish(ctx, cfg, c.half);
    if (run == 0 || better(r, c.half, best, best_half)) {
      best = std::move(r);
      best_half = std::move(c.half);
    }
    if (cfg.target_infidelity > 0.0 && best.reached_target) {
      ++run;
      break;
    }
  }
  best.restarts_run = run;
  best.evaluations = search.evaluations();
  best.wall_time = std::chrono::steady_clock::now() - start;
  return best;
}

OptResult brute_force_apg(const GateContext& ctx, const OptimizerConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  const int half = cfg.group_count / 2;
  const double side = 2.0 * cfg.z_bound + 1.0;
  if (std::pow(side, half) > 1e8) throw DomainError("exhaustive search space too large");
  const std::vector<int> zeros(half, 0);
  const CostModel model = build_model(ctx, PulseSequence::antisymmetric(zeros, cfg.gate_time_tau0));

  std::vector<int> h(half, -cfg.z_bound);
  std::vector<int> best_half = h;
  double best_cost = model.cost(h);
  long long evaluations = 1;
  while (true) {
    int k = half - 1;
    while (k >= 0 && h[k] == cfg.z_bound) h[k--] = -cfg.z_bound;
    if (k < 0) break;
    ++h[k];
    const double c = model.cost(h);
    ++evaluations;
    if (c < best_cost) {
      best_cost = c;
      best_half = h;
    }
  }
  OptResult out = finish(ctx, cfg, best_half);
  out.evaluations = evaluations;
  out.restarts_run = 1;
  out.wall_time = std::chrono::steady_clock::now() - start;
  return out;
}

std::vector<SweepRow> sweep_rep_rate(const GateContext& ctx, std::span<const double> gate_times,
                                     const OptimizerConfig& cfg) {
  if (gate_times.empty()) throw DomainError("sweep needs at least one gate time");
  std::vector<double> times(gate_times.begin(), gate_times.end());
  std::sort(times.begin(), times.end());
  std::vector<SweepRow> rows;
  rows.reserve(times.size());
  for (double t : times) {
    OptimizerConfig point = cfg;
    point.gate_time_tau0 = t;
    OptResult r = optimize_apg(ctx, point);
    rows.push_back({t, r.metrics.f_min_trap_units, r.metrics.infidelity, std::move(r)});
  }
  return rows;
}

CharacteristicCurve characteristic_curve(std::span<const OptResult> results) {
  if (results.empty()) throw DomainError("characteristic curve needs at least one result");
  CharacteristicCurve curve;
  curve.rows.reserve(results.size());
  for (const auto& r : results) {
    curve.rows.push_back({r.characteristic, r.metrics.infidelity, r.metrics.infidelity > 1e-2});
  }
  std::stable_sort(curve.rows.begin(), curve.rows.end(),
                   [](const auto& a, const auto& b) { return a.characteristic < b.characteristic; });
  curve.monotone = true;
  const CharacteristicRow* prev = nullptr;
  for (const auto& row : curve.rows) {
    if (!row.in_monotone_region) continue;
    if (prev && row.infidelity > prev->infidelity) curve.monotone = false;
    prev = &row;
  }
  return curve;
}

PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) throw DomainError("power-law fit needs at least two points");
  constexpr double kExponent = -5.0 / 3.0;
  // With a fixed slope the least-squares intercept is the mean offset.
  double sum = 0.0;
  for (const auto& [t, f] : points) {
    if (!(t > 0.0) || !(f > 0.0)) throw DomainError("power-law fit needs positive data");
    sum += std::log(f) - kExponent * std::log(t);
  }
  const double intercept = sum / static_cast<double>(points.size());
  double sq = 0.0;
  for (const auto& [t, f] : points) {
    const double r = std::log(f) - kExponent * std::log(t) - intercept;
    sq += r * r;
  }
  return {std::exp(intercept), std::sqrt(sq / static_cast<double>(points.size()))};
}

RateForTarget min_rate_for_target(const GateContext& ctx, OptimizerConfig cfg, double target,
                                  int max_bound) {
  if (!(target > 0.0)) throw DomainError("target infidelity must be positive");
  if (max_bound < 1) throw DomainError("max_bound must be >= 1");
  cfg.target_infidelity = target;
  RateForTarget out;
  cfg.z_bound = max_bound;
  OptResult hi = optimize_apg(ctx, cfg);
  if (!hi.reached_target) {
    out.result = std::move(hi);
    out.z_bound = max_bound;
    return out;
  }
  int lo_bound = 0;  // known to fail (or untested at zero)
  int hi_bound = max_bound;
  while (hi_bound - lo_bound > 1) {
    const int mid = lo_bound + (hi_bound - lo_bound) / 2;
    cfg.z_bound = mid;
    OptResult r = optimize_apg(ctx, cfg);
    if (r.reached_target) {
      hi_bound = mid;
      hi = std::move(r);
    } else {
      lo_bound = mid;
    }
  }
  out.result = std::move(hi);
  out.z_bound = hi_bound;
  out.reached = true;
  return out;
}

}  // namespace fastgate

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

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>

#include "fastgate/error.hpp"
#include "fastgate/io.hpp"

namespace fs = std::filesystem;
using namespace fastgate;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct Globals {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format;  // empty: every format the command supports
};

io::RunConfig load(const Globals& g) {
  io::RunConfig cfg = g.config.empty() ? io::RunConfig{} : io::load_config(g.config);
  if (g.seed) cfg.optimize.rng_seed = *g.seed;
  if (!g.out.empty()) cfg.output_dir = g.out;
  return cfg;
}

bool wants(const Globals& g, const char* fmt) { return g.format.empty() || g.format == fmt; }

void emit(const io::RunConfig& cfg, const std::string& name, const std::string& content) {
  fs::create_directories(cfg.output_dir);
  const fs::path path = fs::path(cfg.output_dir) / name;
  io::write_file_atomic(path, content);
  std::cerr << "wrote " << path.string() << '\n';
}

std::string dump(const io::Json& j) { return j.dump(2) + "\n"; }

struct GateSetup {
  std::shared_ptr<const ModeSet> modes;
  EquilibriumConfig eq;
  std::unique_ptr<GateContext> ctx;
};

GateSetup gate_setup(const io::RunConfig& cfg) {
  GateSetup s;
  s.eq = find_equilibrium(cfg.array);
  s.modes = std::make_shared<const ModeSet>(solve_modes(cfg.array, s.eq));
  std::vector<double> nbar = cfg.gate.nbar;
  if (nbar.size() == 1) nbar.assign(s.modes->mode_count(), nbar[0]);
  try {
    s.ctx = std::make_unique<GateContext>(s.modes, s.eq, cfg.gate.ion_mu, cfg.gate.ion_nu,
                                          cfg.gate.direction, nbar);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("gate: ") + e.what());
  }
  return s;
}

void print_metrics(const GateMetrics& m, const TrapArray& array) {
  std::printf("infidelity      %.6e\n", m.infidelity);
  std::printf("delta_phi       %.6e\n", m.delta_phi);
  std::printf("phase term      %.6e\n", m.phase_term);
  std::printf("motional term   %.6e\n", m.motional_term);
  std::printf("f_min           %.6g (omega_t / 2pi) = %.6g MHz\n", m.f_min_trap_units,
              m.f_min_trap_units * array.omega_t / constants::two_pi * 1e-6);
  std::printf("pulse pairs     %d\n", m.total_pulse_pairs);
}

int cmd_modes(const Globals& g, bool xi_only) {
  const io::RunConfig cfg = load(g);
  const EquilibriumConfig eq = find_equilibrium(cfg.array);
  const ModeSet modes = solve_modes(cfg.array, eq);
  if (xi_only) {
    std::printf("%.6g\n", modes.xi);
    return 0;
  }
  if (wants(g, "json")) emit(cfg, "modes.json", dump(io::to_json(modes)));
  if (wants(g, "csv")) emit(cfg, "modes.csv", io::modes_csv(modes));
  std::printf("%zu modes, xi = %.6g\n", modes.mode_count(), modes.xi);
  for (std::size_t m = 0; m < modes.mode_count(); ++m) {
    const double r = modes.frequency_ratio(m);
    std::printf("  %3zu  omega^2/omega_t^2 = %.10f\n", m, r * r);
  }
  return 0;
}

int cmd_gate_eval(const Globals& g, const std::string& sequence_path) {
  const io::RunConfig cfg = load(g);
  const PulseSequence seq = io::parse_sequence(io::read_json(sequence_path));
  const GateSetup s = gate_setup(cfg);
  const GateMetrics m = infidelity(seq, *s.ctx);
  if (wants(g, "json")) emit(cfg, "metrics.json", dump(io::to_json(m)));
  print_metrics(m, cfg.array);
  return 0;
}

int cmd_gate_optimize(const Globals& g) {
  const io::RunConfig cfg = load(g);
  const GateSetup s = gate_setup(cfg);
  const OptResult r = optimize_apg(*s.ctx, cfg.optimize);
  if (wants(g, "json")) emit(cfg, "optimize.json", dump(io::to_json(r)));
  std::printf("half-vector    ");
  for (std::size_t k = r.sequence.group_count() / 2; k < r.sequence.group_count(); ++k) {
    std::printf(" %d", r.sequence.kicks[k]);
  }
  std::printf("\nn_max           %d\nn_max^2 xi      %.4g\nrestarts        %d\n", r.n_max,
              r.characteristic, r.restarts_run);
  print_metrics(r.metrics, cfg.array);
  if (cfg.optimize.target_infidelity > 0.0 && !r.reached_target) {
    std::printf("target %.3g not reached\n", cfg.optimize.target_infidelity);
  }
  return 0;
}

int cmd_gate_sweep(const Globals& g) {
  const io::RunConfig cfg = load(g);
  const GateSetup s = gate_setup(cfg);
  const auto rows = sweep_rep_rate(*s.ctx, cfg.sweep.gate_times_tau0, cfg.optimize);
  if (wants(g, "csv")) emit(cfg, "sweep.csv", io::sweep_csv(rows));
  if (wants(g, "json")) {
    io::Json j = io::Json::array();
    for (const auto& r : rows) j.push_back(io::to_json(r.result));
    emit(cfg, "sweep.json", dump(j));
  }
  std::printf("%10s %14s %12s\n", "T_G/tau0", "f_min", "1-F");
  for (const auto& r : rows) {
    std::printf("%10.4g %14.6g %12.4e\n", r.gate_time_tau0, r.f_min, r.infidelity);
  }
  return 0;
}

int cmd_gate_trajectory(const Globals& g, const std::string& sequence_path, int samples) {
  const io::RunConfig cfg = load(g);
  const PulseSequence seq = io::parse_sequence(io::read_json(sequence_path));
  const GateSetup s = gate_setup(cfg);
  const Trajectory same = trajectory(seq, *s.ctx, Branch::same_spin, samples);
  const Trajectory opposite = trajectory(seq, *s.ctx, Branch::opposite_spin, samples);
  emit(cfg, "trajectory.csv", io::trajectory_csv({same, opposite}));
  std::printf("branch phase difference %.10f (target pi/2)\n",
              same.geometric_phase - opposite.geometric_phase);
  return 0;
}

int cmd_scale(const Globals& g, const std::string& sequence_path, const std::vector<int>& sizes) {
  io::RunConfig cfg = load(g);
  if (!sizes.empty()) cfg.scale.sizes = sizes;
  const PulseSequence donor = io::parse_sequence(io::read_json(sequence_path));
  const auto rows = position_sweep(cfg.scale.sizes, donor, cfg.array, {cfg.scale.max_size});
  if (wants(g, "csv")) emit(cfg, "scale.csv", io::scaling_csv(rows));
  if (wants(g, "json")) emit(cfg, "scale.json", dump(io::to_json(rows)));
  for (const auto& r : rows) {
    std::printf("N=%-3d %-13s (%d,%d)-(%d,%d)  1-F = %.4e\n", r.n, r.label.c_str(), r.bond.r0,
                r.bond.c0, r.bond.r1, r.bond.c1, r.metrics.infidelity);
  }
  return 0;
}

fh::QubitEmbedding pick_embedding(const io::RunConfig& cfg, const std::string& geometry,
                                  const std::string& embedding) {
  if (geometry == "chain") return fh::QubitEmbedding::chain(cfg.fh.lattice.qubits());
  if (embedding == "default") return fh::default_embedding(cfg.fh.lattice);
  return io::parse_embedding(io::read_json(embedding));
}

int cmd_fh_terms(const Globals& g) {
  const io::RunConfig cfg = load(g);
  const auto h = fh::jw_transform(cfg.fh.lattice, cfg.fh.normalization);
  if (wants(g, "json")) emit(cfg, "terms.json", dump(io::to_json(h)));
  std::printf("qubits %d, constant %.6g, %zu terms\n", h.qubits, h.constant, h.terms.size());
  for (const auto& t : h.terms) {
    std::printf("  %+.6g  %s\n", t.term.coefficient, t.term.op.to_string().c_str());
  }
  return 0;
}

int cmd_fh_count(const Globals& g, const std::string& geometry, const std::string& embedding) {
  const io::RunConfig cfg = load(g);
  const auto h = fh::jw_transform(cfg.fh.lattice, cfg.fh.normalization);
  const auto emb = pick_embedding(cfg, geometry, embedding);
  const auto c = fh::count_trotter_step(h, emb, cfg.fh.hub_policy);
  io::Json j = io::to_json(c);
  j["geometry"] = geometry;
  if (wants(g, "json")) emit(cfg, "census_" + geometry + ".json", dump(j));
  std::printf("terms    two-body %d, three-body %d, eleven-body %d\n", c.two_body_terms,
              c.three_body_terms, c.eleven_body_terms);
  std::printf("gates    two-body %lld + three-body %lld + eleven-body %lld = total %lld\n",
              c.two_body, c.three_body, c.eleven_body, c.total);
  std::printf("diagonal operations %lld, swaps %lld\n", c.diagonal_ops, c.swaps);
  if (geometry == "grid") std::printf("reference grid total: 2628 (344 diagonal)\n");
  return 0;
}

int cmd_fh_verify(const Globals& g) {
  const io::RunConfig cfg = load(g);
  const auto points = fh::trotter_verify_small(cfg.fh.lattice, cfg.fh.verify_time,
                                               cfg.fh.verify_steps);
  if (wants(g, "csv")) emit(cfg, "verify.csv", io::verify_csv(points));
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::printf("n=%-4d error %.6e", points[i].steps, points[i].error);
    if (i > 0 && points[i - 1].error > 0.0) {
      std::printf("  ratio %.4f", points[i].error / points[i - 1].error);
    }
    std::printf("\n");
  }
  return 0;
}

int cmd_fh_feasibility(const Globals& g, const std::string& geometry,
                       const std::string& embedding) {
  const io::RunConfig cfg = load(g);
  const auto h = fh::jw_transform(cfg.fh.lattice, cfg.fh.normalization);
  const auto census = fh::count_trotter_step(h, pick_embedding(cfg, geometry, embedding),
                                             cfg.fh.hub_policy);
  const fh::FeasibilityInput in{census.total,          cfg.fh.gate_time_us * 1e-6,
                                cfg.fh.trotter_steps,  cfg.fh.pulse_pairs_per_gate,
                                cfg.fh.pulse_error,    cfg.fh.gate_fidelity};
  const auto r = fh::feasibility_report(in);
  io::Json j = io::to_json(r);
  j["gates_per_step"] = census.total;
  j["trotter_steps"] = cfg.fh.trotter_steps;
  if (wants(g, "json")) emit(cfg, "feasibility.json", dump(j));
  std::printf("gates/step %lld x %lld steps x %.3g us = %.4g ms\n", census.total,
              cfg.fh.trotter_steps, cfg.fh.gate_time_us, r.total_time_s * 1e3);
  std::printf("gate fidelity %.8f, simulation fidelity %.4f\n", r.gate_fidelity,
              r.simulation_fidelity);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fast pulsed gates in 2D microtrap arrays"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--config", g.config, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--seed", g.seed, "Seed for the optimizer's random restarts");
  app.add_option("--out", g.out, "Output directory (default from config, else .)");
  app.add_option("--format", g.format, "Restrict outputs to one format")
      ->check(CLI::IsMember({"json", "csv"}));

  std::function<int()> action;

  auto* modes = app.add_subcommand("modes", "Equilibrium and motional modes of the array");
  modes->fallthrough();
  bool xi_only = false;
  modes->add_flag("--xi-only", xi_only, "Print the mode-splitting parameter only");
  modes->callback([&] { action = [&] { return cmd_modes(g, xi_only); }; });

  auto* gate = app.add_subcommand("gate", "Evaluate or design pulse sequences");
  gate->fallthrough();
  gate->require_subcommand(1);
  std::string sequence_path;
  int samples = 400;
  auto* eval = gate->add_subcommand("eval", "Metrics of a sequence file");
  eval->fallthrough();
  eval->add_option("--sequence", sequence_path, "Sequence JSON")->required();
  eval->callback([&] { action = [&] { return cmd_gate_eval(g, sequence_path); }; });
  auto* optimize = gate->add_subcommand("optimize", "Search anti-symmetric sequences");
  optimize->fallthrough();
  optimize->callback([&] { action = [&] { return cmd_gate_optimize(g); }; });
  auto* sweep = gate->add_subcommand("sweep", "Optimize over the configured gate times");
  sweep->fallthrough();
  sweep->callback([&] { action = [&] { return cmd_gate_sweep(g); }; });
  auto* traj = gate->add_subcommand("trajectory", "Phase-space trajectories as CSV");
  traj->fallthrough();
  traj->add_option("--sequence", sequence_path, "Sequence JSON")->required();
  traj->add_option("--samples", samples, "Samples per trajectory")->check(CLI::Range(2, 1000000));
  traj->callback([&] { action = [&] { return cmd_gate_trajectory(g, sequence_path, samples); }; });

  auto* scale = app.add_subcommand("scale", "Embed a 2x2 sequence in N x N arrays");
  scale->fallthrough();
  scale->add_option("--sequence", sequence_path, "Donor sequence JSON")->required();
  std::vector<int> sizes;
  scale->add_option("--sizes", sizes, "Array sizes N (overrides scale.sizes)");
  scale->callback([&] { action = [&] { return cmd_scale(g, sequence_path, sizes); }; });

  auto* fhc = app.add_subcommand("fh", "Fermi-Hubbard gate budget");
  fhc->fallthrough();
  fhc->require_subcommand(1);
  std::string geometry = "grid";
  std::string embedding = "default";
  auto add_layout = [&](CLI::App* sub) {
    sub->add_option("--geometry", geometry, "chain or grid")
        ->check(CLI::IsMember({"chain", "grid"}));
    sub->add_option("--embedding", embedding, "'default' or an embedding JSON path");
  };
  auto* terms = fhc->add_subcommand("terms", "Jordan-Wigner terms");
  terms->fallthrough();
  terms->callback([&] { action = [&] { return cmd_fh_terms(g); }; });
  auto* count = fhc->add_subcommand("count", "GP gates per Trotter step");
  count->fallthrough();
  add_layout(count);
  count->callback([&] { action = [&] { return cmd_fh_count(g, geometry, embedding); }; });
  auto* verify = fhc->add_subcommand("verify", "Dense Trotter error check");
  verify->fallthrough();
  verify->callback([&] { action = [&] { return cmd_fh_verify(g); }; });
  auto* feas = fhc->add_subcommand("feasibility", "Run time and fidelity budget");
  feas->fallthrough();
  add_layout(feas);
  feas->callback([&] { action = [&] { return cmd_fh_feasibility(g, geometry, embedding); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    return action();
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ConvergenceError& e) {
    std::cerr << "numerical failure: " << e.what() << " (last residual " << e.last_residual()
              << ")\n";
    return kExitNumerical;
  } catch (const Error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

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

#include "fastgate/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>
#include <unistd.h>

#include "fastgate/constants.hpp"
#include "fastgate/error.hpp"

namespace fastgate::io {

namespace {

// Typed, key-tracking view of one JSON object. finish() rejects any key that
// was never read.
class Block {
 public:
  Block(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(where() + "expected an object");
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  std::optional<double> number(const std::string& key) {
    const Json* v = take(key);
    if (!v) return std::nullopt;
    if (!v->is_number()) throw ConfigError(where(key) + "expected a number");
    return v->get<double>();
  }

  std::optional<long long> integer(const std::string& key) {
    const Json* v = take(key);
    if (!v) return std::nullopt;
    if (!v->is_number_integer()) throw ConfigError(where(key) + "expected an integer");
    return v->get<long long>();
  }

  std::optional<std::string> string(const std::string& key) {
    const Json* v = take(key);
    if (!v) return std::nullopt;
    if (!v->is_string()) throw ConfigError(where(key) + "expected a string");
    return v->get<std::string>();
  }

  std::optional<std::vector<double>> numbers(const std::string& key) {
    const Json* v = take(key);
    if (!v) return std::nullopt;
    if (!v->is_array()) throw ConfigError(where(key) + "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v->size(); ++i) {
      if (!(*v)[i].is_number()) {
        throw ConfigError(where(key + "[" + std::to_string(i) + "]") + "expected a number");
      }
      out.push_back((*v)[i].get<double>());
    }
    return out;
  }

  std::optional<std::vector<long long>> integers(const std::string& key) {
    const Json* v = take(key);
    if (!v) return std::nullopt;
    if (!v->is_array()) throw ConfigError(where(key) + "expected an array of integers");
    std::vector<long long> out;
    for (std::size_t i = 0; i < v->size(); ++i) {
      if (!(*v)[i].is_number_integer()) {
        throw ConfigError(where(key + "[" + std::to_string(i) + "]") + "expected an integer");
      }
      out.push_back((*v)[i].get<long long>());
    }
    return out;
  }

  std::optional<Block> child(const std::string& key) {
    const Json* v = take(key);
    if (!v) return std::nullopt;
    return Block(*v, qualified(key));
  }

  void finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (!used_.count(key)) throw ConfigError("unknown configuration key '" + qualified(key) + "'");
    }
  }

  std::string qualified(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }
  std::string where(const std::string& key) const { return qualified(key) + ": "; }
  std::string where() const { return (path_.empty() ? std::string("document") : path_) + ": "; }

 private:
  const Json* take(const std::string& key) {
    used_.insert(key);
    const auto it = j_.find(key);
    if (it == j_.end() || it->is_null()) return nullptr;
    return &*it;
  }

  const Json& j_;
  std::string path_;
  std::set<std::string> used_;
};

int to_int(long long v, const std::string& key) {
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw ConfigError(key + ": value out of range");
  }
  return static_cast<int>(v);
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

TrapArray parse_array(Block b) {
  TrapArray a;
  if (auto v = b.integer("rows")) a.rows = to_int(*v, b.qualified("rows"));
  if (auto v = b.integer("cols")) a.cols = to_int(*v, b.qualified("cols"));
  if (auto v = b.number("spacing_um")) a.spacing_m = *v * 1e-6;
  if (auto v = b.number("trap_freq_mhz")) a.omega_t = constants::two_pi * *v * 1e6;
  const bool has_species = b.has("ion_species");
  const bool has_mass = b.has("mass_amu");
  require(!(has_species && has_mass),
          b.where("mass_amu") + "give either ion_species or an explicit mass, not both");
  if (auto v = b.string("ion_species")) {
    const auto species = constants::ion_species(*v);
    a.mass_kg = species.mass_kg;
    a.charge_c = species.charge_c;
  }
  if (auto v = b.number("mass_amu")) a.mass_kg = *v * constants::atomic_mass_unit;
  if (auto v = b.number("charge_e")) a.charge_c = *v * constants::elementary_charge;
  require(!(b.has("laser_wavelength_nm") && b.has("lamb_dicke_eta")),
          b.where("lamb_dicke_eta") + "give either laser_wavelength_nm or lamb_dicke_eta, not both");
  if (auto v = b.number("laser_wavelength_nm")) {
    require(*v > 0.0, b.where("laser_wavelength_nm") + "must be positive");
    a.wavevector_k = constants::two_pi / (*v * 1e-9);
  }
  std::optional<double> eta = b.number("lamb_dicke_eta");
  b.finish();
  try {
    a.validate();
    if (eta) {
      require(*eta > 0.0, "array.lamb_dicke_eta: must be positive");
      a.wavevector_k = wavevector_for_lamb_dicke(a, *eta);
    }
  } catch (const DomainError& e) {
    throw ConfigError(std::string("array: ") + e.what());
  }
  return a;
}

GateBlock parse_gate(Block b) {
  GateBlock g;
  if (auto v = b.integer("ion_mu")) g.ion_mu = to_int(*v, b.qualified("ion_mu"));
  if (auto v = b.integer("ion_nu")) g.ion_nu = to_int(*v, b.qualified("ion_nu"));
  if (auto v = b.numbers("direction")) {
    require(v->size() == 2, b.where("direction") + "expected two components");
    g.direction = Vec2{(*v)[0], (*v)[1]};
  }
  require(!(b.has("nbar") && b.has("nbar_per_mode")),
          b.where("nbar_per_mode") + "give either nbar or nbar_per_mode, not both");
  if (auto v = b.number("nbar")) g.nbar = {*v};
  if (auto v = b.numbers("nbar_per_mode")) g.nbar = *v;
  b.finish();
  return g;
}

OptimizerConfig parse_optimize(Block b) {
  OptimizerConfig c;
  if (auto v = b.number("gate_time_tau0")) c.gate_time_tau0 = *v;
  if (auto v = b.integer("z_bound")) c.z_bound = to_int(*v, b.qualified("z_bound"));
  if (auto v = b.integer("group_count")) c.group_count = to_int(*v, b.qualified("group_count"));
  if (auto v = b.integer("restarts")) c.restarts = to_int(*v, b.qualified("restarts"));
  if (auto v = b.integer("rng_seed")) c.rng_seed = static_cast<std::uint64_t>(*v);
  if (auto v = b.number("target_infidelity")) c.target_infidelity = *v;
  b.finish();
  try {
    c.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(std::string("optimize: ") + e.what());
  }
  return c;
}

FHBlock parse_fh(Block b) {
  FHBlock f;
  if (auto v = b.integer("width")) f.lattice.width = to_int(*v, b.qualified("width"));
  if (auto v = b.integer("height")) f.lattice.height = to_int(*v, b.qualified("height"));
  if (auto v = b.number("hopping_w")) f.lattice.hopping_w = *v;
  if (auto v = b.number("onsite_u")) f.lattice.onsite_u = *v;
  if (auto v = b.string("normalization")) {
    if (*v == "physical") {
      f.normalization = fh::Normalization::physical;
    } else if (*v == "rescaled") {
      f.normalization = fh::Normalization::rescaled;
    } else {
      throw ConfigError(b.where("normalization") + "expected 'physical' or 'rescaled'");
    }
  }
  if (auto v = b.string("hub_policy")) {
    if (*v == "anchored") {
      f.hub_policy = fh::HubPolicy::anchored;
    } else if (*v == "cheapest") {
      f.hub_policy = fh::HubPolicy::cheapest;
    } else {
      throw ConfigError(b.where("hub_policy") + "expected 'anchored' or 'cheapest'");
    }
  }
  if (auto v = b.number("gate_time_us")) f.gate_time_us = *v;
  if (auto v = b.integer("trotter_steps")) f.trotter_steps = *v;
  if (auto v = b.integer("pulse_pairs_per_gate")) f.pulse_pairs_per_gate = *v;
  if (auto v = b.number("pulse_error")) f.pulse_error = *v;
  if (auto v = b.number("gate_fidelity")) f.gate_fidelity = *v;
  if (auto v = b.number("verify_time")) f.verify_time = *v;
  if (auto v = b.integers("verify_steps")) {
    f.verify_steps.clear();
    for (long long s : *v) f.verify_steps.push_back(to_int(s, b.qualified("verify_steps")));
  }
  b.finish();
  try {
    f.lattice.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(std::string("fh: ") + e.what());
  }
  require(f.gate_time_us > 0.0, "fh.gate_time_us: must be positive");
  require(f.trotter_steps >= 0, "fh.trotter_steps: must be non-negative");
  require(f.pulse_pairs_per_gate >= 0, "fh.pulse_pairs_per_gate: must be non-negative");
  require(f.pulse_error >= 0.0, "fh.pulse_error: must be non-negative");
  require(f.gate_fidelity >= 0.0 && f.gate_fidelity <= 1.0, "fh.gate_fidelity: must lie in [0, 1]");
  return f;
}

std::string csv_number(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

Json complex_pair(std::complex<double> c) { return Json::array({c.real(), c.imag()}); }

}  // namespace

RunConfig parse_config(const Json& doc) {
  Block root(doc, "");
  RunConfig cfg;
  if (auto b = root.child("array")) cfg.array = parse_array(std::move(*b));
  if (auto b = root.child("gate")) cfg.gate = parse_gate(std::move(*b));
  if (auto b = root.child("optimize")) cfg.optimize = parse_optimize(std::move(*b));
  if (auto b = root.child("sweep")) {
    if (auto v = b->numbers("gate_times_tau0")) {
      require(!v->empty(), "sweep.gate_times_tau0: needs at least one gate time");
      for (double t : *v) require(t > 0.0, "sweep.gate_times_tau0: gate times must be positive");
      cfg.sweep.gate_times_tau0 = *v;
    }
    b->finish();
  }
  if (auto b = root.child("scale")) {
    if (auto v = b->integers("sizes")) {
      cfg.scale.sizes.clear();
      for (long long n : *v) cfg.scale.sizes.push_back(to_int(n, "scale.sizes"));
    }
    if (auto v = b->integer("max_size")) cfg.scale.max_size = to_int(*v, "scale.max_size");
    b->finish();
  }
  if (auto b = root.child("fh")) cfg.fh = parse_fh(std::move(*b));
  if (auto b = root.child("output")) {
    if (auto v = b->string("dir")) cfg.output_dir = *v;
    b->finish();
  }
  root.finish();
  return cfg;
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

RunConfig load_config(const std::filesystem::path& path) { return parse_config(read_json(path)); }

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw Error("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error("cannot move output into '" + path.string() + "': " + ec.message());
  }
}

PulseSequence parse_sequence(const Json& doc) {
  if (doc.is_object() && doc.contains("sequence")) return parse_sequence(doc.at("sequence"));
  Block b(doc, "sequence");
  PulseSequence seq;
  auto z = b.integers("z");
  auto t = b.numbers("t_over_tau0");
  auto tg = b.number("T_G_over_tau0");
  b.finish();
  if (!z) throw ConfigError("sequence.z: missing");
  if (!t) throw ConfigError("sequence.t_over_tau0: missing");
  if (!tg) throw ConfigError("sequence.T_G_over_tau0: missing");
  for (long long v : *z) seq.kicks.push_back(to_int(v, "sequence.z"));
  seq.times_tau0 = *t;
  seq.gate_time_tau0 = *tg;
  try {
    seq.validate();
  } catch (const DomainError& e) {
    throw ConfigError(std::string("sequence: ") + e.what());
  }
  return seq;
}

Json to_json(const PulseSequence& seq) {
  return Json{{"z", seq.kicks}, {"t_over_tau0", seq.times_tau0}, {"T_G_over_tau0", seq.gate_time_tau0}};
}

Json to_json(const ModeSet& modes) {
  Json ratios = Json::array();
  Json squared = Json::array();
  Json vectors = Json::array();
  for (std::size_t m = 0; m < modes.mode_count(); ++m) {
    const double r = modes.frequency_ratio(m);
    ratios.push_back(r);
    squared.push_back(r * r);
    const auto row = modes.eigenvectors.row(m);
    vectors.push_back(std::vector<double>(row.begin(), row.end()));
  }
  return Json{{"omega_t_rad_per_s", modes.omega_t},
              {"xi", modes.xi},
              {"frequency_over_omega_t", ratios},
              {"frequency_sq_over_omega_t_sq", squared},
              {"lamb_dicke", modes.lamb_dicke},
              {"eigenvectors", vectors}};
}

std::string modes_csv(const ModeSet& modes) {
  std::ostringstream os;
  os << "mode,omega_over_omega_t,omega_sq_over_omega_t_sq,lamb_dicke";
  for (int i = 0; i < modes.ion_count(); ++i) os << ",x" << i << ",y" << i;
  os << '\n';
  for (std::size_t m = 0; m < modes.mode_count(); ++m) {
    const double r = modes.frequency_ratio(m);
    os << m << ',' << csv_number(r) << ',' << csv_number(r * r) << ','
       << csv_number(modes.lamb_dicke[m]);
    for (double v : modes.eigenvectors.row(m)) os << ',' << csv_number(v);
    os << '\n';
  }
  return os.str();
}

Json to_json(const GateMetrics& m) {
  Json alpha = Json::array();
  for (const auto& a : m.delta_alpha) alpha.push_back(complex_pair(a));
  return Json{{"infidelity", m.infidelity},
              {"infidelity_is_lower_bound_on_fidelity", true},
              {"delta_phi", m.delta_phi},
              {"phase_sum", m.phase_sum},
              {"phase_term", m.phase_term},
              {"motional_term", m.motional_term},
              {"delta_alpha", alpha},
              {"f_min_over_omega_t_2pi", m.f_min_trap_units},
              {"total_pulse_pairs", m.total_pulse_pairs},
              {"phase_convention", "8 * sum over pairs i<j"}};
}

Json to_json(const OptResult& r) {
  return Json{{"sequence", to_json(r.sequence)},
              {"metrics", to_json(r.metrics)},
              {"n_max", r.n_max},
              {"characteristic_nmax2_xi", r.characteristic},
              {"evaluations", r.evaluations},
              {"restarts_run", r.restarts_run},
              {"reached_target", r.reached_target}};
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "T_G_over_tau0,f_min_over_omega_t_2pi,infidelity,n_max,characteristic_nmax2_xi\n";
  for (const auto& r : rows) {
    os << csv_number(r.gate_time_tau0) << ',' << csv_number(r.f_min) << ','
       << csv_number(r.infidelity) << ',' << r.result.n_max << ','
       << csv_number(r.result.characteristic) << '\n';
  }
  return os.str();
}

std::string trajectory_csv(const std::vector<Trajectory>& branches) {
  std::ostringstream os;
  os << "mode,branch,t_over_tau0,re_alpha,im_alpha\n";
  for (const auto& tr : branches) {
    const char* name = tr.branch == Branch::same_spin ? "same" : "opposite";
    for (std::size_t m = 0; m < tr.alpha.size(); ++m) {
      for (std::size_t s = 0; s < tr.times_tau0.size(); ++s) {
        os << m << ',' << name << ',' << csv_number(tr.times_tau0[s]) << ','
           << csv_number(tr.alpha[m][s].real()) << ',' << csv_number(tr.alpha[m][s].imag())
           << '\n';
      }
    }
  }
  return os.str();
}

Json to_json(const std::vector<PositionRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"N", r.n},
                       {"position_label", r.label},
                       {"bond", {r.bond.r0, r.bond.c0, r.bond.r1, r.bond.c1}},
                       {"orbit_size", r.orbit_size},
                       {"infidelity", r.metrics.infidelity}});
  }
  return out;
}

std::string scaling_csv(const std::vector<PositionRow>& rows) {
  std::ostringstream os;
  os << "N,position_label,r0,c0,r1,c1,orbit_size,infidelity\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.label << ',' << r.bond.r0 << ',' << r.bond.c0 << ',' << r.bond.r1 << ','
       << r.bond.c1 << ',' << r.orbit_size << ',' << csv_number(r.metrics.infidelity) << '\n';
  }
  return os.str();
}

Json to_json(const fh::JWHamiltonian& h) {
  constexpr const char* kinds[] = {"onsite_zz", "onsite_z", "row_hop", "column_hop"};
  Json terms = Json::array();
  for (const auto& t : h.terms) {
    terms.push_back(Json{{"kind", kinds[static_cast<int>(t.kind)]},
                         {"coefficient", t.term.coefficient},
                         {"arity", t.term.arity()},
                         {"pauli", t.term.op.to_string()}});
  }
  return Json{{"qubits", h.qubits}, {"constant", h.constant}, {"terms", terms}};
}

Json to_json(const fh::TrotterCensus& c) {
  return Json{{"terms", {{"two_body", c.two_body_terms},
                         {"three_body", c.three_body_terms},
                         {"eleven_body", c.eleven_body_terms},
                         {"single_qubit", c.single_qubit_terms}}},
              {"gates", {{"two_body", c.two_body},
                         {"three_body", c.three_body},
                         {"eleven_body", c.eleven_body},
                         {"total", c.total},
                         {"diagonal_ops", c.diagonal_ops},
                         {"swaps", c.swaps}}}};
}

Json to_json(const fh::FeasibilityReport& r) {
  return Json{{"total_time_s", r.total_time_s},
              {"gate_fidelity", r.gate_fidelity},
              {"step_fidelity", r.step_fidelity},
              {"simulation_fidelity", r.simulation_fidelity}};
}

std::string verify_csv(const std::vector<fh::TrotterPoint>& points) {
  std::ostringstream os;
  os << "n,error\n";
  for (const auto& p : points) os << p.steps << ',' << csv_number(p.error) << '\n';
  return os.str();
}

fh::QubitEmbedding parse_embedding(const Json& doc, bool diagonal_links) {
  if (!doc.is_object()) throw ConfigError("embedding: expected an object of qubit -> [row, col]");
  std::vector<fh::Site> placement(doc.size());
  int rows = 0;
  int cols = 0;
  for (const auto& [key, value] : doc.items()) {
    std::size_t used = 0;
    long long q = -1;
    try {
      q = std::stoll(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || q < 0 || q >= static_cast<long long>(doc.size())) {
      throw ConfigError("embedding." + key + ": keys must be qubit indices 0.." +
                        std::to_string(doc.size() - 1));
    }
    if (!value.is_array() || value.size() != 2 || !value[0].is_number_integer() ||
        !value[1].is_number_integer()) {
      throw ConfigError("embedding." + key + ": expected [row, col]");
    }
    const fh::Site s{value[0].get<int>(), value[1].get<int>()};
    if (s.row < 0 || s.col < 0) throw ConfigError("embedding." + key + ": negative coordinate");
    placement[q] = s;
    rows = std::max(rows, s.row + 1);
    cols = std::max(cols, s.col + 1);
  }
  return fh::QubitEmbedding::grid(rows, cols, std::move(placement), diagonal_links);
}

Json to_json(const fh::QubitEmbedding& emb) {
  Json out = Json::object();
  for (int q = 0; q < emb.qubits(); ++q) {
    out[std::to_string(q)] = Json::array({emb.placement()[q].row, emb.placement()[q].col});
  }
  return out;
}

}  // namespace fastgate::io

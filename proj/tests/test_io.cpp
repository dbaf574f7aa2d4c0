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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fastgate/error.hpp"
#include "fastgate/fermi_hubbard/embedding.hpp"
#include "fastgate/io.hpp"
#include "support.hpp"

using namespace fastgate;
using io::Json;

namespace {

std::string config_error(const Json& doc) {
  try {
    io::parse_config(doc);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

std::string sequence_error(const Json& doc) {
  try {
    io::parse_sequence(doc);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

bool contains(const std::string& s, const std::string& part) {
  return s.find(part) != std::string::npos;
}

}  // namespace

TEST_CASE("empty config gives the documented defaults") {
  const auto cfg = io::parse_config(Json::object());
  const TrapArray defaults;
  CHECK(cfg.array.rows == 2);
  CHECK(cfg.array.spacing_m == defaults.spacing_m);
  CHECK(cfg.array.omega_t == defaults.omega_t);
  CHECK(cfg.array.mass_kg == defaults.mass_kg);
  CHECK(cfg.optimize.restarts == 64);
  CHECK(cfg.fh.lattice.width == 5);
  CHECK(cfg.output_dir == ".");
}

TEST_CASE("shipped default config parses") {
  const auto cfg = io::load_config(testing::data_path("default_config.json"));
  const TrapArray defaults;
  CHECK(cfg.array.spacing_m == doctest::Approx(defaults.spacing_m));
  CHECK(cfg.array.omega_t == doctest::Approx(defaults.omega_t));
  CHECK(cfg.array.wavevector_k == doctest::Approx(defaults.wavevector_k));
  CHECK(cfg.fh.gate_time_us == doctest::Approx(1.7));
  CHECK(cfg.fh.verify_steps == std::vector<int>{8, 16, 32, 64});
}

TEST_CASE("config values and units") {
  const Json doc = {
      {"array", {{"rows", 3}, {"cols", 4}, {"spacing_um", 50.0}, {"trap_freq_mhz", 2.0},
                 {"ion_species", "9Be+"}, {"lamb_dicke_eta", 0.1}}},
      {"gate", {{"ion_mu", 1}, {"ion_nu", 2}, {"nbar", 0.5}}},
      {"optimize", {{"gate_time_tau0", 1.5}, {"restarts", 3}, {"rng_seed", 99}}},
      {"fh", {{"hub_policy", "cheapest"}, {"normalization", "rescaled"}}},
      {"output", {{"dir", "results"}}}};
  const auto cfg = io::parse_config(doc);
  CHECK(cfg.array.rows == 3);
  CHECK(cfg.array.cols == 4);
  CHECK(cfg.array.spacing_m == doctest::Approx(50e-6));
  CHECK(cfg.array.omega_t == doctest::Approx(2.0 * std::numbers::pi * 2e6));
  CHECK(cfg.array.mass_kg == doctest::Approx(constants::ion_species("9Be+").mass_kg));
  CHECK(lamb_dicke(cfg.array, cfg.array.omega_t) == doctest::Approx(0.1));
  CHECK(cfg.gate.nbar == std::vector<double>{0.5});
  CHECK(cfg.optimize.rng_seed == 99);
  CHECK(cfg.fh.hub_policy == fh::HubPolicy::cheapest);
  CHECK(cfg.fh.normalization == fh::Normalization::rescaled);
  CHECK(cfg.output_dir == "results");
}

TEST_CASE("config errors name the offending key") {
  CHECK(contains(config_error({{"array", {{"spacing", 5}}}}), "array.spacing"));
  CHECK(contains(config_error({{"bogus", 1}}), "bogus"));
  CHECK(contains(config_error({{"array", {{"rows", "two"}}}}), "array.rows"));
  CHECK(contains(config_error({{"array", {{"rows", 0}}}}), "array"));
  CHECK(contains(config_error({{"array", {{"ion_species", "40Ca+"}, {"mass_amu", 40.0}}}}),
                 "mass_amu"));
  CHECK(contains(config_error({{"optimize", {{"group_count", 5}}}}), "optimize"));
  CHECK(contains(config_error({{"fh", {{"hub_policy", "random"}}}}), "fh.hub_policy"));
  CHECK(contains(config_error({{"sweep", {{"gate_times_tau0", {1.0, "x"}}}}}),
                 "sweep.gate_times_tau0[1]"));
  CHECK(contains(config_error({{"array", {{"ion_species", "Xx+"}}}}), "Xx+"));
  CHECK_THROWS_AS(io::load_config("/nonexistent/config.json"), ConfigError);
}

TEST_CASE("sequences round-trip and schema errors name the field") {
  const auto seq = testing::fast_sequence();
  const auto again = io::parse_sequence(io::to_json(seq));
  CHECK(again.kicks == seq.kicks);
  CHECK(again.times_tau0 == seq.times_tau0);
  CHECK(again.gate_time_tau0 == seq.gate_time_tau0);

  // A dumped and re-read artifact evaluates to identical metrics.
  const testing::Setup cell;
  const auto ctx = cell.context();
  const auto text = io::to_json(seq).dump();
  const auto reread = io::parse_sequence(Json::parse(text));
  CHECK(infidelity(reread, ctx).infidelity == infidelity(seq, ctx).infidelity);

  // Optimizer output carries the full sequence under "sequence".
  OptimizerConfig cfg;
  cfg.restarts = 1;
  const auto r = optimize_apg(ctx, cfg);
  const auto replay = io::parse_sequence(Json::parse(io::to_json(r).dump()));
  CHECK(infidelity(replay, ctx).infidelity == r.metrics.infidelity);

  Json bad = io::to_json(seq);
  bad.erase("z");
  CHECK(contains(sequence_error(bad), "sequence.z"));
  bad = io::to_json(seq);
  bad["t_over_tau0"][3] = "late";
  CHECK(contains(sequence_error(bad), "sequence.t_over_tau0[3]"));
  bad = io::to_json(seq);
  bad["extra"] = 1;
  CHECK(contains(sequence_error(bad), "sequence.extra"));
  bad = io::to_json(seq);
  bad["T_G_over_tau0"] = 0.5;
  CHECK(contains(sequence_error(bad), "sequence"));
}

TEST_CASE("embedding files") {
  const fh::FHLattice lat;
  const auto shipped = io::parse_embedding(io::read_json(testing::data_path("embedding_5x4.json")));
  const auto def = fh::default_embedding(lat);
  CHECK(shipped.rows() == def.rows());
  CHECK(shipped.cols() == def.cols());
  CHECK(shipped.placement() == def.placement());

  const auto again = io::parse_embedding(io::to_json(def));
  CHECK(again.placement() == def.placement());

  CHECK_THROWS_AS(io::parse_embedding(Json{{"0", {0, 0}}, {"2", {0, 1}}}), ConfigError);
  CHECK_THROWS_AS(io::parse_embedding(Json{{"0", {0, 0}}, {"1", {0, 0}}}), ConfigError);
  CHECK_THROWS_AS(io::parse_embedding(Json{{"0", {0}}}), ConfigError);
  CHECK_THROWS_AS(io::parse_embedding(Json::array()), ConfigError);
}

TEST_CASE("tables") {
  const testing::Setup cell;
  const auto modes_csv = io::modes_csv(*cell.modes);
  std::istringstream in(modes_csv);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 9);
  CHECK(modes_csv.rfind("mode,omega_over_omega_t,omega_sq_over_omega_t_sq", 0) == 0);
  const auto mj = io::to_json(*cell.modes);
  CHECK(mj["frequency_sq_over_omega_t_sq"].size() == 8);
  CHECK(mj["eigenvectors"].size() == 8);

  const auto ctx = cell.context();
  const auto seq = testing::fast_sequence();
  const auto same = trajectory(seq, ctx, Branch::same_spin, 5);
  const auto opp = trajectory(seq, ctx, Branch::opposite_spin, 5);
  const auto csv = io::trajectory_csv({same, opp});
  CHECK(csv.rfind("mode,branch,t_over_tau0,re_alpha,im_alpha\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 8 * 2 * 5);

  const std::vector<fh::TrotterPoint> pts{{8, 0.1}, {16, 0.05}};
  CHECK(io::verify_csv(pts).rfind("n,error\n8,", 0) == 0);
}

TEST_CASE("atomic writes") {
  const auto dir = std::filesystem::temp_directory_path() / "fastgate_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.json";
  io::write_file_atomic(path, "first\n");
  io::write_file_atomic(path, "second\n");
  std::ifstream in(path);
  std::string s;
  std::getline(in, s);
  CHECK(s == "second");
  int files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++files;
  CHECK(files == 1);
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(io::write_file_atomic("/nonexistent/dir/file", "x"), Error);
}

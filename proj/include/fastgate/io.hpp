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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fastgate/array_scaling.hpp"
#include "fastgate/fermi_hubbard/compiler.hpp"
#include "fastgate/fermi_hubbard/feasibility.hpp"
#include "fastgate/fermi_hubbard/trotter.hpp"
#include "fastgate/optimizer.hpp"

namespace fastgate::io {

using Json = nlohmann::ordered_json;

struct GateBlock {
  int ion_mu = 0;
  int ion_nu = 1;
  std::optional<Vec2> direction;
  std::vector<double> nbar;  // empty: ground state; one value: all modes
};

struct SweepBlock {
  std::vector<double> gate_times_tau0{0.65, 1.0, 1.25, 1.5, 1.85, 2.0};
};

struct ScaleBlock {
  std::vector<int> sizes{2, 3, 4, 5, 6, 7, 8};
  int max_size = 12;
};

struct FHBlock {
  fh::FHLattice lattice;
  fh::Normalization normalization = fh::Normalization::physical;
  fh::HubPolicy hub_policy = fh::HubPolicy::anchored;
  double gate_time_us = 1.7;
  long long trotter_steps = 10;
  long long pulse_pairs_per_gate = 0;
  double pulse_error = 0.0;
  double gate_fidelity = 1.0 - 1e-5;
  double verify_time = 1.0;
  std::vector<int> verify_steps{8, 16, 32, 64};
};

/// Everything a CLI run reads. Physical quantities carry their unit in the
/// key name (spacing_um, trap_freq_mhz, ...).
struct RunConfig {
  TrapArray array;
  GateBlock gate;
  OptimizerConfig optimize;
  SweepBlock sweep;
  ScaleBlock scale;
  FHBlock fh;
  std::string output_dir = ".";
};

/// Throws ConfigError naming the offending key path for unknown keys, wrong
/// types or invalid values.
RunConfig parse_config(const Json& doc);
RunConfig load_config(const std::filesystem::path& path);

Json read_json(const std::filesystem::path& path);
/// Writes to a temporary sibling and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// {"z": [...], "t_over_tau0": [...], "T_G_over_tau0": x}. A document with a
/// "sequence" member (an optimizer result) is unwrapped first.
PulseSequence parse_sequence(const Json& doc);
Json to_json(const PulseSequence& seq);

Json to_json(const ModeSet& modes);
std::string modes_csv(const ModeSet& modes);
Json to_json(const GateMetrics& metrics);
Json to_json(const OptResult& result);
std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string trajectory_csv(const std::vector<Trajectory>& branches);
Json to_json(const std::vector<PositionRow>& rows);
std::string scaling_csv(const std::vector<PositionRow>& rows);

Json to_json(const fh::JWHamiltonian& h);
Json to_json(const fh::TrotterCensus& census);
Json to_json(const fh::FeasibilityReport& report);
std::string verify_csv(const std::vector<fh::TrotterPoint>& points);

/// {"0": [row, col], ...}; keys must be 0..n-1. Grid size is the bounding box
/// unless rows/cols are given.
fh::QubitEmbedding parse_embedding(const Json& doc, bool diagonal_links = true);
Json to_json(const fh::QubitEmbedding& emb);

}  // namespace fastgate::io

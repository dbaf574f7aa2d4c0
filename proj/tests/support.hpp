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

// Helpers shared by the unit tests and the acceptance binary.
#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "fastgate/gate_engine.hpp"
#include "fastgate/io.hpp"

namespace fastgate::testing {

inline std::string data_path(const std::string& name) {
  return std::string(FASTGATE_DATA_DIR) + "/" + name;
}

inline PulseSequence load_sequence(const std::string& name) {
  return io::parse_sequence(io::read_json(data_path(name)));
}

// Sequences shipped in data/: 16 groups at T_G = 2 and 1.25 trap periods.
inline PulseSequence fast_sequence() { return load_sequence("apg16_tg2.0.json"); }
inline PulseSequence faster_sequence() { return load_sequence("apg16_tg1.25.json"); }

struct Setup {
  TrapArray array;
  EquilibriumConfig eq;
  std::shared_ptr<const ModeSet> modes;

  explicit Setup(const TrapArray& a = {})
      : array(a), eq(find_equilibrium(a)),
        modes(std::make_shared<const ModeSet>(solve_modes(a, eq))) {}

  GateContext context(int mu = 0, int nu = 1) const { return GateContext(modes, eq, mu, nu); }
};

inline PulseSequence random_antisymmetric(std::mt19937_64& rng, int half_groups, int bound,
                                          double gate_time) {
  std::uniform_int_distribution<int> z(-bound, bound);
  std::vector<int> half(half_groups);
  for (int& h : half) h = z(rng);
  return PulseSequence::antisymmetric(half, gate_time);
}

// Arbitrary (not anti-symmetric) sequence with sorted random times.
inline PulseSequence random_generic(std::mt19937_64& rng, int groups, int bound, double gate_time) {
  std::uniform_int_distribution<int> z(-bound, bound);
  std::uniform_real_distribution<double> t(-0.5 * gate_time, 0.5 * gate_time);
  PulseSequence seq;
  seq.gate_time_tau0 = gate_time;
  for (int k = 0; k < groups; ++k) {
    seq.kicks.push_back(z(rng));
    seq.times_tau0.push_back(t(rng));
  }
  std::sort(seq.times_tau0.begin(), seq.times_tau0.end());
  for (std::size_t k = 1; k < seq.times_tau0.size(); ++k) {
    if (seq.times_tau0[k] <= seq.times_tau0[k - 1]) {
      seq.times_tau0[k] = std::nextafter(seq.times_tau0[k - 1], 1.0);
    }
  }
  return seq;
}

}  // namespace fastgate::testing

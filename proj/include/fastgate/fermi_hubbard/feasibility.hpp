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

#include "fastgate/fermi_hubbard/compiler.hpp"

namespace fastgate::fh {

struct FeasibilityInput {
  long long gates_per_step = 0;
  double gate_time_s = 0.0;
  long long trotter_steps = 0;
  long long pulse_pairs_per_gate = 0;
  double pulse_error = 0.0;     // epsilon per pulse pair
  double gate_fidelity = 1.0;   // F0 of each gate before pulse errors
};

struct FeasibilityReport {
  double total_time_s;
  double gate_fidelity;        // |1 - N_p eps|^2 F0
  double step_fidelity;
  double simulation_fidelity;
};

/// Throws DomainError for negative counts, times or errors, or F0 outside
/// [0, 1].
FeasibilityReport feasibility_report(const FeasibilityInput& in);

}  // namespace fastgate::fh

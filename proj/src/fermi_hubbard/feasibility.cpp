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

#include "fastgate/fermi_hubbard/feasibility.hpp"

#include <cmath>

#include "fastgate/error.hpp"
#include "fastgate/gate_engine.hpp"

namespace fastgate::fh {

FeasibilityReport feasibility_report(const FeasibilityInput& in) {
  if (in.gates_per_step < 0 || in.trotter_steps < 0 || in.pulse_pairs_per_gate < 0) {
    throw DomainError("gate, step and pulse counts must be non-negative");
  }
  if (!(in.gate_time_s >= 0.0)) throw DomainError("gate time must be non-negative");
  const double f = effective_fidelity(in.pulse_pairs_per_gate, in.pulse_error, in.gate_fidelity);
  FeasibilityReport r;
  r.total_time_s = static_cast<double>(in.gates_per_step) * in.gate_time_s *
                   static_cast<double>(in.trotter_steps);
  r.gate_fidelity = f;
  r.step_fidelity = std::pow(f, static_cast<double>(in.gates_per_step));
  r.simulation_fidelity = std::pow(r.step_fidelity, static_cast<double>(in.trotter_steps));
  return r;
}

}  // namespace fastgate::fh

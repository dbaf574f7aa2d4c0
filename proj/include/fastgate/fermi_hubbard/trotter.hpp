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

#include <span>
#include <vector>

#include "fastgate/fermi_hubbard/jordan_wigner.hpp"

namespace fastgate::fh {

struct TrotterPoint {
  int steps;
  double error;  // spectral norm of the difference
};

/// Compares exp(-iHt) with the first-order product of per-term exponentials,
/// using dense matrices over the lattice's qubits. The constant offset is
/// dropped from both sides. Throws UnsupportedError above 10 qubits.
std::vector<TrotterPoint> trotter_verify_small(const FHLattice& lattice, double time,
                                               std::span<const int> steps);

}  // namespace fastgate::fh

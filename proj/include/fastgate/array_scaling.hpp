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

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fastgate/gate_engine.hpp"

namespace fastgate {

enum class PairKind { nearest, diagonal };

/// A donor sequence applied unchanged to one ion pair of a larger array.
struct EmbeddedGate {
  TrapArray array;
  int ion_a = 0;
  int ion_b = 1;
  PulseSequence sequence;
  std::string position_label;

  /// Nominal separation of the pair: d (nearest) or sqrt(2) d (diagonal).
  /// Throws DomainError for any other pair.
  PairKind kind() const;
};

/// Equilibrium and modes of one array, shareable across many gates.
struct SolvedArray {
  TrapArray array;
  EquilibriumConfig equilibrium;
  std::shared_ptr<const ModeSet> modes;
};

SolvedArray solve_array(const TrapArray& array);

/// Infidelity over every mode of the embedding array, with the laser along
/// the embedded pair.
GateMetrics scale_infidelity(const EmbeddedGate& gate);
GateMetrics scale_infidelity(const EmbeddedGate& gate, const SolvedArray& solved);

struct GridBond {
  int r0, c0, r1, c1;
};

/// Nearest-neighbour bonds of an n x n grid grouped into orbits of the
/// square's dihedral group. Each orbit lists its members; the first is the
/// canonical representative. Orbits are ordered by representative.
std::vector<std::vector<GridBond>> bond_orbits(int n);

/// "cell" for n = 2; otherwise "center" for the orbit nearest the middle,
/// "edge" for bonds along the boundary, "intermediate" for the rest.
std::string position_label(int n, const GridBond& bond);

struct ScalingOptions {
  int max_size = 12;
};

struct PositionRow {
  int n;
  std::string label;
  GridBond bond;  // representative
  int orbit_size;
  GateMetrics metrics;
};

/// Every symmetry-inequivalent nearest-neighbour position for each n, using
/// `base` for the trap parameters. Throws ConfigError for n < 2 or above the
/// size ceiling.
std::vector<PositionRow> position_sweep(std::span<const int> sizes, const PulseSequence& donor,
                                        const TrapArray& base = {},
                                        const ScalingOptions& options = {});

}  // namespace fastgate

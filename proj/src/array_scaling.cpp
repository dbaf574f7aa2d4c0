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

#include "fastgate/array_scaling.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <tuple>

#include "fastgate/error.hpp"

namespace fastgate {

namespace {

using Cell = std::array<int, 2>;  // row, col
using Key = std::array<int, 4>;   // sorted cell pair

Cell transform(int n, int op, Cell p) {
  int r = p[0];
  int c = p[1];
  if (op & 4) std::swap(r, c);
  if (op & 1) r = n - 1 - r;
  if (op & 2) c = n - 1 - c;
  return {r, c};
}

Key key_of(Cell a, Cell b) {
  if (b < a) std::swap(a, b);
  return {a[0], a[1], b[0], b[1]};
}

Key canonical(int n, Cell a, Cell b) {
  Key best = key_of(a, b);
  for (int op = 1; op < 8; ++op) best = std::min(best, key_of(transform(n, op, a), transform(n, op, b)));
  return best;
}

double midpoint_distance(int n, const GridBond& b) {
  const double mid = 0.5 * (n - 1);
  const double r = 0.5 * (b.r0 + b.r1) - mid;
  const double c = 0.5 * (b.c0 + b.c1) - mid;
  return std::hypot(r, c);
}

}  // namespace

PairKind EmbeddedGate::kind() const {
  array.validate();
  const int n = array.ion_count();
  if (ion_a < 0 || ion_b < 0 || ion_a >= n || ion_b >= n || ion_a == ion_b) {
    throw DomainError("embedded pair indices out of range");
  }
  const int dr = std::abs(ion_a / array.cols - ion_b / array.cols);
  const int dc = std::abs(ion_a % array.cols - ion_b % array.cols);
  if (dr + dc == 1) return PairKind::nearest;
  if (dr == 1 && dc == 1) return PairKind::diagonal;
  throw DomainError("embedded pair must be nearest-neighbour or diagonal");
}

SolvedArray solve_array(const TrapArray& array) {
  SolvedArray out;
  out.array = array;
  out.equilibrium = find_equilibrium(array);
  out.modes = std::make_shared<const ModeSet>(solve_modes(array, out.equilibrium));
  return out;
}

GateMetrics scale_infidelity(const EmbeddedGate& gate, const SolvedArray& solved) {
  gate.kind();
  const GateContext ctx(solved.modes, solved.equilibrium, gate.ion_a, gate.ion_b);
  return infidelity(gate.sequence, ctx);
}

GateMetrics scale_infidelity(const EmbeddedGate& gate) {
  gate.kind();
  return scale_infidelity(gate, solve_array(gate.array));
}

std::vector<std::vector<GridBond>> bond_orbits(int n) {
  if (n < 1) throw DomainError("grid size must be positive");
  std::map<Key, std::vector<GridBond>> orbits;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (c + 1 < n) orbits[canonical(n, {r, c}, {r, c + 1})].push_back({r, c, r, c + 1});
      if (r + 1 < n) orbits[canonical(n, {r, c}, {r + 1, c})].push_back({r, c, r + 1, c});
    }
  }
  std::vector<std::vector<GridBond>> out;
  out.reserve(orbits.size());
  for (auto& [key, members] : orbits) {
    const GridBond rep{key[0], key[1], key[2], key[3]};
    std::stable_partition(members.begin(), members.end(), [&](const GridBond& b) {
      return std::tie(b.r0, b.c0, b.r1, b.c1) == std::tie(rep.r0, rep.c0, rep.r1, rep.c1);
    });
    out.push_back(std::move(members));
  }
  return out;
}

std::string position_label(int n, const GridBond& bond) {
  if (n == 2) return "cell";
  double nearest = 1e300;
  for (const auto& orbit : bond_orbits(n)) nearest = std::min(nearest, midpoint_distance(n, orbit[0]));
  if (midpoint_distance(n, bond) <= nearest + 1e-12) return "center";
  auto on_boundary = [n](int r, int c) { return r == 0 || c == 0 || r == n - 1 || c == n - 1; };
  const bool along_edge = on_boundary(bond.r0, bond.c0) && on_boundary(bond.r1, bond.c1) &&
                          (bond.r0 == bond.r1 ? (bond.r0 == 0 || bond.r0 == n - 1)
                                              : (bond.c0 == 0 || bond.c0 == n - 1));
  return along_edge ? "edge" : "intermediate";
}

std::vector<PositionRow> position_sweep(std::span<const int> sizes, const PulseSequence& donor,
                                        const TrapArray& base, const ScalingOptions& options) {
  if (!donor.is_antisymmetric()) throw DomainError("donor sequence must be anti-symmetric");
  donor.validate();
  std::vector<PositionRow> rows;
  for (int n : sizes) {
    if (n < 2) throw ConfigError("array size must be at least 2, got " + std::to_string(n));
    if (n > options.max_size) {
      throw ConfigError("array size " + std::to_string(n) + " exceeds the ceiling " +
                        std::to_string(options.max_size));
    }
    const SolvedArray solved = solve_array(base.resized(n, n));
    for (const auto& orbit : bond_orbits(n)) {
      const GridBond& b = orbit[0];
      EmbeddedGate gate{solved.array, b.r0 * n + b.c0, b.r1 * n + b.c1, donor, position_label(n, b)};
      rows.push_back({n, gate.position_label, b, static_cast<int>(orbit.size()),
                      scale_infidelity(gate, solved)});
    }
  }
  return rows;
}

}  // namespace fastgate

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

#include <vector>

#include "fastgate/fermi_hubbard/jordan_wigner.hpp"

namespace fastgate::fh {

enum class Geometry { grid, chain };

struct Site {
  int row = 0;
  int col = 0;
  friend bool operator==(const Site&, const Site&) = default;
};

/// Placement of logical qubits on the ions of a grid or chain. Grid sites
/// not holding a logical qubit carry spectator ions, numbered after the
/// logical qubits in site order.
class QubitEmbedding {
 public:
  /// Qubit q at chain position q.
  static QubitEmbedding chain(int qubits);
  /// Throws ConfigError unless the placement is a bijection into the grid.
  static QubitEmbedding grid(int rows, int cols, std::vector<Site> placement,
                             bool diagonal_links = true);

  Geometry geometry() const { return geometry_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool diagonal_links() const { return diagonal_links_; }
  int qubits() const { return static_cast<int>(placement_.size()); }
  int ions() const { return rows_ * cols_; }
  const std::vector<Site>& placement() const { return placement_; }

  int site_index(Site s) const { return s.row * cols_ + s.col; }
  Site site(int index) const { return {index / cols_, index % cols_}; }
  /// Ion id (logical qubit or spectator) initially at each site index.
  std::vector<int> initial_occupants() const;
  /// Site index of every ion id, inverse of initial_occupants.
  std::vector<int> initial_sites() const;

  /// Sites one step apart: orthogonal neighbours, plus diagonal ones when
  /// diagonal links are enabled on a grid.
  bool adjacent(int site_a, int site_b) const;
  bool diagonal(int site_a, int site_b) const;
  std::vector<int> neighbours(int site) const;

 private:
  Geometry geometry_ = Geometry::chain;
  int rows_ = 1;
  int cols_ = 0;
  bool diagonal_links_ = false;
  std::vector<Site> placement_;
};

/// Row-major placement on a grid with one lattice row of modes per grid row.
QubitEmbedding row_major_embedding(const FHLattice& lattice);

/// Each lattice row's modes on a pair of grid rows, snaking back and forth.
QubitEmbedding snake_embedding(const FHLattice& lattice);

/// The shipped default: the lower-cost of the row-major and snake layouts.
QubitEmbedding default_embedding(const FHLattice& lattice);

/// Pairwise-exchange descent on the per-step GP-gate total, starting from
/// `start`. Deterministic; stops after max_passes or when no exchange helps.
QubitEmbedding search_embedding(const JWHamiltonian& hamiltonian, QubitEmbedding start,
                                int max_passes = 4);

}  // namespace fastgate::fh

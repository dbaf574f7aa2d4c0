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

#include "fastgate/fermi_hubbard/embedding.hpp"

#include <algorithm>
#include <string>

#include "fastgate/error.hpp"
#include "fastgate/fermi_hubbard/compiler.hpp"

namespace fastgate::fh {

QubitEmbedding QubitEmbedding::chain(int qubits) {
  if (qubits < 1) throw ConfigError("chain needs at least one qubit");
  QubitEmbedding e;
  e.geometry_ = Geometry::chain;
  e.rows_ = 1;
  e.cols_ = qubits;
  e.diagonal_links_ = false;
  e.placement_.resize(qubits);
  for (int q = 0; q < qubits; ++q) e.placement_[q] = {0, q};
  return e;
}

QubitEmbedding QubitEmbedding::grid(int rows, int cols, std::vector<Site> placement,
                                    bool diagonal_links) {
  if (rows < 1 || cols < 1) throw ConfigError("embedding grid dimensions must be positive");
  if (placement.empty()) throw ConfigError("embedding places no qubits");
  if (static_cast<long long>(placement.size()) > static_cast<long long>(rows) * cols) {
    throw ConfigError("embedding has more qubits than grid sites");
  }
  std::vector<int> used(static_cast<std::size_t>(rows) * cols, -1);
  for (std::size_t q = 0; q < placement.size(); ++q) {
    const Site s = placement[q];
    if (s.row < 0 || s.row >= rows || s.col < 0 || s.col >= cols) {
      throw ConfigError("qubit " + std::to_string(q) + " placed outside the grid");
    }
    int& slot = used[s.row * cols + s.col];
    if (slot >= 0) {
      throw ConfigError("qubits " + std::to_string(slot) + " and " + std::to_string(q) +
                        " share site [" + std::to_string(s.row) + ", " + std::to_string(s.col) +
                        "]");
    }
    slot = static_cast<int>(q);
  }
  QubitEmbedding e;
  e.geometry_ = Geometry::grid;
  e.rows_ = rows;
  e.cols_ = cols;
  e.diagonal_links_ = diagonal_links;
  e.placement_ = std::move(placement);
  return e;
}

std::vector<int> QubitEmbedding::initial_occupants() const {
  std::vector<int> occ(ions(), -1);
  for (int q = 0; q < qubits(); ++q) occ[site_index(placement_[q])] = q;
  int spectator = qubits();
  for (int& o : occ) {
    if (o < 0) o = spectator++;
  }
  return occ;
}

std::vector<int> QubitEmbedding::initial_sites() const {
  const std::vector<int> occ = initial_occupants();
  std::vector<int> sites(occ.size());
  for (std::size_t s = 0; s < occ.size(); ++s) sites[occ[s]] = static_cast<int>(s);
  return sites;
}

bool QubitEmbedding::adjacent(int site_a, int site_b) const {
  const Site a = site(site_a);
  const Site b = site(site_b);
  const int dr = std::abs(a.row - b.row);
  const int dc = std::abs(a.col - b.col);
  if (dr + dc == 1) return true;
  return diagonal_links_ && dr == 1 && dc == 1;
}

bool QubitEmbedding::diagonal(int site_a, int site_b) const {
  const Site a = site(site_a);
  const Site b = site(site_b);
  return std::abs(a.row - b.row) == 1 && std::abs(a.col - b.col) == 1;
}

std::vector<int> QubitEmbedding::neighbours(int s) const {
  std::vector<int> out;
  const Site c = site(s);
  for (int dr = -1; dr <= 1; ++dr) {
    for (int dc = -1; dc <= 1; ++dc) {
      if (dr == 0 && dc == 0) continue;
      const int r = c.row + dr;
      const int col = c.col + dc;
      if (r < 0 || r >= rows_ || col < 0 || col >= cols_) continue;
      const int idx = r * cols_ + col;
      if (adjacent(s, idx)) out.push_back(idx);
    }
  }
  return out;
}

QubitEmbedding row_major_embedding(const FHLattice& lattice) {
  lattice.validate();
  const int per_row = 2 * lattice.width;
  std::vector<Site> placement(lattice.qubits());
  for (int q = 0; q < lattice.qubits(); ++q) placement[q] = {q / per_row, q % per_row};
  return QubitEmbedding::grid(lattice.height, per_row, std::move(placement));
}

QubitEmbedding snake_embedding(const FHLattice& lattice) {
  lattice.validate();
  const int per_row = 2 * lattice.width;
  const int cols = lattice.width;
  std::vector<Site> placement(lattice.qubits());
  for (int q = 0; q < lattice.qubits(); ++q) {
    const int strip = q / per_row;
    const int k = q % per_row;
    placement[q] = k < cols ? Site{2 * strip, k} : Site{2 * strip + 1, per_row - 1 - k};
  }
  return QubitEmbedding::grid(2 * lattice.height, cols, std::move(placement));
}

QubitEmbedding default_embedding(const FHLattice& lattice) {
  const JWHamiltonian h = jw_transform(lattice);
  QubitEmbedding a = row_major_embedding(lattice);
  QubitEmbedding b = snake_embedding(lattice);
  const TrotterCensus ca = count_trotter_step(h, a);
  const TrotterCensus cb = count_trotter_step(h, b);
  if (cb.total < ca.total || (cb.total == ca.total && cb.diagonal_ops < ca.diagonal_ops)) return b;
  return a;
}

QubitEmbedding search_embedding(const JWHamiltonian& hamiltonian, QubitEmbedding start,
                                int max_passes) {
  if (start.geometry() != Geometry::grid) return start;
  auto cost = [&](const QubitEmbedding& e) {
    const TrotterCensus c = count_trotter_step(hamiltonian, e);
    return std::pair{c.total, c.diagonal_ops};
  };
  QubitEmbedding best = start;
  auto best_cost = cost(best);
  const int n = best.qubits();
  for (int pass = 0; pass < max_passes; ++pass) {
    bool improved = false;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        std::vector<Site> p = best.placement();
        std::swap(p[i], p[j]);
        QubitEmbedding trial = QubitEmbedding::grid(best.rows(), best.cols(), std::move(p),
                                                    best.diagonal_links());
        const auto c = cost(trial);
        if (c < best_cost) {
          best = std::move(trial);
          best_cost = c;
          improved = true;
        }
      }
    }
    if (!improved) break;
  }
  return best;
}

}  // namespace fastgate::fh

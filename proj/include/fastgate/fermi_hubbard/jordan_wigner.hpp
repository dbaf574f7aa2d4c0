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

#include "fastgate/fermi_hubbard/pauli.hpp"

namespace fastgate::fh {

/// Rectangular Fermi-Hubbard lattice. Sites are numbered row-major with
/// `width` sites per row; site s carries modes 2s (spin down) and 2s+1
/// (spin up), one qubit each.
struct FHLattice {
  int width = 5;
  int height = 4;
  double hopping_w = 1.0;
  double onsite_u = 1.0;

  int sites() const { return width * height; }
  int qubits() const { return 2 * sites(); }
  /// Throws ConfigError for non-positive dimensions or more than 64 qubits.
  void validate() const;
};

enum class Spin { down, up };

int mode_index(int site, Spin spin);

/// Jordan-Wigner images of the fermionic operators, with an occupied mode
/// in |1> (Z = -1): b_j = Z_0 ... Z_{j-1} (X_j + i Y_j) / 2, so that
/// n_j = (1 - Z_j) / 2.
PauliSum annihilation(int mode);
PauliSum creation(int mode);

enum class Normalization {
  physical,  // H = w sum (b+_i b_j + h.c.) + U sum n_up n_down, as written
  rescaled,  // hopping doubled and on-site quadrupled, so prefactors are +-w and U
};

enum class TermKind { onsite_zz, onsite_z, row_hop, column_hop };

struct HamiltonianTerm {
  PauliTerm term;
  TermKind kind;
};

struct JWHamiltonian {
  int qubits = 0;
  double constant = 0.0;
  /// Ordered: on-site ZZ, single Z, row hopping, column hopping.
  std::vector<HamiltonianTerm> terms;
};

JWHamiltonian jw_transform(const FHLattice& lattice,
                           Normalization norm = Normalization::physical);

/// Same Hamiltonian assembled as one PauliSum straight from the fermionic
/// operators (no term bookkeeping); used to cross-check jw_transform.
PauliSum fermionic_hamiltonian(const FHLattice& lattice);

}  // namespace fastgate::fh

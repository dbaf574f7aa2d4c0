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

#include "fastgate/fermi_hubbard/jordan_wigner.hpp"

#include <cmath>
#include <string>

#include "fastgate/error.hpp"

namespace fastgate::fh {

namespace {

using cplx = std::complex<double>;

PauliSum number(int mode) { return creation(mode) * annihilation(mode); }

PauliSum hop(int from, int to) {
  const PauliSum forward = creation(to) * annihilation(from);
  return forward + forward.adjoint();
}

// Splits a Hermitian PauliSum into real-coefficient terms of one kind.
void append(JWHamiltonian& h, PauliSum sum, TermKind kind, double scale) {
  sum.prune();
  for (const auto& [op, c] : sum.terms()) {
    if (std::fabs(c.imag()) > 1e-12) throw DomainError("non-Hermitian term " + op.to_string());
    if (op.is_identity()) {
      h.constant += scale * c.real();
      continue;
    }
    h.terms.push_back({{scale * c.real(), op}, kind});
  }
}

}  // namespace

void FHLattice::validate() const {
  if (width < 1 || height < 1) throw ConfigError("lattice dimensions must be positive");
  if (qubits() > PauliString::kMaxQubits) {
    throw ConfigError("lattice needs " + std::to_string(qubits()) + " qubits; at most 64 supported");
  }
}

int mode_index(int site, Spin spin) { return 2 * site + (spin == Spin::up ? 1 : 0); }

PauliSum annihilation(int mode) {
  PauliString tail;
  for (int k = 0; k < mode; ++k) tail.set(k, Pauli::Z);
  PauliString x = tail;
  PauliString y = tail;
  x.set(mode, Pauli::X);
  y.set(mode, Pauli::Y);
  return PauliSum(x, 0.5) + PauliSum(y, cplx(0.0, 0.5));
}

PauliSum creation(int mode) { return annihilation(mode).adjoint(); }

JWHamiltonian jw_transform(const FHLattice& lattice, Normalization norm) {
  lattice.validate();
  const double hop_scale = norm == Normalization::rescaled ? 2.0 : 1.0;
  const double site_scale = norm == Normalization::rescaled ? 4.0 : 1.0;

  JWHamiltonian h;
  h.qubits = lattice.qubits();

  // n_up n_down = (1 - Z_up)(1 - Z_down) / 4 splits into ZZ, Z and constant.
  PauliSum zz, z;
  for (int s = 0; s < lattice.sites(); ++s) {
    PauliSum onsite = number(mode_index(s, Spin::up)) * number(mode_index(s, Spin::down));
    onsite.prune();
    for (const auto& [op, c] : onsite.terms()) {
      const PauliSum part(op, c * lattice.onsite_u);
      if (op.arity() == 2) {
        zz += part;
      } else {
        z += part;
      }
    }
  }
  append(h, zz, TermKind::onsite_zz, site_scale);
  append(h, z, TermKind::onsite_z, site_scale);

  PauliSum rows, columns;
  for (int r = 0; r < lattice.height; ++r) {
    for (int c = 0; c < lattice.width; ++c) {
      const int s = r * lattice.width + c;
      for (Spin spin : {Spin::down, Spin::up}) {
        if (c + 1 < lattice.width) {
          rows += hop(mode_index(s, spin), mode_index(s + 1, spin)) * lattice.hopping_w;
        }
        if (r + 1 < lattice.height) {
          columns += hop(mode_index(s, spin), mode_index(s + lattice.width, spin)) *
                     lattice.hopping_w;
        }
      }
    }
  }
  append(h, rows, TermKind::row_hop, hop_scale);
  append(h, columns, TermKind::column_hop, hop_scale);
  return h;
}

PauliSum fermionic_hamiltonian(const FHLattice& lattice) {
  lattice.validate();
  PauliSum h;
  for (int r = 0; r < lattice.height; ++r) {
    for (int c = 0; c < lattice.width; ++c) {
      const int s = r * lattice.width + c;
      for (Spin spin : {Spin::down, Spin::up}) {
        if (c + 1 < lattice.width) {
          h += hop(mode_index(s, spin), mode_index(s + 1, spin)) * lattice.hopping_w;
        }
        if (r + 1 < lattice.height) {
          h += hop(mode_index(s, spin), mode_index(s + lattice.width, spin)) * lattice.hopping_w;
        }
      }
      h += number(mode_index(s, Spin::up)) * number(mode_index(s, Spin::down)) *
           lattice.onsite_u;
    }
  }
  h.prune();
  return h;
}

}  // namespace fastgate::fh

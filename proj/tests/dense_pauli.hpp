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

// Dense matrices for Pauli strings and sums, built from explicit Kronecker
// products so the symbolic algebra has an independent reference.
#pragma once

#include <Eigen/Dense>
#include <complex>

#include "fastgate/fermi_hubbard/pauli.hpp"

namespace fastgate::testing {

using DenseOp = Eigen::MatrixXcd;

inline DenseOp pauli_matrix(fh::Pauli p) {
  using c = std::complex<double>;
  DenseOp m(2, 2);
  switch (p) {
    case fh::Pauli::I: m << 1, 0, 0, 1; break;
    case fh::Pauli::X: m << 0, 1, 1, 0; break;
    case fh::Pauli::Y: m << 0, c(0, -1), c(0, 1), 0; break;
    case fh::Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline DenseOp kron(const DenseOp& a, const DenseOp& b) {
  DenseOp out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Qubit q is bit q of the basis index, so qubit 0 is the rightmost factor.
inline DenseOp dense(const fh::PauliString& op, int qubits) {
  DenseOp out = DenseOp::Identity(1, 1);
  for (int q = qubits - 1; q >= 0; --q) out = kron(out, pauli_matrix(op.at(q)));
  return out;
}

inline DenseOp dense(const fh::PauliSum& sum, int qubits) {
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  DenseOp out = DenseOp::Zero(dim, dim);
  for (const auto& [op, c] : sum.terms()) out += c * dense(op, qubits);
  return out;
}

}  // namespace fastgate::testing

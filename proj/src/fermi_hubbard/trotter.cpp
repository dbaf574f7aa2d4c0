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

#include "fastgate/fermi_hubbard/trotter.hpp"

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <complex>

#include "fastgate/error.hpp"

namespace fastgate::fh {

namespace {

using cplx = std::complex<double>;
using Dense = Eigen::MatrixXcd;

constexpr int kMaxQubits = 10;

// P|b> = phase(b) |b ^ x> with phase = i^{#Y} (-1)^{popcount(b & z)}.
cplx column_phase(const PauliString& p, std::uint64_t b) {
  constexpr cplx powers[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const int ys = std::popcount(p.x_mask() & p.z_mask());
  const int sign = std::popcount(b & p.z_mask()) & 1;
  return powers[(ys + 2 * sign) % 4];
}

Dense dense(const PauliString& p, int qubits) {
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  Dense m = Dense::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const auto ub = static_cast<std::uint64_t>(b);
    m(static_cast<Eigen::Index>(ub ^ p.x_mask()), b) = column_phase(p, ub);
  }
  return m;
}

// u <- u * exp(-i theta P)
void right_multiply(Dense& u, const PauliString& p, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Eigen::Index dim = u.cols();
  Dense out(u.rows(), dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const auto ub = static_cast<std::uint64_t>(b);
    const auto src = static_cast<Eigen::Index>(ub ^ p.x_mask());
    out.col(b) = c * u.col(b) + cplx(0.0, -s) * column_phase(p, ub) * u.col(src);
  }
  u = std::move(out);
}

Dense power(Dense base, int n) {
  Dense result = Dense::Identity(base.rows(), base.cols());
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

double spectral_norm(const Dense& a) {
  const Eigen::SelfAdjointEigenSolver<Dense> es(a.adjoint() * a, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

}  // namespace

std::vector<TrotterPoint> trotter_verify_small(const FHLattice& lattice, double time,
                                               std::span<const int> steps) {
  lattice.validate();
  if (lattice.qubits() > kMaxQubits) {
    throw UnsupportedError("dense Trotter check supports at most " + std::to_string(kMaxQubits) +
                           " qubits; lattice needs " + std::to_string(lattice.qubits()));
  }
  const JWHamiltonian h = jw_transform(lattice);
  const int n = h.qubits;
  const Eigen::Index dim = Eigen::Index{1} << n;

  Dense hm = Dense::Zero(dim, dim);
  for (const auto& t : h.terms) hm += t.term.coefficient * dense(t.term.op, n);
  const Eigen::SelfAdjointEigenSolver<Dense> es(hm);
  Eigen::VectorXcd phases(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    phases(k) = std::polar(1.0, -es.eigenvalues()(k) * time);
  }
  const Dense exact = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();

  std::vector<TrotterPoint> out;
  for (int s : steps) {
    if (s < 1) throw DomainError("Trotter step count must be positive");
    Dense step = Dense::Identity(dim, dim);
    for (const auto& t : h.terms) right_multiply(step, t.term.op, t.term.coefficient * time / s);
    out.push_back({s, spectral_norm(power(step, s) - exact)});
  }
  return out;
}

}  // namespace fastgate::fh

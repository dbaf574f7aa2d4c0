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

#include <cstddef>
#include <span>
#include <vector>

namespace fastgate {

/// Dense square matrix, row-major. Used for Hessians and mode bases, which
/// stay below a few hundred rows at desk scale.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  static Matrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * n_, n_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * n_, n_}; }

  double trace() const;
  double max_asymmetry() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  Matrix vectors;              // row i is the unit eigenvector of values[i]
  int sweeps = 0;
};

struct JacobiOptions {
  int max_sweeps = 100;
  /// Stop once the off-diagonal Frobenius norm falls below this fraction of
  /// the full Frobenius norm.
  double relative_tolerance = 1e-16;
  /// Eigenvalues closer than this (absolute) are treated as one degenerate
  /// subspace when fixing a canonical basis.
  double degeneracy_tolerance = 1e-11;
};

/// Cyclic Jacobi eigen-solver for a symmetric matrix. Eigenvectors are
/// canonicalised: inside every (near-)degenerate subspace the basis is
/// obtained by projecting the standard axes in order, so repeated solves of
/// the same problem give the same vectors.
EigenDecomposition jacobi_eigen(Matrix a, const JacobiOptions& options = {});

/// Solves A x = b for symmetric positive definite A by Cholesky
/// factorisation. Throws InstabilityError on a non-positive pivot.
std::vector<double> cholesky_solve(const Matrix& a, std::span<const double> b);

}  // namespace fastgate

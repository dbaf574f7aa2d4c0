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

#include "fastgate/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fastgate/error.hpp"
#include "fastgate/simd/kernels.hpp"

namespace fastgate {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double Matrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::max_asymmetry() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = r + 1; c < n_; ++c) {
      worst = std::max(worst, std::fabs((*this)(r, c) - (*this)(c, r)));
    }
  }
  return worst;
}

namespace {

double off_diagonal_norm2(const Matrix& a) {
  double acc = 0.0;
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = r + 1; c < a.size(); ++c) acc += a(r, c) * a(r, c);
  }
  return 2.0 * acc;
}

double frobenius_norm2(const Matrix& a) {
  double acc = 0.0;
  for (std::size_t r = 0; r < a.size(); ++r) {
    const auto row = a.row(r);
    acc += simd::dot(row, row);
  }
  return acc;
}

// Replaces each group of rows spanning a degenerate subspace by the
// Gram-Schmidt orthonormalisation of the projected standard axes.
void canonicalise_subspace(Matrix& vectors, std::size_t begin, std::size_t end) {
  const std::size_t n = vectors.size();
  const std::size_t g = end - begin;
  std::vector<std::vector<double>> chosen;
  chosen.reserve(g);
  std::vector<double> v(n);
  for (std::size_t axis = 0; axis < n && chosen.size() < g; ++axis) {
    std::fill(v.begin(), v.end(), 0.0);
    for (std::size_t i = begin; i < end; ++i) {
      const double w = vectors(i, axis);
      for (std::size_t k = 0; k < n; ++k) v[k] += w * vectors(i, k);
    }
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& u : chosen) {
        const double proj = simd::dot(u, v);
        for (std::size_t k = 0; k < n; ++k) v[k] -= proj * u[k];
      }
    }
    const double norm = std::sqrt(simd::dot(v, v));
    if (norm < 1e-3) continue;
    for (double& x : v) x /= norm;
    chosen.push_back(v);
  }
  if (chosen.size() != g) {
    throw ConvergenceError("degenerate eigen-subspace lost rank during canonicalisation",
                           static_cast<double>(g - chosen.size()));
  }
  for (std::size_t i = 0; i < g; ++i) {
    std::copy(chosen[i].begin(), chosen[i].end(), vectors.row(begin + i).begin());
  }
}

}  // namespace

EigenDecomposition jacobi_eigen(Matrix a, const JacobiOptions& options) {
  const std::size_t n = a.size();
  Matrix basis = Matrix::identity(n);  // row i accumulates eigenvector i
  const double total = frobenius_norm2(a);
  const double stop = options.relative_tolerance * options.relative_tolerance * total;

  int sweep = 0;
  for (; sweep < options.max_sweeps; ++sweep) {
    if (off_diagonal_norm2(a) <= stop) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        // Skip rotations that cannot change the diagonal in floating point.
        if (std::fabs(apq) < 1e-18 * (std::fabs(app) + std::fabs(aqq))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        simd::rotate(a.row(p), a.row(q), c, s);
        for (std::size_t r = 0; r < n; ++r) {
          a(r, p) = a(p, r);
          a(r, q) = a(q, r);
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;

        simd::rotate(basis.row(p), basis.row(q), c, s);
      }
    }
  }
  if (sweep == options.max_sweeps && off_diagonal_norm2(a) > stop) {
    throw ConvergenceError("Jacobi eigen-solver did not converge",
                           std::sqrt(off_diagonal_norm2(a)));
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  EigenDecomposition out;
  out.sweeps = sweep;
  out.values.resize(n);
  out.vectors = Matrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.values[i] = a(order[i], order[i]);
    const auto src = basis.row(order[i]);
    std::copy(src.begin(), src.end(), out.vectors.row(i).begin());
  }

  std::size_t begin = 0;
  while (begin < n) {
    std::size_t end = begin + 1;
    while (end < n && out.values[end] - out.values[end - 1] <= options.degeneracy_tolerance) ++end;
    canonicalise_subspace(out.vectors, begin, end);
    begin = end;
  }
  return out;
}

std::vector<double> cholesky_solve(const Matrix& a, std::span<const double> b) {
  const std::size_t n = a.size();
  Matrix l(n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > 0.0)) {
      throw InstabilityError("matrix is not positive definite (pivot " + std::to_string(j) + ")");
    }
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / ljj;
    }
  }
  std::vector<double> y(b.begin(), b.end());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k) y[i] -= l(i, k) * y[k];
    y[i] /= l(i, i);
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t k = i + 1; k < n; ++k) y[i] -= l(k, i) * y[k];
    y[i] /= l(i, i);
  }
  return y;
}

}  // namespace fastgate

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

#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "fastgate/error.hpp"
#include "fastgate/linalg.hpp"

using namespace fastgate;

namespace {

Matrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = g(rng);
  }
  return a;
}

Eigen::MatrixXd to_eigen(const Matrix& a) {
  Eigen::MatrixXd m(a.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = a(i, j);
  }
  return m;
}

}  // namespace

TEST_CASE("Jacobi spectrum matches an independent solver") {
  std::mt19937_64 rng(21);
  for (std::size_t n : {1u, 2u, 5u, 8u, 17u, 32u}) {
    const Matrix a = random_symmetric(rng, n);
    const auto eig = jacobi_eigen(a);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(to_eigen(a));
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(eig.values[i] == doctest::Approx(ref.eigenvalues()(i)).epsilon(1e-12));
      if (i > 0) CHECK(eig.values[i] >= eig.values[i - 1]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double dot = 0.0;
        for (std::size_t k = 0; k < n; ++k) dot += eig.vectors(i, k) * eig.vectors(j, k);
        CHECK(std::fabs(dot - (i == j ? 1.0 : 0.0)) < 1e-12);
      }
      // A v = lambda v
      for (std::size_t r = 0; r < n; ++r) {
        double av = 0.0;
        for (std::size_t k = 0; k < n; ++k) av += a(r, k) * eig.vectors(i, k);
        CHECK(std::fabs(av - eig.values[i] * eig.vectors(i, r)) < 1e-11);
      }
    }
  }
}

TEST_CASE("degenerate subspaces get a canonical basis") {
  // The 1-eigenspace of diag(2, 1, 1, 3) comes back as the axes themselves.
  Matrix d(4);
  d(0, 0) = 2;
  d(1, 1) = 1;
  d(2, 2) = 1;
  d(3, 3) = 3;
  const auto plain = jacobi_eigen(d);
  CHECK(plain.values[0] == doctest::Approx(1.0));
  CHECK(plain.values[1] == doctest::Approx(1.0));
  CHECK(std::fabs(plain.vectors(0, 1)) == doctest::Approx(1.0));
  CHECK(std::fabs(plain.vectors(1, 2)) == doctest::Approx(1.0));

  Matrix id = Matrix::identity(3);
  const auto e = jacobi_eigen(id);
  for (std::size_t i = 0; i < 3; ++i) CHECK(e.vectors(i, i) == doctest::Approx(1.0));

  // Same subspace presented through a different mixing gives the same basis.
  Matrix m(3);
  const double c = std::cos(0.3), s = std::sin(0.3);
  // Q diag(1,1,2) Q^T with Q a rotation in the (0,2) plane.
  m(0, 0) = c * c + 2 * s * s;
  m(2, 2) = s * s + 2 * c * c;
  m(0, 2) = m(2, 0) = -c * s;
  m(1, 1) = 1;
  const auto a = jacobi_eigen(m);
  const auto b = jacobi_eigen(m);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 3; ++k) CHECK(a.vectors(i, k) == b.vectors(i, k));
  }
  // Projecting the axes in order: axis 0 gives (c, 0, s), then axis 1.
  CHECK(a.vectors(0, 0) == doctest::Approx(c));
  CHECK(a.vectors(0, 2) == doctest::Approx(s));
  CHECK(a.vectors(1, 1) == doctest::Approx(1.0));
}

TEST_CASE("Cholesky solve") {
  std::mt19937_64 rng(22);
  for (std::size_t n : {1u, 3u, 10u, 24u}) {
    Matrix r = random_symmetric(rng, n);
    Matrix spd(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double acc = i == j ? static_cast<double>(n) : 0.0;
        for (std::size_t k = 0; k < n; ++k) acc += r(i, k) * r(j, k);
        spd(i, j) = acc;
      }
    }
    std::vector<double> b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = std::sin(1.0 + static_cast<double>(i));
    const auto x = cholesky_solve(spd, b);
    Eigen::VectorXd bx = Eigen::Map<const Eigen::VectorXd>(b.data(), static_cast<long>(n));
    const Eigen::VectorXd ref = to_eigen(spd).llt().solve(bx);
    for (std::size_t i = 0; i < n; ++i) CHECK(x[i] == doctest::Approx(ref(i)).epsilon(1e-11));
  }

  Matrix indefinite(2);
  indefinite(0, 0) = 1;
  indefinite(1, 1) = -1;
  std::vector<double> b{1, 1};
  CHECK_THROWS_AS(cholesky_solve(indefinite, b), InstabilityError);
}

TEST_CASE("matrix helpers") {
  Matrix a = Matrix::identity(3);
  CHECK(a.trace() == 3.0);
  CHECK(a.max_asymmetry() == 0.0);
  a(0, 1) = 0.5;
  CHECK(a.max_asymmetry() == doctest::Approx(0.5));
}

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

#include "fastgate/physics_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fastgate/error.hpp"

namespace fastgate {

Vec2 TrapArray::trap_center(int ion) const {
  const int r = ion / cols;
  const int c = ion % cols;
  return {c * spacing_m, r * spacing_m};
}

void TrapArray::validate() const {
  if (rows < 1 || cols < 1) throw DomainError("trap array needs rows >= 1 and cols >= 1");
  if (!(spacing_m > 0.0)) throw DomainError("trap spacing must be positive");
  if (!(omega_t > 0.0)) throw DomainError("trap frequency must be positive");
  if (!(mass_kg > 0.0)) throw DomainError("ion mass must be positive");
  if (!(charge_c > 0.0)) throw DomainError("ion charge must be positive");
  if (!(wavevector_k > 0.0)) throw DomainError("laser wavevector must be positive");
}

TrapArray TrapArray::resized(int new_rows, int new_cols) const {
  TrapArray out = *this;
  out.rows = new_rows;
  out.cols = new_cols;
  return out;
}

double coupling_strength(const TrapArray& array) {
  const double qq = array.charge_c * array.charge_c /
                    (4.0 * std::numbers::pi * constants::vacuum_permittivity);
  const double d = array.spacing_m;
  return qq / (array.mass_kg * array.omega_t * array.omega_t * d * d * d);
}

double lamb_dicke(const TrapArray& array, double omega) {
  return array.wavevector_k * std::sqrt(constants::hbar / (2.0 * array.mass_kg * omega));
}

double wavevector_for_lamb_dicke(const TrapArray& array, double eta) {
  return eta / std::sqrt(constants::hbar / (2.0 * array.mass_kg * array.omega_t));
}

namespace {

// Positions are handled in units of the trap spacing throughout.
std::vector<double> scaled_centers(const TrapArray& array) {
  std::vector<double> u(2 * array.ion_count());
  for (int i = 0; i < array.ion_count(); ++i) {
    u[2 * i] = i % array.cols;
    u[2 * i + 1] = i / array.cols;
  }
  return u;
}

std::vector<double> scaled_gradient(const std::vector<double>& u,
                                    const std::vector<double>& centers, double kappa) {
  const std::size_t n = u.size() / 2;
  std::vector<double> g(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) g[k] = u[k] - centers[k];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = u[2 * i] - u[2 * j];
      const double dy = u[2 * i + 1] - u[2 * j + 1];
      const double r2 = dx * dx + dy * dy;
      const double inv_r3 = 1.0 / (r2 * std::sqrt(r2));
      g[2 * i] -= kappa * dx * inv_r3;
      g[2 * i + 1] -= kappa * dy * inv_r3;
      g[2 * j] += kappa * dx * inv_r3;
      g[2 * j + 1] += kappa * dy * inv_r3;
    }
  }
  return g;
}

Matrix hessian_at(const std::vector<double>& u, double kappa) {
  const std::size_t n = u.size() / 2;
  Matrix h = Matrix::identity(u.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = u[2 * i] - u[2 * j];
      const double dy = u[2 * i + 1] - u[2 * j + 1];
      const double r2 = dx * dx + dy * dy;
      const double r = std::sqrt(r2);
      const double inv_r3 = kappa / (r2 * r);
      const double ux = dx / r;
      const double uy = dy / r;
      const double block[2][2] = {{(3 * ux * ux - 1) * inv_r3, 3 * ux * uy * inv_r3},
                                  {3 * ux * uy * inv_r3, (3 * uy * uy - 1) * inv_r3}};
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          h(2 * i + a, 2 * i + b) += block[a][b];
          h(2 * j + a, 2 * j + b) += block[a][b];
          h(2 * i + a, 2 * j + b) -= block[a][b];
          h(2 * j + a, 2 * i + b) -= block[a][b];
        }
      }
    }
  }
  return h;
}

double norm(const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

}  // namespace

EquilibriumConfig find_equilibrium(const TrapArray& array, const EquilibriumOptions& options) {
  array.validate();
  const double kappa = coupling_strength(array);
  const std::vector<double> centers = scaled_centers(array);
  std::vector<double> u = centers;
  std::vector<double> g = scaled_gradient(u, centers, kappa);
  double residual = norm(g);

  int iteration = 0;
  while (residual > options.tolerance) {
    if (iteration == options.max_iterations) {
      throw ConvergenceError("equilibrium solver did not converge after " +
                                 std::to_string(iteration) + " iterations (residual " +
                                 std::to_string(residual) + ")",
                             residual);
    }
    ++iteration;
    const Matrix h = hessian_at(u, kappa);
    std::vector<double> step = cholesky_solve(h, g);
    double scale = 1.0;
    std::vector<double> trial(u.size());
    for (int halvings = 0;; ++halvings) {
      for (std::size_t k = 0; k < u.size(); ++k) trial[k] = u[k] - scale * step[k];
      const auto trial_g = scaled_gradient(trial, centers, kappa);
      const double trial_residual = norm(trial_g);
      if (trial_residual < residual || halvings == 40) {
        u = trial;
        g = trial_g;
        residual = trial_residual;
        break;
      }
      scale *= 0.5;
    }
    for (std::size_t k = 0; k < u.size(); ++k) {
      if (std::fabs(u[k] - centers[k]) >= 0.5) {
        throw DomainError("ion " + std::to_string(k / 2) +
                          " left its trap cell; Coulomb coupling too strong for this spacing");
      }
    }
  }

  EquilibriumConfig eq;
  eq.iterations = iteration;
  const double force_scale = array.mass_kg * array.omega_t * array.omega_t * array.spacing_m;
  eq.residual_gradient_norm = residual * force_scale;
  eq.positions.resize(array.ion_count());
  for (int i = 0; i < array.ion_count(); ++i) {
    eq.positions[i] = {u[2 * i] * array.spacing_m, u[2 * i + 1] * array.spacing_m};
  }
  return eq;
}

Matrix scaled_hessian(const TrapArray& array, const EquilibriumConfig& eq) {
  std::vector<double> u(2 * eq.positions.size());
  for (std::size_t i = 0; i < eq.positions.size(); ++i) {
    u[2 * i] = eq.positions[i][0] / array.spacing_m;
    u[2 * i + 1] = eq.positions[i][1] / array.spacing_m;
  }
  return hessian_at(u, coupling_strength(array));
}

double ModeSet::projection(std::size_t m, int ion, const Vec2& direction) const {
  return direction[0] * eigenvectors(m, 2 * ion) + direction[1] * eigenvectors(m, 2 * ion + 1);
}

double xi_from_spectrum(const std::vector<double>& squared_ratios) {
  std::vector<double> offsets;
  offsets.reserve(squared_ratios.size());
  for (double r : squared_ratios) offsets.push_back(r - 1.0);
  std::sort(offsets.begin(), offsets.end());
  const double spread = offsets.back() - offsets.front();
  const double tol = 1e-6 * spread + 1e-15;
  double xi = 0.0;
  for (std::size_t i = 0; i + 1 < offsets.size(); ++i) {
    if (offsets[i + 1] - offsets[i] <= tol) {
      const double mean = 0.5 * (offsets[i] + offsets[i + 1]);
      if (std::fabs(mean) > std::fabs(xi)) xi = mean;
    }
  }
  return xi;
}

ModeSet solve_modes(const TrapArray& array, const EquilibriumConfig& eq) {
  array.validate();
  if (static_cast<int>(eq.positions.size()) != array.ion_count()) {
    throw DomainError("equilibrium configuration does not match the array size");
  }
  EigenDecomposition eig = jacobi_eigen(scaled_hessian(array, eq));
  if (!(eig.values.front() > 0.0)) {
    throw InstabilityError("Hessian has a non-positive eigenvalue (" +
                           std::to_string(eig.values.front()) + "); configuration is unstable");
  }

  ModeSet modes;
  modes.omega_t = array.omega_t;
  modes.frequencies.reserve(eig.values.size());
  modes.lamb_dicke.reserve(eig.values.size());
  for (double lambda : eig.values) {
    const double omega = array.omega_t * std::sqrt(lambda);
    modes.frequencies.push_back(omega);
    modes.lamb_dicke.push_back(lamb_dicke(array, omega));
  }
  modes.eigenvectors = std::move(eig.vectors);

  if (array.rows == 2 && array.cols == 2) {
    modes.xi = xi_from_spectrum(eig.values);
  } else {
    modes.xi = solve_modes(array.resized(2, 2)).xi;
  }
  return modes;
}

ModeSet solve_modes(const TrapArray& array) {
  return solve_modes(array, find_equilibrium(array));
}

double xi_closed_form(const TrapArray& array) {
  if (array.rows != 2 || array.cols != 2) {
    throw UnsupportedError("closed-form xi is only available for the 2x2 cell");
  }
  array.validate();
  const double s2 = std::numbers::sqrt2;
  const double lambda = 27.0 * coupling_strength(array);
  if (lambda == 0.0) return 0.0;
  const double radicand = -3528.0 * s2 * lambda * lambda + 5537.0 * lambda * lambda -
                          11228.0 * s2 * lambda + 16688.0 * lambda;
  const double delta =
      std::sqrt(radicand) - 28.0 * s2 * lambda + 63.0 * lambda - 50.0 * s2 + 88.0;
  const double cbrt_delta = std::cbrt(delta);
  const double inner =
      (cbrt_delta + (18.0 - 8.0 * s2) / cbrt_delta + 2.0 * (s2 - 4.0)) /
          (3.0 * s2 * (2.0 * s2 - 1.0)) +
      1.0;
  return 2.0 * lambda / 27.0 / (inner * inner * inner);
}

std::array<double, 8> analytic_modes_2x2(double xi) {
  const double s2 = std::numbers::sqrt2;
  return {1.0,
          1.0,
          1.0 + xi,
          1.0 + xi,
          1.0 - xi - xi / (2.0 * s2),
          1.0 + 2.0 * xi - xi / (2.0 * s2),
          1.0 - xi + xi / s2,
          1.0 + 2.0 * xi + xi / s2};
}

}  // namespace fastgate

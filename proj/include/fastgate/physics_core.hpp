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

#include <array>
#include <cstddef>
#include <vector>

#include "fastgate/constants.hpp"
#include "fastgate/linalg.hpp"

namespace fastgate {

using Vec2 = std::array<double, 2>;

/// Rectangular grid of single-ion microtraps with isotropic in-plane trap
/// frequency. Ion (row r, col c) has index r*cols + c and sits nominally at
/// (x, y) = (c*d, r*d); x runs along a row and y across rows.
struct TrapArray {
  int rows = 2;
  int cols = 2;
  double spacing_m = 100e-6;
  double omega_t = constants::two_pi * 1.2e6;  // rad/s
  double mass_kg = constants::ion_species("40Ca+").mass_kg;
  double charge_c = constants::elementary_charge;
  double wavevector_k = constants::two_pi / 393e-9;  // 1/m

  int ion_count() const { return rows * cols; }
  Vec2 trap_center(int ion) const;
  /// Throws DomainError if any field violates the invariants.
  void validate() const;
  /// Same trap parameters on a different grid.
  TrapArray resized(int new_rows, int new_cols) const;
};

/// Dimensionless Coulomb strength q^2 / (4 pi eps0 M omega_t^2 d^3).
double coupling_strength(const TrapArray& array);

/// Lamb-Dicke parameter of a mode oscillating at omega.
double lamb_dicke(const TrapArray& array, double omega);

/// Wavevector that makes the common-mode (omega_t) Lamb-Dicke parameter
/// equal to eta.
double wavevector_for_lamb_dicke(const TrapArray& array, double eta);

struct EquilibriumConfig {
  std::vector<Vec2> positions;  // metres, ion-index order
  double residual_gradient_norm = 0.0;  // newtons
  int iterations = 0;
};

struct EquilibriumOptions {
  /// Gradient tolerance in units of the trap force scale M omega_t^2 d.
  double tolerance = 1e-12;
  int max_iterations = 100;
};

/// Damped Newton iteration on the harmonic-trap plus Coulomb potential,
/// starting from the trap centres.
EquilibriumConfig find_equilibrium(const TrapArray& array, const EquilibriumOptions& options = {});

/// Hessian of the total potential at the given positions divided by
/// M omega_t^2 (so the uncoupled value is the identity).
Matrix scaled_hessian(const TrapArray& array, const EquilibriumConfig& eq);

struct ModeSet {
  double omega_t = 0.0;                 // reference trap frequency, rad/s
  std::vector<double> frequencies;      // rad/s, ascending
  Matrix eigenvectors;                  // row m is b_m, layout [x0, y0, x1, y1, ...]
  std::vector<double> lamb_dicke;       // eta_m
  double xi = 0.0;

  std::size_t mode_count() const { return frequencies.size(); }
  int ion_count() const { return static_cast<int>(frequencies.size() / 2); }
  double frequency_ratio(std::size_t m) const { return frequencies[m] / omega_t; }
  /// K . b_m restricted to one ion's two coordinates.
  double projection(std::size_t m, int ion, const Vec2& direction) const;
};

ModeSet solve_modes(const TrapArray& array, const EquilibriumConfig& eq);

/// Convenience: equilibrium followed by the mode solve.
ModeSet solve_modes(const TrapArray& array);

/// Mode-splitting parameter of a 2x2 cell from its numerically solved
/// spectrum: the squared-frequency offset of the degenerate non-common pair.
double xi_from_spectrum(const std::vector<double>& squared_ratios);

/// Closed-form xi for a square 2x2 cell. Throws UnsupportedError otherwise.
double xi_closed_form(const TrapArray& array);

/// The eight squared frequency ratios omega_m^2 / omega_t^2 of a 2x2 cell
/// as functions of xi, in the conventional order
/// {1, 1, 1+xi, 1+xi, 1-xi-xi/(2 sqrt2), 1+2xi-xi/(2 sqrt2), 1-xi+xi/sqrt2,
///  1+2xi+xi/sqrt2}.
std::array<double, 8> analytic_modes_2x2(double xi);

}  // namespace fastgate

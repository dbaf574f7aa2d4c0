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

#include <numbers>
#include <string_view>

namespace fastgate::constants {

// CODATA 2018 values.
inline constexpr double hbar = 1.054571817e-34;            // J s
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg
inline constexpr double electron_mass = 9.1093837015e-31;  // kg

/// e^2 / (4 pi eps0), in J m.
inline constexpr double coulomb_e2 =
    elementary_charge * elementary_charge / (4.0 * std::numbers::pi * vacuum_permittivity);

inline constexpr double two_pi = 2.0 * std::numbers::pi;

struct IonSpecies {
  std::string_view name;
  double mass_kg;
  double charge_c;
};

/// Singly charged ion of the given neutral atomic mass (in u).
constexpr IonSpecies singly_charged(std::string_view name, double atomic_mass_u) {
  return {name, atomic_mass_u * atomic_mass_unit - electron_mass, elementary_charge};
}

/// Looks up a species by name ("40Ca+", "9Be+", ...). Throws ConfigError when
/// the name is unknown.
IonSpecies ion_species(std::string_view name);

}  // namespace fastgate::constants

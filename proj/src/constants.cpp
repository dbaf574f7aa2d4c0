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

#include "fastgate/constants.hpp"

#include <array>
#include <string>

#include "fastgate/error.hpp"

namespace fastgate::constants {

IonSpecies ion_species(std::string_view name) {
  // Neutral atomic masses from AME2020.
  static constexpr std::array table{
      singly_charged("40Ca+", 39.962590851),
      singly_charged("43Ca+", 42.958766380),
      singly_charged("9Be+", 9.012183062),
      singly_charged("88Sr+", 87.905612253),
      singly_charged("171Yb+", 170.936330208),
      singly_charged("138Ba+", 137.905247060),
  };
  for (const auto& species : table) {
    if (species.name == name) return species;
  }
  throw ConfigError("unknown ion species '" + std::string(name) + "'");
}

}  // namespace fastgate::constants

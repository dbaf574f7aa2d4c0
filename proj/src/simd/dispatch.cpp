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

#include <cstdlib>
#include <cstring>

#include "fastgate/simd/kernels.hpp"

namespace fastgate::simd {

std::string_view isa_name(Isa isa) {
  return isa == Isa::avx2 ? "avx2" : "scalar";
}

bool avx2_available() {
#if defined(FASTGATE_WITH_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

Isa active_isa() {
  static const Isa isa = [] {
    const char* forced = std::getenv("FASTGATE_SIMD");
    if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return Isa::scalar;
    return avx2_available() ? Isa::avx2 : Isa::scalar;
  }();
  return isa;
}

double dot(std::span<const double> a, std::span<const double> b) {
#if defined(FASTGATE_WITH_AVX2)
  if (active_isa() == Isa::avx2) return avx2::dot(a, b);
#endif
  return scalar::dot(a, b);
}

void rotate(std::span<double> x, std::span<double> y, double c, double s) {
#if defined(FASTGATE_WITH_AVX2)
  if (active_isa() == Isa::avx2) return avx2::rotate(x, y, c, s);
#endif
  scalar::rotate(x, y, c, s);
}

void phasor_sums(const PhasorInput& in, std::span<double> cos_out,
                 std::span<double> sin_out) {
#if defined(FASTGATE_WITH_AVX2)
  if (active_isa() == Isa::avx2) return avx2::phasor_sums(in, cos_out, sin_out);
#endif
  scalar::phasor_sums(in, cos_out, sin_out);
}

RowMin scan_row(const QuarticRow& row) {
#if defined(FASTGATE_WITH_AVX2)
  if (active_isa() == Isa::avx2) return avx2::scan_row(row);
#endif
  return scalar::scan_row(row);
}

}  // namespace fastgate::simd

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
#include <string_view>

namespace fastgate::simd {

/// Coefficients of one row of the optimizer's pair-block scan. For each
/// integer b in [first, first + count) the kernel evaluates
///
///   weight * (|p0 + b*(p1 + b*p2)| - target)^2 + (m0 + b*(m1 + b*m2))
///
/// i.e. the truncated infidelity restricted to a line of the integer lattice.
struct QuarticRow {
  double p0 = 0, p1 = 0, p2 = 0;
  double m0 = 0, m1 = 0, m2 = 0;
  double weight = 0;
  double target = 0;
  int first = 0;
  int count = 0;
};

struct RowMin {
  double value;
  int index;  // offset from QuarticRow::first of the first minimiser
};

/// Per-mode phasor accumulation: for every frequency w_m,
///   cos_out[m] = sum_k weight[k] * cos(w_m * x[k])
///   sin_out[m] = sum_k weight[k] * sin(w_m * x[k])
struct PhasorInput {
  std::span<const double> freqs;
  std::span<const double> weights;
  std::span<const double> points;
};

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// ISA picked at first use: AVX2+FMA when the CPU has it, unless the
/// FASTGATE_SIMD environment variable is set to "scalar".
Isa active_isa();
bool avx2_available();

double dot(std::span<const double> a, std::span<const double> b);
void rotate(std::span<double> x, std::span<double> y, double c, double s);
void phasor_sums(const PhasorInput& in, std::span<double> cos_out,
                 std::span<double> sin_out);
RowMin scan_row(const QuarticRow& row);

namespace scalar {
double dot(std::span<const double> a, std::span<const double> b);
void rotate(std::span<double> x, std::span<double> y, double c, double s);
void phasor_sums(const PhasorInput& in, std::span<double> cos_out,
                 std::span<double> sin_out);
RowMin scan_row(const QuarticRow& row);
}  // namespace scalar

#if defined(FASTGATE_WITH_AVX2)
namespace avx2 {
double dot(std::span<const double> a, std::span<const double> b);
void rotate(std::span<double> x, std::span<double> y, double c, double s);
void phasor_sums(const PhasorInput& in, std::span<double> cos_out,
                 std::span<double> sin_out);
RowMin scan_row(const QuarticRow& row);
}  // namespace avx2
#endif

}  // namespace fastgate::simd

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

// Reference kernels. These define the semantics that every vectorised
// variant is tested against.

#include <cmath>

#include "fastgate/simd/kernels.hpp"

namespace fastgate::simd::scalar {

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

void rotate(std::span<double> x, std::span<double> y, double c, double s) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

void phasor_sums(const PhasorInput& in, std::span<double> cos_out,
                 std::span<double> sin_out) {
  for (std::size_t m = 0; m < in.freqs.size(); ++m) {
    double c = 0.0;
    double s = 0.0;
    for (std::size_t k = 0; k < in.points.size(); ++k) {
      const double arg = in.freqs[m] * in.points[k];
      c += in.weights[k] * std::cos(arg);
      s += in.weights[k] * std::sin(arg);
    }
    cos_out[m] = c;
    sin_out[m] = s;
  }
}

RowMin scan_row(const QuarticRow& row) {
  RowMin best{INFINITY, -1};
  for (int i = 0; i < row.count; ++i) {
    const double b = static_cast<double>(row.first + i);
    const double phase = row.p0 + b * (row.p1 + b * row.p2);
    const double mismatch = std::fabs(phase) - row.target;
    const double value =
        row.weight * (mismatch * mismatch) + (row.m0 + b * (row.m1 + b * row.m2));
    if (value < best.value) best = {value, i};
  }
  return best;
}

}  // namespace fastgate::simd::scalar

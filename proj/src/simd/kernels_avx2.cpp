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

// AVX2/FMA variants of the kernels in kernels_scalar.cpp. This translation
// unit is compiled with -mavx2 -mfma and must only be reached through the
// runtime dispatch in dispatch.cpp.

#include <immintrin.h>

#include <cmath>
#include <cstdint>

#include "fastgate/simd/kernels.hpp"

namespace fastgate::simd::avx2 {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

// Cody-Waite reduction by pi/4 followed by the minimax polynomials of the
// Cephes library. Accurate to a few ulp for |x| < 2^30, far beyond the
// phase arguments seen here (a few hundred radians at most).
struct SinCos {
  __m256d sin;
  __m256d cos;
};

inline SinCos sincos(__m256d x) {
  const __m256d sign_bit = _mm256_set1_pd(-0.0);
  const __m256d ax = _mm256_andnot_pd(sign_bit, x);
  const __m256d x_sign = _mm256_and_pd(sign_bit, x);

  __m256d y = _mm256_floor_pd(_mm256_mul_pd(ax, _mm256_set1_pd(1.27323954473516268615)));
  // Round the octant up to an even number.
  y = _mm256_mul_pd(_mm256_set1_pd(2.0),
                    _mm256_floor_pd(_mm256_mul_pd(_mm256_add_pd(y, _mm256_set1_pd(1.0)),
                                                  _mm256_set1_pd(0.5))));
  const __m256i octant =
      _mm256_castpd_si256(_mm256_add_pd(y, _mm256_set1_pd(4503599627370496.0)));
  const __m256i four = _mm256_set1_epi64x(4);
  const __m256i two = _mm256_set1_epi64x(2);
  const __m256d flip =
      _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(octant, four), four));
  const __m256d swap =
      _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(octant, two), two));

  __m256d z = _mm256_fnmadd_pd(y, _mm256_set1_pd(7.85398125648498535156E-1), ax);
  z = _mm256_fnmadd_pd(y, _mm256_set1_pd(3.77489470793079817668E-8), z);
  z = _mm256_fnmadd_pd(y, _mm256_set1_pd(2.69515142907905952645E-15), z);
  const __m256d zz = _mm256_mul_pd(z, z);

  __m256d ps = _mm256_set1_pd(1.58962301576546568060E-10);
  ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(-2.50507477628578072866E-8));
  ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(2.75573136213857245213E-6));
  ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(-1.98412698295895385996E-4));
  ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(8.33333333332211858878E-3));
  ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(-1.66666666666666307295E-1));
  ps = _mm256_fmadd_pd(_mm256_mul_pd(z, zz), ps, z);

  __m256d pc = _mm256_set1_pd(-1.13585365213876817300E-11);
  pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(2.08757008419747316778E-9));
  pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(-2.75573141792967388112E-7));
  pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(2.48015872888517045348E-5));
  pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(-1.38888888888730564116E-3));
  pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(4.16666666666665929218E-2));
  pc = _mm256_fmadd_pd(_mm256_mul_pd(zz, zz), pc,
                       _mm256_fnmadd_pd(_mm256_set1_pd(0.5), zz, _mm256_set1_pd(1.0)));

  __m256d s = _mm256_blendv_pd(ps, pc, swap);
  __m256d c = _mm256_blendv_pd(pc, ps, swap);
  s = _mm256_xor_pd(s, _mm256_xor_pd(x_sign, _mm256_and_pd(flip, sign_bit)));
  c = _mm256_xor_pd(c, _mm256_and_pd(_mm256_xor_pd(flip, swap), sign_bit));
  return {s, c};
}

}  // namespace

double dot(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + i + 4),
                           _mm256_loadu_pd(b.data() + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i), acc0);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void rotate(std::span<double> x, std::span<double> y, double c, double s) {
  const std::size_t n = x.size();
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xi = _mm256_loadu_pd(x.data() + i);
    const __m256d yi = _mm256_loadu_pd(y.data() + i);
    _mm256_storeu_pd(x.data() + i, _mm256_fmsub_pd(vc, xi, _mm256_mul_pd(vs, yi)));
    _mm256_storeu_pd(y.data() + i, _mm256_fmadd_pd(vs, xi, _mm256_mul_pd(vc, yi)));
  }
  for (; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

void phasor_sums(const PhasorInput& in, std::span<double> cos_out,
                 std::span<double> sin_out) {
  const std::size_t modes = in.freqs.size();
  const std::size_t points = in.points.size();
  std::size_t m = 0;
  for (; m + 4 <= modes; m += 4) {
    const __m256d w = _mm256_loadu_pd(in.freqs.data() + m);
    __m256d acc_c = _mm256_setzero_pd();
    __m256d acc_s = _mm256_setzero_pd();
    for (std::size_t k = 0; k < points; ++k) {
      const SinCos sc = sincos(_mm256_mul_pd(w, _mm256_set1_pd(in.points[k])));
      const __m256d weight = _mm256_set1_pd(in.weights[k]);
      acc_c = _mm256_fmadd_pd(weight, sc.cos, acc_c);
      acc_s = _mm256_fmadd_pd(weight, sc.sin, acc_s);
    }
    _mm256_storeu_pd(cos_out.data() + m, acc_c);
    _mm256_storeu_pd(sin_out.data() + m, acc_s);
  }
  for (; m < modes; ++m) {
    double c = 0.0;
    double s = 0.0;
    for (std::size_t k = 0; k < points; ++k) {
      const double arg = in.freqs[m] * in.points[k];
      c += in.weights[k] * std::cos(arg);
      s += in.weights[k] * std::sin(arg);
    }
    cos_out[m] = c;
    sin_out[m] = s;
  }
}

// Bit-identical to scalar::scan_row: same operation order, no contraction.
RowMin scan_row(const QuarticRow& row) {
  const __m256d sign_bit = _mm256_set1_pd(-0.0);
  const __m256d p0 = _mm256_set1_pd(row.p0), p1 = _mm256_set1_pd(row.p1),
                p2 = _mm256_set1_pd(row.p2);
  const __m256d m0 = _mm256_set1_pd(row.m0), m1 = _mm256_set1_pd(row.m1),
                m2 = _mm256_set1_pd(row.m2);
  const __m256d weight = _mm256_set1_pd(row.weight);
  const __m256d target = _mm256_set1_pd(row.target);
  const __m256d four = _mm256_set1_pd(4.0);

  __m256d idx = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
  __m256d best = _mm256_set1_pd(INFINITY);
  __m256d best_idx = _mm256_set1_pd(-1.0);
  const __m256d first = _mm256_set1_pd(static_cast<double>(row.first));
  int i = 0;
  for (; i + 4 <= row.count; i += 4) {
    const __m256d b = _mm256_add_pd(first, idx);
    const __m256d phase = _mm256_add_pd(p0, _mm256_mul_pd(b, _mm256_add_pd(p1, _mm256_mul_pd(b, p2))));
    const __m256d mismatch = _mm256_sub_pd(_mm256_andnot_pd(sign_bit, phase), target);
    const __m256d motion = _mm256_add_pd(m0, _mm256_mul_pd(b, _mm256_add_pd(m1, _mm256_mul_pd(b, m2))));
    const __m256d value =
        _mm256_add_pd(_mm256_mul_pd(weight, _mm256_mul_pd(mismatch, mismatch)), motion);
    const __m256d better = _mm256_cmp_pd(value, best, _CMP_LT_OQ);
    best = _mm256_blendv_pd(best, value, better);
    best_idx = _mm256_blendv_pd(best_idx, idx, better);
    idx = _mm256_add_pd(idx, four);
  }

  alignas(32) double lane_val[4];
  alignas(32) double lane_idx[4];
  _mm256_store_pd(lane_val, best);
  _mm256_store_pd(lane_idx, best_idx);
  RowMin out{INFINITY, -1};
  for (int l = 0; l < 4; ++l) {
    if (lane_idx[l] < 0) continue;
    const int li = static_cast<int>(lane_idx[l]);
    if (lane_val[l] < out.value || (lane_val[l] == out.value && li < out.index)) {
      out = {lane_val[l], li};
    }
  }
  for (; i < row.count; ++i) {
    const double b = static_cast<double>(row.first + i);
    const double phase = row.p0 + b * (row.p1 + b * row.p2);
    const double mismatch = std::fabs(phase) - row.target;
    const double value =
        row.weight * (mismatch * mismatch) + (row.m0 + b * (row.m1 + b * row.m2));
    if (value < out.value) out = {value, i};
  }
  return out;
}

}  // namespace fastgate::simd::avx2

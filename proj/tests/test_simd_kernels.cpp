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

#include <cmath>
#include <random>
#include <vector>

#include "fastgate/simd/kernels.hpp"

using namespace fastgate;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

}  // namespace

TEST_CASE("isa selection honours the scalar override") {
  const char* forced = std::getenv("FASTGATE_SIMD");
  if (forced != nullptr && std::string_view(forced) == "scalar") {
    CHECK(simd::active_isa() == simd::Isa::scalar);
  } else if (simd::avx2_available()) {
    CHECK(simd::active_isa() == simd::Isa::avx2);
  }
  MESSAGE("active kernels: " << simd::isa_name(simd::active_isa()));
}

TEST_CASE("dot and rotate agree with the scalar reference") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 16u, 33u, 200u}) {
    auto a = random_vector(rng, n, -1, 1);
    auto b = random_vector(rng, n, -1, 1);
    double naive = 0.0;
    for (std::size_t i = 0; i < n; ++i) naive += a[i] * b[i];
    CHECK(simd::dot(a, b) == doctest::Approx(naive).epsilon(1e-13));

    auto x = a, y = b, xs = a, ys = b;
    const double th = 0.37;
    simd::rotate(x, y, std::cos(th), std::sin(th));
    simd::scalar::rotate(xs, ys, std::cos(th), std::sin(th));
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(x[i] == doctest::Approx(xs[i]).epsilon(1e-15));
      CHECK(y[i] == doctest::Approx(ys[i]).epsilon(1e-15));
    }
  }
}

TEST_CASE("phasor sums match libm to near machine precision") {
  std::mt19937_64 rng(12);
  for (std::size_t modes : {1u, 4u, 5u, 8u, 18u}) {
    for (std::size_t pts : {1u, 2u, 16u, 31u}) {
      auto freqs = random_vector(rng, modes, 6.0, 6.6);
      auto weights = random_vector(rng, pts, -100, 100);
      auto points = random_vector(rng, pts, -1.5, 1.5);
      std::vector<double> c(modes), s(modes), cr(modes), sr(modes);
      simd::phasor_sums({freqs, weights, points}, c, s);
      for (std::size_t m = 0; m < modes; ++m) {
        long double cc = 0, ss = 0, scale = 0;
        for (std::size_t k = 0; k < pts; ++k) {
          cc += weights[k] * std::cos(static_cast<long double>(freqs[m]) * points[k]);
          ss += weights[k] * std::sin(static_cast<long double>(freqs[m]) * points[k]);
          scale += std::fabs(weights[k]);
        }
        CHECK(std::fabs(c[m] - static_cast<double>(cc)) <= 1e-14 * static_cast<double>(scale));
        CHECK(std::fabs(s[m] - static_cast<double>(ss)) <= 1e-14 * static_cast<double>(scale));
      }
    }
  }
}

TEST_CASE("row scan finds the exhaustive minimiser, first index on ties") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 200; ++trial) {
    simd::QuarticRow row;
    row.p0 = u(rng);
    row.p1 = 1e-2 * u(rng);
    row.p2 = 1e-4 * u(rng);
    row.m0 = std::fabs(u(rng));
    row.m1 = 1e-3 * u(rng);
    row.m2 = 1e-5 * std::fabs(u(rng));
    row.weight = 2.0 / 3.0;
    row.target = 0.7853981633974483;
    row.first = -100 + trial % 7;
    row.count = 1 + trial;
    const auto got = simd::scan_row(row);
    const auto ref = simd::scalar::scan_row(row);
    CHECK(got.index == ref.index);
    CHECK(got.value == ref.value);
  }

  simd::QuarticRow flat;
  flat.m0 = 1.0;
  flat.first = -3;
  flat.count = 9;
  CHECK(simd::scan_row(flat).index == 0);
}

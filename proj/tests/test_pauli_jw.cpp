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

#include <map>
#include <random>
#include <set>

#include "dense_pauli.hpp"
#include "fastgate/error.hpp"
#include "fastgate/fermi_hubbard/jordan_wigner.hpp"

using namespace fastgate;
using namespace fastgate::fh;
using testing::dense;
using testing::DenseOp;

namespace {

PauliString random_string(std::mt19937_64& rng, int qubits) {
  std::uniform_int_distribution<int> p(0, 3);
  PauliString s;
  for (int q = 0; q < qubits; ++q) s.set(q, static_cast<Pauli>(p(rng)));
  return s;
}

double distance(const DenseOp& a, const DenseOp& b) { return (a - b).cwiseAbs().maxCoeff(); }

// Sum of all JW terms plus the constant, as one Pauli sum.
PauliSum as_sum(const JWHamiltonian& h) {
  PauliSum out(PauliString{}, h.constant);
  for (const auto& t : h.terms) out += PauliSum(t.term.op, t.term.coefficient);
  return out;
}

}  // namespace

TEST_CASE("string basics") {
  PauliString s;
  CHECK(s.is_identity());
  CHECK(s.to_string() == "I");
  s.set(3, Pauli::X);
  s.set(4, Pauli::Z);
  s.set(5, Pauli::X);
  CHECK(s.to_string() == "X3 Z4 X5");
  CHECK(s.arity() == 3);
  CHECK(s.support() == std::vector<int>{3, 4, 5});
  CHECK_FALSE(s.is_diagonal());
  s.set(4, Pauli::I);
  CHECK(s.arity() == 2);
  CHECK(PauliString::single(63, Pauli::Y).at(63) == Pauli::Y);
  CHECK(pauli_char(Pauli::Y) == 'Y');
}

TEST_CASE("products and commutation against dense matrices") {
  std::mt19937_64 rng(51);
  constexpr int n = 4;
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_string(rng, n);
    const auto b = random_string(rng, n);
    const auto prod = multiply(a, b);
    const DenseOp da = dense(a, n);
    const DenseOp db = dense(b, n);
    CHECK(distance(prod.phase * dense(prod.op, n), da * db) < 1e-14);
    const bool commute = distance(da * db, db * da) < 1e-14;
    CHECK(a.commutes_with(b) == commute);
  }
}

TEST_CASE("sums: arithmetic, adjoint and pruning") {
  std::mt19937_64 rng(52);
  std::normal_distribution<double> g;
  constexpr int n = 3;
  for (int trial = 0; trial < 50; ++trial) {
    PauliSum a, b;
    for (int k = 0; k < 4; ++k) {
      a += PauliSum(random_string(rng, n), {g(rng), g(rng)});
      b += PauliSum(random_string(rng, n), {g(rng), g(rng)});
    }
    const std::complex<double> c(g(rng), g(rng));
    CHECK(distance(dense(a * b, n), dense(a, n) * dense(b, n)) < 1e-12);
    CHECK(distance(dense(a + b, n), dense(a, n) + dense(b, n)) < 1e-12);
    CHECK(distance(dense(a * c, n), c * dense(a, n)) < 1e-12);
    CHECK(distance(dense(a.adjoint(), n), dense(a, n).adjoint()) < 1e-12);
  }
  PauliSum x(PauliString::single(0, Pauli::X), 1.0);
  x += PauliSum(PauliString::single(0, Pauli::X), -1.0);
  x.prune();
  CHECK(x.terms().empty());
  CHECK(x.coefficient(PauliString::single(0, Pauli::X)) == std::complex<double>(0.0));
}

TEST_CASE("ladder operators obey the canonical anticommutators") {
  constexpr int modes = 6;
  const Eigen::Index dim = Eigen::Index{1} << modes;
  std::vector<DenseOp> b(modes), bd(modes);
  for (int j = 0; j < modes; ++j) {
    b[j] = dense(annihilation(j), modes);
    bd[j] = dense(creation(j), modes);
  }
  const DenseOp id = DenseOp::Identity(dim, dim);
  for (int j = 0; j < modes; ++j) {
    for (int k = 0; k < modes; ++k) {
      CHECK(distance(b[j] * bd[k] + bd[k] * b[j], j == k ? id : DenseOp::Zero(dim, dim)) < 1e-14);
      CHECK(distance(b[j] * b[k] + b[k] * b[j], DenseOp::Zero(dim, dim)) < 1e-14);
    }
  }
  // The occupied state is |1>: n = (1 - Z) / 2.
  const PauliSum n2 = creation(2) * annihilation(2);
  CHECK(n2.coefficient(PauliString{}) == std::complex<double>(0.5));
  CHECK(n2.coefficient(PauliString::single(2, Pauli::Z)) == std::complex<double>(-0.5));
  CHECK(mode_index(3, Spin::down) == 6);
  CHECK(mode_index(3, Spin::up) == 7);
}

TEST_CASE("Hubbard terms on the 5x4 lattice") {
  FHLattice lat;
  lat.hopping_w = 0.7;
  lat.onsite_u = 2.5;
  const auto h = jw_transform(lat);
  CHECK(h.qubits == 40);
  std::map<TermKind, int> count;
  std::map<TermKind, std::set<int>> arity;
  for (const auto& t : h.terms) {
    ++count[t.kind];
    arity[t.kind].insert(t.term.arity());
  }
  CHECK(count[TermKind::onsite_zz] == 20);
  CHECK(count[TermKind::onsite_z] == 40);
  CHECK(count[TermKind::row_hop] == 64);
  CHECK(count[TermKind::column_hop] == 60);
  CHECK(arity[TermKind::onsite_zz] == std::set<int>{2});
  CHECK(arity[TermKind::onsite_z] == std::set<int>{1});
  CHECK(arity[TermKind::row_hop] == std::set<int>{3});
  CHECK(arity[TermKind::column_hop] == std::set<int>{11});
  CHECK(h.constant == doctest::Approx(20 * 2.5 / 4.0));

  for (const auto& t : h.terms) {
    const double c = t.term.coefficient;
    switch (t.kind) {
      case TermKind::onsite_zz: CHECK(c == doctest::Approx(2.5 / 4.0)); break;
      case TermKind::onsite_z: CHECK(c == doctest::Approx(-2.5 / 4.0)); break;
      default: CHECK(c == doctest::Approx(0.7 / 2.0)); break;
    }
  }
  // Ordered by kind.
  for (std::size_t i = 1; i < h.terms.size(); ++i) {
    CHECK(static_cast<int>(h.terms[i - 1].kind) <= static_cast<int>(h.terms[i].kind));
  }

  // A column hop: X..X with Z on the nine qubits in between, and its Y twin.
  PauliString xzx;
  xzx.set(0, Pauli::X);
  for (int q = 1; q < 10; ++q) xzx.set(q, Pauli::Z);
  xzx.set(10, Pauli::X);
  bool found = false;
  for (const auto& t : h.terms) found = found || t.term.op == xzx;
  CHECK(found);

  const auto r = jw_transform(lat, Normalization::rescaled);
  for (std::size_t i = 0; i < h.terms.size(); ++i) {
    const double factor = h.terms[i].kind == TermKind::onsite_zz || h.terms[i].kind == TermKind::onsite_z
                              ? 4.0 : 2.0;
    CHECK(r.terms[i].term.coefficient == doctest::Approx(factor * h.terms[i].term.coefficient));
    CHECK(r.terms[i].term.op == h.terms[i].term.op);
  }
  CHECK(r.constant == doctest::Approx(4.0 * h.constant));
}

TEST_CASE("JW terms reassemble the fermionic Hamiltonian") {
  FHLattice lat;
  lat.width = 2;
  lat.height = 2;
  lat.hopping_w = 1.3;
  lat.onsite_u = 0.6;
  const auto h = jw_transform(lat);
  const int n = lat.qubits();
  const DenseOp from_terms = dense(as_sum(h), n);
  CHECK(distance(from_terms, from_terms.adjoint()) < 1e-14);

  // Direct second quantisation from dense ladder matrices.
  std::vector<DenseOp> b(n);
  for (int j = 0; j < n; ++j) b[j] = dense(annihilation(j), n);
  const Eigen::Index dim = Eigen::Index{1} << n;
  DenseOp ref = DenseOp::Zero(dim, dim);
  auto site = [&](int r, int c) { return r * lat.width + c; };
  for (int r = 0; r < lat.height; ++r) {
    for (int c = 0; c < lat.width; ++c) {
      for (Spin s : {Spin::down, Spin::up}) {
        const int i = mode_index(site(r, c), s);
        for (auto [nr, nc] : {std::pair{r, c + 1}, {r + 1, c}}) {
          if (nr >= lat.height || nc >= lat.width) continue;
          const int j = mode_index(site(nr, nc), s);
          ref += lat.hopping_w * (b[i].adjoint() * b[j] + b[j].adjoint() * b[i]);
        }
      }
      const int up = mode_index(site(r, c), Spin::up);
      const int down = mode_index(site(r, c), Spin::down);
      ref += lat.onsite_u * (b[up].adjoint() * b[up]) * (b[down].adjoint() * b[down]);
    }
  }
  CHECK(distance(from_terms, ref) < 1e-13);
  CHECK(distance(dense(fermionic_hamiltonian(lat), n), ref) < 1e-13);
}

TEST_CASE("lattice validation") {
  FHLattice big;
  big.width = 6;
  big.height = 6;
  CHECK_THROWS_AS(jw_transform(big), ConfigError);
  FHLattice empty;
  empty.width = 0;
  CHECK_THROWS_AS(empty.validate(), ConfigError);
}

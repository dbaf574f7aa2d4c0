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

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "fastgate/error.hpp"
#include "fastgate/fermi_hubbard/compiler.hpp"
#include "routing_replay.hpp"

using namespace fastgate;
using namespace fastgate::fh;
using fastgate::testing::random_grid;
using fastgate::testing::replay;

namespace {

bool consecutive_adjacent(const QubitEmbedding& emb) {
  const auto sites = emb.initial_sites();
  for (int q = 0; q + 1 < emb.qubits(); ++q) {
    if (!emb.adjacent(sites[q], sites[q + 1])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("one-dimensional chain census") {
  const auto h = jw_transform(FHLattice{});
  const auto c = count_trotter_step(h, QubitEmbedding::chain(40));
  CHECK(c.two_body_terms == 20);
  CHECK(c.three_body_terms == 64);
  CHECK(c.eleven_body_terms == 60);
  CHECK(c.single_qubit_terms == 40);
  CHECK(c.two_body == 20);
  CHECK(c.three_body == 256);
  CHECK(c.eleven_body == 60 * (2 * (9 * 3 + 10)));
  CHECK(c.total == 20 + 256 + 4440);
  CHECK(c.total == 4716);
  CHECK(c.diagonal_ops == 0);
}

TEST_CASE("two-dimensional default embedding") {
  const FHLattice lat;
  const auto h = jw_transform(lat);
  const auto emb = default_embedding(lat);
  CHECK(emb.geometry() == Geometry::grid);
  CHECK(emb.diagonal_links());
  CHECK(emb.qubits() == 40);
  const auto c = count_trotter_step(h, emb);
  CHECK(c.total <= 4716);
  CHECK(c.two_body == 20);
  CHECK(c.three_body == 256);
  CHECK(c.total == c.two_body + c.three_body + c.eleven_body);
  CHECK(c.diagonal_ops > 0);
  MESSAGE("default embedding: total " << c.total << " (reference 2628), diagonal ops "
                                      << c.diagonal_ops << " (reference 344)");

  const auto snake = count_trotter_step(h, snake_embedding(lat));
  const auto rows = count_trotter_step(h, row_major_embedding(lat));
  CHECK(c.total == std::min(snake.total, rows.total));
}

TEST_CASE("routing schedules replay validly on random placements") {
  std::mt19937_64 rng(61);
  const auto h = jw_transform(FHLattice{});
  int cases = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const bool diag = trial % 3 != 0;
    const bool spectators = trial % 2 == 1;
    const auto emb = spectators ? random_grid(rng, 40, 7, 7, diag) : random_grid(rng, 40, 8, 5, diag);
    // A sample of terms per placement keeps the run short; every kind appears.
    for (std::size_t i = trial % 13; i < h.terms.size(); i += 13) {
      const auto& term = h.terms[i].term;
      for (HubPolicy policy : {HubPolicy::anchored, HubPolicy::cheapest}) {
        const auto ct = compile_term(term, emb, policy);
        const auto r = replay(ct, emb);
        CHECK(r.adjacent_ok);
        CHECK(r.diagonal_flags_ok);
        CHECK(r.restored);
        CHECK(r.hub_on_every_gp);
        CHECK(ct.gp_gate_count == r.gp + 3 * r.swaps);
        CHECK(ct.swap_count == r.swaps);
        CHECK(ct.diagonal_gp_count == r.diagonal_gp);
        const auto support = term.op.support();
        CHECK(std::find(support.begin(), support.end(), ct.hub) != support.end());
        for (int q : support) {
          if (q != ct.hub && support.size() > 1) CHECK(r.gp_partners.count(q) == 1);
        }
      }
      const int anchored = compile_term(term, emb, HubPolicy::anchored).gp_gate_count;
      CHECK(compile_term(term, emb, HubPolicy::cheapest).gp_gate_count <= anchored);
    }
    ++cases;
  }
  CHECK(cases >= 200);
}

TEST_CASE("non-routed subtotals do not depend on the embedding") {
  const FHLattice lat;
  const auto h = jw_transform(lat);
  for (const auto& emb : {QubitEmbedding::chain(40), snake_embedding(lat), default_embedding(lat)}) {
    REQUIRE(consecutive_adjacent(emb));
    const auto c = count_trotter_step(h, emb);
    CHECK(c.two_body == 20);
    CHECK(c.three_body == 256);
  }
}

TEST_CASE("single-qubit rotations are listed but not counted") {
  const auto h = jw_transform(FHLattice{});
  const auto emb = default_embedding(FHLattice{});
  for (const auto& t : h.terms) {
    const auto ct = compile_term(t.term, emb);
    const long rotations = std::count_if(ct.gates.begin(), ct.gates.end(),
                                         [](const Gate& g) { return g.kind == GateKind::rotation; });
    if (t.kind == TermKind::onsite_z) {
      CHECK(ct.gp_gate_count == 0);
      CHECK(rotations == 1);
    }
    if (t.kind == TermKind::row_hop || t.kind == TermKind::column_hop) {
      // Basis changes on the two X/Y ends, the hub rotation, then the undo.
      CHECK(rotations == 5);
    }
  }
}

TEST_CASE("embedding search never makes things worse") {
  FHLattice small;
  small.width = 3;
  small.height = 2;
  const auto h = jw_transform(small);
  const auto start = row_major_embedding(small);
  const auto before = count_trotter_step(h, start).total;
  const auto found = search_embedding(h, start, 2);
  CHECK(count_trotter_step(h, found).total <= before);
  CHECK(found.qubits() == 12);
}

TEST_CASE("embedding construction") {
  const auto chain = QubitEmbedding::chain(5);
  CHECK(chain.adjacent(1, 2));
  CHECK_FALSE(chain.adjacent(1, 3));
  CHECK_FALSE(chain.diagonal(1, 2));

  const std::vector<Site> p{{0, 0}, {0, 1}, {1, 1}};
  const auto g = QubitEmbedding::grid(2, 2, p);
  CHECK(g.ions() == 4);
  CHECK(g.initial_occupants() == std::vector<int>{0, 1, 3, 2});
  CHECK(g.initial_sites() == std::vector<int>{0, 1, 3, 2});
  CHECK(g.adjacent(0, 3));
  CHECK(g.diagonal(0, 3));
  const auto nodiag = QubitEmbedding::grid(2, 2, p, false);
  CHECK_FALSE(nodiag.adjacent(0, 3));
  CHECK(nodiag.neighbours(0).size() == 2);
  CHECK(g.neighbours(0).size() == 3);

  CHECK_THROWS_AS(QubitEmbedding::grid(2, 2, {{0, 0}, {0, 0}}), ConfigError);
  CHECK_THROWS_AS(QubitEmbedding::grid(2, 2, {{0, 0}, {2, 0}}), ConfigError);
  CHECK_THROWS_AS(QubitEmbedding::grid(1, 1, {{0, 0}, {0, 0}}), ConfigError);

  PauliTerm identity{1.0, PauliString{}};
  CHECK_THROWS_AS(compile_term(identity, chain), DomainError);
  PauliTerm outside{1.0, PauliString::single(9, Pauli::Z)};
  CHECK_THROWS_AS(compile_term(outside, chain), RoutingError);
}

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

#include "fastgate/fermi_hubbard/compiler.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "fastgate/error.hpp"

namespace fastgate::fh {

namespace {

constexpr int kSwapCost = 3;

std::vector<int> distances_from(const QubitEmbedding& emb, int source) {
  std::vector<int> dist(emb.ions(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int s = queue.front();
    queue.pop_front();
    for (int n : emb.neighbours(s)) {
      if (dist[n] < 0) {
        dist[n] = dist[s] + 1;
        queue.push_back(n);
      }
    }
  }
  return dist;
}

struct Placement {
  std::vector<int> site_of;  // ion id -> site
  std::vector<int> ion_at;   // site -> ion id

  void swap_sites(int sa, int sb) {
    std::swap(ion_at[sa], ion_at[sb]);
    site_of[ion_at[sa]] = sa;
    site_of[ion_at[sb]] = sb;
  }
};

struct Route {
  std::vector<Gate> gates;
  int gp = 0;
  int diagonal = 0;
  int swaps = 0;
};

void tally(Route& r, const Gate& g) {
  const int cost = g.kind == GateKind::swap ? kSwapCost : g.kind == GateKind::gp ? 1 : 0;
  r.gp += cost;
  if (g.diagonal) r.diagonal += cost;
  if (g.kind == GateKind::swap) ++r.swaps;
}

// Couples `hub` to every spoke: GP on contact, otherwise the hub swaps one
// step toward the nearest uncoupled spoke.
Route route_hub(const QubitEmbedding& emb, int hub, std::vector<int> spokes) {
  Placement p{emb.initial_sites(), emb.initial_occupants()};
  Route route;
  const int limit = 4 * emb.ions() * static_cast<int>(spokes.size() + 1);
  for (int guard = 0; !spokes.empty(); ++guard) {
    if (guard > limit) throw RoutingError("hub routing did not terminate");
    const int hs = p.site_of[hub];
    for (auto it = spokes.begin(); it != spokes.end();) {
      const int ss = p.site_of[*it];
      if (emb.adjacent(hs, ss)) {
        const Gate g{GateKind::gp, hub, *it, emb.diagonal(hs, ss)};
        route.gates.push_back(g);
        tally(route, g);
        it = spokes.erase(it);
      } else {
        ++it;
      }
    }
    if (spokes.empty()) break;

    const std::vector<int> from_hub = distances_from(emb, hs);
    int target = -1;
    for (int q : spokes) {
      const int d = from_hub[p.site_of[q]];
      if (d < 0) throw RoutingError("qubit " + std::to_string(q) + " unreachable from hub");
      if (target < 0 || d < from_hub[p.site_of[target]]) target = q;
    }
    const std::vector<int> to_target = distances_from(emb, p.site_of[target]);
    int step = -1;
    int step_score = -1;
    for (int n : emb.neighbours(hs)) {
      if (to_target[n] != to_target[hs] - 1) continue;
      int score = 0;
      for (int q : spokes) {
        const int qs = p.site_of[q] == n ? hs : p.site_of[q];
        if (emb.adjacent(n, qs)) ++score;
      }
      score = 2 * score + (emb.diagonal(hs, n) ? 0 : 1);
      if (score > step_score) {
        step = n;
        step_score = score;
      }
    }
    const Gate g{GateKind::swap, hub, p.ion_at[step], emb.diagonal(hs, step)};
    route.gates.push_back(g);
    tally(route, g);
    p.swap_sites(hs, step);
  }
  return route;
}

}  // namespace

CompiledTerm compile_term(const PauliTerm& term, const QubitEmbedding& emb, HubPolicy policy) {
  const std::vector<int> support = term.op.support();
  if (support.empty()) throw DomainError("cannot compile the identity term");
  if (support.back() >= emb.qubits()) {
    throw RoutingError("term acts on qubit " + std::to_string(support.back()) +
                       " outside the embedding");
  }
  CompiledTerm out;
  out.term = term;
  if (support.size() == 1) {
    out.hub = support[0];
    out.gates.push_back({GateKind::rotation, support[0]});
    return out;
  }

  Route best;
  int best_hub = -1;
  for (int hub : support) {
    std::vector<int> spokes;
    for (int q : support) {
      if (q != hub) spokes.push_back(q);
    }
    Route r = route_hub(emb, hub, std::move(spokes));
    if (policy == HubPolicy::anchored) {
      if (r.swaps == 0) {
        best = std::move(r);
        best_hub = hub;
        break;
      }
      if (best_hub < 0) {
        best = std::move(r);
        best_hub = hub;
      }
    } else if (best_hub < 0 || r.gp < best.gp) {
      best = std::move(r);
      best_hub = hub;
    }
  }
  out.hub = best_hub;

  std::vector<int> basis_changes;
  for (int q : support) {
    if (term.op.at(q) != Pauli::Z) basis_changes.push_back(q);
  }
  for (int q : basis_changes) out.gates.push_back({GateKind::rotation, q});

  Route total;
  auto emit = [&](const Gate& g) {
    out.gates.push_back(g);
    tally(total, g);
  };
  for (const Gate& g : best.gates) emit(g);
  if (support.size() == 2) {
    // A single GP gate realises the two-body term; only the SWAPs unwind.
    for (auto it = best.gates.rbegin(); it != best.gates.rend(); ++it) {
      if (it->kind == GateKind::swap) emit(*it);
    }
  } else {
    emit({GateKind::rotation, best_hub});
    for (auto it = best.gates.rbegin(); it != best.gates.rend(); ++it) emit(*it);
  }
  for (int q : basis_changes) out.gates.push_back({GateKind::rotation, q});

  out.gp_gate_count = total.gp;
  out.diagonal_gp_count = total.diagonal;
  out.swap_count = total.swaps;
  return out;
}

TrotterCensus count_trotter_step(const JWHamiltonian& hamiltonian, const QubitEmbedding& emb,
                                 HubPolicy policy) {
  if (emb.qubits() < hamiltonian.qubits) {
    throw ConfigError("embedding holds " + std::to_string(emb.qubits()) + " qubits but " +
                      std::to_string(hamiltonian.qubits) + " are needed");
  }
  TrotterCensus c;
  for (const auto& t : hamiltonian.terms) {
    const CompiledTerm ct = compile_term(t.term, emb, policy);
    switch (t.kind) {
      case TermKind::onsite_zz:
        ++c.two_body_terms;
        c.two_body += ct.gp_gate_count;
        break;
      case TermKind::onsite_z:
        ++c.single_qubit_terms;
        break;
      case TermKind::row_hop:
        ++c.three_body_terms;
        c.three_body += ct.gp_gate_count;
        break;
      case TermKind::column_hop:
        ++c.eleven_body_terms;
        c.eleven_body += ct.gp_gate_count;
        break;
    }
    c.diagonal_ops += ct.diagonal_gp_count;
    c.swaps += ct.swap_count;
  }
  c.total = c.two_body + c.three_body + c.eleven_body;
  return c;
}

}  // namespace fastgate::fh

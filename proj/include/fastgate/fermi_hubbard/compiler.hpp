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

#include <vector>

#include "fastgate/fermi_hubbard/embedding.hpp"

namespace fastgate::fh {

enum class GateKind { gp, swap, rotation };

/// Operands are ion ids (logical qubits, or spectators for SWAPs through
/// sites outside the term). Rotations use only `a`.
struct Gate {
  GateKind kind;
  int a = -1;
  int b = -1;
  bool diagonal = false;
};

enum class HubPolicy {
  /// A hub that needs no SWAPs if the term has one (lowest index first),
  /// otherwise the term's lowest-index qubit.
  anchored,
  /// Whichever support qubit gives the fewest GP gates, ties to lower index.
  cheapest,
};

struct CompiledTerm {
  PauliTerm term;
  int hub = -1;
  std::vector<Gate> gates;
  int gp_gate_count = 0;      // GP gates, SWAP counted as 3
  int diagonal_gp_count = 0;  // the part of gp_gate_count on diagonal links
  int swap_count = 0;
};

/// Arity 1: one rotation. Arity 2: SWAPs to adjacency, one GP gate, SWAPs
/// undone. Higher arity: forward UMQ (hub walks to each spoke, GP on contact),
/// hub rotation, then the forward list reversed. Throws RoutingError if a
/// spoke cannot be reached.
CompiledTerm compile_term(const PauliTerm& term, const QubitEmbedding& emb,
                          HubPolicy policy = HubPolicy::anchored);

struct TrotterCensus {
  int two_body_terms = 0;
  int three_body_terms = 0;
  int eleven_body_terms = 0;
  int single_qubit_terms = 0;
  long long two_body = 0;  // GP gates per Trotter step by term kind
  long long three_body = 0;
  long long eleven_body = 0;
  long long total = 0;
  long long diagonal_ops = 0;
  long long swaps = 0;
};

/// Term kinds map to census buckets: on-site ZZ -> two-body, row hopping ->
/// three-body, column hopping -> eleven-body (their arity on a width-5
/// lattice).
TrotterCensus count_trotter_step(const JWHamiltonian& hamiltonian, const QubitEmbedding& emb,
                                 HubPolicy policy = HubPolicy::anchored);

}  // namespace fastgate::fh

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

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fastgate::fh {

enum class Pauli : std::uint8_t { I, X, Y, Z };

char pauli_char(Pauli p);

/// Tensor product of single-qubit Paulis on up to 64 qubits, stored as
/// symplectic bit masks (X: x, Z: z, Y: x and z).
class PauliString {
 public:
  static constexpr int kMaxQubits = 64;

  PauliString() = default;
  static PauliString single(int qubit, Pauli p);

  Pauli at(int qubit) const;
  void set(int qubit, Pauli p);
  int arity() const;
  bool is_identity() const { return x_ == 0 && z_ == 0; }
  /// Qubits with a non-identity factor, ascending.
  std::vector<int> support() const;
  bool commutes_with(const PauliString& other) const;
  /// Only Z factors (or identity).
  bool is_diagonal() const { return x_ == 0; }
  /// e.g. "X3 Z4 X5"; "I" for the identity.
  std::string to_string() const;

  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString&, const PauliString&) = default;

 private:
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

struct PauliProduct {
  std::complex<double> phase;  // one of +-1, +-i
  PauliString op;
};

PauliProduct multiply(const PauliString& a, const PauliString& b);

/// A Hermitian Hamiltonian term: real coefficient times a Pauli string.
struct PauliTerm {
  double coefficient = 0.0;
  PauliString op;

  int arity() const { return op.arity(); }
};

/// Linear combination of Pauli strings with complex coefficients.
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(const PauliString& op, std::complex<double> c = 1.0);

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator*=(std::complex<double> c);
  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);
  friend PauliSum operator*(PauliSum a, std::complex<double> c) { return a *= c; }
  friend PauliSum operator*(std::complex<double> c, PauliSum a) { return a *= c; }

  /// Hermitian conjugate.
  PauliSum adjoint() const;
  /// Drops coefficients with magnitude below tol.
  void prune(double tol = 1e-14);
  const std::map<PauliString, std::complex<double>>& terms() const { return terms_; }
  std::complex<double> coefficient(const PauliString& op) const;

 private:
  std::map<PauliString, std::complex<double>> terms_;
};

}  // namespace fastgate::fh

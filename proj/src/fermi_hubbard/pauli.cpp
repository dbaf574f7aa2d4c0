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

#include "fastgate/fermi_hubbard/pauli.hpp"

#include <bit>
#include <cmath>

#include "fastgate/error.hpp"

namespace fastgate::fh {

namespace {

void check_qubit(int q) {
  if (q < 0 || q >= PauliString::kMaxQubits) {
    throw DomainError("qubit index " + std::to_string(q) + " outside [0, 64)");
  }
}

// Power of i picked up by the single-qubit product a * b.
int phase_power(Pauli a, Pauli b) {
  if (a == Pauli::I || b == Pauli::I || a == b) return 0;
  // XY = iZ, YZ = iX, ZX = iY; reversed order gives -i.
  const int ia = static_cast<int>(a);
  const int ib = static_cast<int>(b);
  return (ib - ia + 3) % 3 == 1 ? 1 : 3;
}

}  // namespace

char pauli_char(Pauli p) {
  constexpr char names[] = {'I', 'X', 'Y', 'Z'};
  return names[static_cast<int>(p)];
}

PauliString PauliString::single(int qubit, Pauli p) {
  PauliString s;
  s.set(qubit, p);
  return s;
}

Pauli PauliString::at(int qubit) const {
  check_qubit(qubit);
  const bool x = (x_ >> qubit) & 1u;
  const bool z = (z_ >> qubit) & 1u;
  if (x && z) return Pauli::Y;
  if (x) return Pauli::X;
  if (z) return Pauli::Z;
  return Pauli::I;
}

void PauliString::set(int qubit, Pauli p) {
  check_qubit(qubit);
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  x_ &= ~bit;
  z_ &= ~bit;
  if (p == Pauli::X || p == Pauli::Y) x_ |= bit;
  if (p == Pauli::Z || p == Pauli::Y) z_ |= bit;
}

int PauliString::arity() const { return std::popcount(x_ | z_); }

std::vector<int> PauliString::support() const {
  std::vector<int> out;
  std::uint64_t m = x_ | z_;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

bool PauliString::commutes_with(const PauliString& other) const {
  return std::popcount((x_ & other.z_) ^ (z_ & other.x_)) % 2 == 0;
}

std::string PauliString::to_string() const {
  if (is_identity()) return "I";
  std::string out;
  for (int q : support()) {
    if (!out.empty()) out += ' ';
    out += pauli_char(at(q));
    out += std::to_string(q);
  }
  return out;
}

PauliProduct multiply(const PauliString& a, const PauliString& b) {
  int power = 0;
  std::uint64_t both = (a.x_mask() | a.z_mask()) & (b.x_mask() | b.z_mask());
  while (both) {
    const int q = std::countr_zero(both);
    power += phase_power(a.at(q), b.at(q));
    both &= both - 1;
  }
  PauliString op;
  std::uint64_t all = a.x_mask() | a.z_mask() | b.x_mask() | b.z_mask();
  const std::uint64_t x = a.x_mask() ^ b.x_mask();
  const std::uint64_t z = a.z_mask() ^ b.z_mask();
  while (all) {
    const int q = std::countr_zero(all);
    const bool xb = (x >> q) & 1u;
    const bool zb = (z >> q) & 1u;
    op.set(q, xb && zb ? Pauli::Y : xb ? Pauli::X : zb ? Pauli::Z : Pauli::I);
    all &= all - 1;
  }
  constexpr std::complex<double> powers[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return {powers[power % 4], op};
}

PauliSum::PauliSum(const PauliString& op, std::complex<double> c) { terms_[op] = c; }

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  for (const auto& [op, c] : other.terms_) terms_[op] += c;
  return *this;
}

PauliSum& PauliSum::operator*=(std::complex<double> c) {
  for (auto& [op, v] : terms_) v *= c;
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  PauliSum out;
  for (const auto& [pa, ca] : a.terms_) {
    for (const auto& [pb, cb] : b.terms_) {
      const PauliProduct p = multiply(pa, pb);
      out.terms_[p.op] += ca * cb * p.phase;
    }
  }
  return out;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out;
  for (const auto& [op, c] : terms_) out.terms_[op] = std::conj(c);
  return out;
}

void PauliSum::prune(double tol) {
  std::erase_if(terms_, [tol](const auto& kv) { return std::abs(kv.second) < tol; });
}

std::complex<double> PauliSum::coefficient(const PauliString& op) const {
  const auto it = terms_.find(op);
  return it == terms_.end() ? std::complex<double>{} : it->second;
}

}  // namespace fastgate::fh

// Copyright 2026 The holocode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOLOCODE_PAULI_H
#define HOLOCODE_PAULI_H

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace holocode {

/// Packed bit vector over GF(2).
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(size_t size);

  /// Parses a string of '0'/'1' characters, index 0 first.
  static BitVector from_string(std::string_view bits);

  size_t size() const { return size_; }
  bool operator[](size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i, bool value);
  void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& other);
  size_t popcount() const;
  bool any() const;

  std::span<const uint64_t> words() const { return words_; }
  std::span<uint64_t> words() { return words_; }

  std::string to_string() const;

  bool operator==(const BitVector&) const = default;

 private:
  size_t size_ = 0;
  std::vector<uint64_t> words_;
};

/// Parity of popcount(a & b).
bool and_parity(const BitVector& a, const BitVector& b);

/// Single-qubit Pauli class. The numeric order I < X < Y < Z is used for
/// prior vectors, tensor indices and argmax tie-breaking.
enum class Pauli : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

constexpr bool x_bit(Pauli p) { return p == Pauli::X || p == Pauli::Y; }
constexpr bool z_bit(Pauli p) { return p == Pauli::Z || p == Pauli::Y; }
constexpr Pauli make_pauli(bool x, bool z) {
  return x ? (z ? Pauli::Y : Pauli::X) : (z ? Pauli::Z : Pauli::I);
}
/// Phaseless product.
constexpr Pauli operator*(Pauli a, Pauli b) {
  return make_pauli(x_bit(a) != x_bit(b), z_bit(a) != z_bit(b));
}
constexpr size_t index(Pauli p) { return static_cast<size_t>(p); }
constexpr std::array<Pauli, 4> kAllPaulis = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};

char to_char(Pauli p);
Pauli pauli_from_char(char c);

/// Phaseless n-qubit Pauli operator stored as packed X and Z bit planes.
/// Y on qubit i is x[i] = z[i] = 1.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(size_t num_qubits) : x_(num_qubits), z_(num_qubits) {}
  PauliString(BitVector x, BitVector z);

  /// Text form: one character from {I,X,Y,Z} per qubit, qubit 0 first.
  static PauliString from_string(std::string_view text);
  std::string to_string() const;

  size_t num_qubits() const { return x_.size(); }
  Pauli get(size_t q) const { return make_pauli(x_[q], z_[q]); }
  void set(size_t q, Pauli p);

  const BitVector& x() const { return x_; }
  const BitVector& z() const { return z_; }
  BitVector& x() { return x_; }
  BitVector& z() { return z_; }

  size_t weight() const;
  bool is_identity() const { return !x_.any() && !z_.any(); }

  /// In-place phaseless product.
  PauliString& operator*=(const PauliString& other);

  bool operator==(const PauliString&) const = default;

 private:
  BitVector x_;
  BitVector z_;
};

/// 1 iff a and b anticommute. Throws std::invalid_argument on size mismatch.
bool symplectic_product(const PauliString& a, const PauliString& b);

/// Phaseless product (componentwise XOR).
PauliString multiply(const PauliString& a, const PauliString& b);
inline PauliString operator*(const PauliString& a, const PauliString& b) { return multiply(a, b); }

std::vector<PauliString> parse_paulis(std::span<const std::string> texts);

/// Row-reduced basis of a GF(2) span of Pauli operators.
struct RowBasis {
  std::vector<PauliString> rows;
  size_t rank() const { return rows.size(); }
};

/// Gaussian elimination over the 2n symplectic columns, ordered
/// x0, z0, x1, z1, ... The returned rows are in reduced row echelon form,
/// which makes the basis canonical for a given span.
RowBasis rref(std::span<const PauliString> rows);

/// True iff op lies in the GF(2) span of basis.
bool contains(std::span<const PauliString> basis, const PauliString& op);

/// True iff the two lists span the same group.
bool same_span(std::span<const PauliString> a, std::span<const PauliString> b);

}  // namespace holocode

#endif  // HOLOCODE_PAULI_H

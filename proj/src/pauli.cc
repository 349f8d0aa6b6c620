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

#include "holocode/pauli.h"

#include <stdexcept>
#include <utility>

namespace holocode {

BitVector::BitVector(size_t size) : size_(size), words_((size + 63) / 64, 0) {}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector result(bits.size());
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      result.set(i, true);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string may only contain '0' and '1', got '" +
                                  std::string(bits) + "'");
    }
  }
  return result;
}

void BitVector::set(size_t i, bool value) {
  uint64_t mask = uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) {
    throw std::invalid_argument("bit vector size mismatch");
  }
  for (size_t w = 0; w < words_.size(); ++w) {
    words_[w] ^= other.words_[w];
  }
  return *this;
}

size_t BitVector::popcount() const {
  size_t total = 0;
  for (uint64_t w : words_) {
    total += static_cast<size_t>(std::popcount(w));
  }
  return total;
}

bool BitVector::any() const {
  for (uint64_t w : words_) {
    if (w) return true;
  }
  return false;
}

std::string BitVector::to_string() const {
  std::string out(size_, '0');
  for (size_t i = 0; i < size_; ++i) {
    if ((*this)[i]) out[i] = '1';
  }
  return out;
}

bool and_parity(const BitVector& a, const BitVector& b) {
  auto wa = a.words();
  auto wb = b.words();
  uint64_t acc = 0;
  for (size_t w = 0; w < wa.size(); ++w) {
    acc ^= wa[w] & wb[w];
  }
  return std::popcount(acc) & 1;
}

char to_char(Pauli p) { return "IXYZ"[index(p)]; }

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I':
    case '_':
      return Pauli::I;
    case 'X':
      return Pauli::X;
    case 'Y':
      return Pauli::Y;
    case 'Z':
      return Pauli::Z;
    default:
      throw std::invalid_argument(std::string("not a Pauli character: '") + c + "'");
  }
}

PauliString::PauliString(BitVector x, BitVector z) : x_(std::move(x)), z_(std::move(z)) {
  if (x_.size() != z_.size()) {
    throw std::invalid_argument("X and Z planes must have the same length");
  }
}

PauliString PauliString::from_string(std::string_view text) {
  PauliString result(text.size());
  for (size_t q = 0; q < text.size(); ++q) {
    result.set(q, pauli_from_char(text[q]));
  }
  return result;
}

std::string PauliString::to_string() const {
  std::string out(num_qubits(), 'I');
  for (size_t q = 0; q < num_qubits(); ++q) {
    out[q] = to_char(get(q));
  }
  return out;
}

void PauliString::set(size_t q, Pauli p) {
  x_.set(q, x_bit(p));
  z_.set(q, z_bit(p));
}

size_t PauliString::weight() const {
  size_t total = 0;
  auto wx = x_.words();
  auto wz = z_.words();
  for (size_t w = 0; w < wx.size(); ++w) {
    total += static_cast<size_t>(std::popcount(wx[w] | wz[w]));
  }
  return total;
}

PauliString& PauliString::operator*=(const PauliString& other) {
  if (other.num_qubits() != num_qubits()) {
    throw std::invalid_argument("Pauli operators act on different qubit counts (" +
                                std::to_string(num_qubits()) + " vs " +
                                std::to_string(other.num_qubits()) + ")");
  }
  x_ ^= other.x_;
  z_ ^= other.z_;
  return *this;
}

bool symplectic_product(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("symplectic product of operators on " +
                                std::to_string(a.num_qubits()) + " and " +
                                std::to_string(b.num_qubits()) + " qubits");
  }
  return and_parity(a.x(), b.z()) != and_parity(a.z(), b.x());
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  PauliString result = a;
  result *= b;
  return result;
}

std::vector<PauliString> parse_paulis(std::span<const std::string> texts) {
  std::vector<PauliString> out;
  out.reserve(texts.size());
  for (const auto& t : texts) {
    out.push_back(PauliString::from_string(t));
  }
  return out;
}

namespace {

bool column_bit(const PauliString& p, size_t column) {
  size_t q = column >> 1;
  return (column & 1) ? p.z()[q] : p.x()[q];
}

}  // namespace

RowBasis rref(std::span<const PauliString> rows) {
  RowBasis basis;
  if (rows.empty()) return basis;
  const size_t n = rows.front().num_qubits();
  std::vector<PauliString> work(rows.begin(), rows.end());
  for (const auto& r : work) {
    if (r.num_qubits() != n) {
      throw std::invalid_argument("rref rows act on different qubit counts");
    }
  }
  size_t rank = 0;
  for (size_t col = 0; col < 2 * n && rank < work.size(); ++col) {
    size_t pivot = rank;
    while (pivot < work.size() && !column_bit(work[pivot], col)) ++pivot;
    if (pivot == work.size()) continue;
    std::swap(work[rank], work[pivot]);
    for (size_t r = 0; r < work.size(); ++r) {
      if (r != rank && column_bit(work[r], col)) work[r] *= work[rank];
    }
    ++rank;
  }
  work.resize(rank);
  basis.rows = std::move(work);
  return basis;
}

bool contains(std::span<const PauliString> basis, const PauliString& op) {
  std::vector<PauliString> rows(basis.begin(), basis.end());
  for (const auto& r : rows) {
    if (r.num_qubits() != op.num_qubits()) {
      throw std::invalid_argument("membership test across different qubit counts");
    }
  }
  size_t before = rref(rows).rank();
  rows.push_back(op);
  return rref(rows).rank() == before;
}

bool same_span(std::span<const PauliString> a, std::span<const PauliString> b) {
  return rref(a).rows == rref(b).rows;
}

}  // namespace holocode

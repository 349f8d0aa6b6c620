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

#include "holocode/stabilizer_code.h"

#include <functional>
#include <stdexcept>

namespace holocode {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

std::vector<std::string> check_generators(const StabilizerCode& code) {
  std::vector<std::string> problems;
  const size_t n = code.n;
  auto check_size = [&](const std::vector<PauliString>& ops, const char* what) {
    for (size_t i = 0; i < ops.size(); ++i) {
      if (ops[i].num_qubits() != n) {
        problems.push_back(std::string(what) + "[" + std::to_string(i) + "] acts on " +
                           std::to_string(ops[i].num_qubits()) + " qubits, expected " +
                           std::to_string(n));
      }
    }
  };
  check_size(code.stabilizers, "stabilizer");
  check_size(code.logical_x, "logical_x");
  check_size(code.logical_z, "logical_z");
  if (!problems.empty()) return problems;

  if (code.logical_x.size() != code.k || code.logical_z.size() != code.k) {
    problems.push_back("expected " + std::to_string(code.k) + " logical X and Z operators");
    return problems;
  }
  if (code.k > 1) {
    problems.push_back("codes with more than one logical qubit are not supported");
    return problems;
  }
  if (code.stabilizers.size() + code.k != n) {
    problems.push_back("expected n - k = " + std::to_string(n - code.k) + " stabilizers, got " +
                       std::to_string(code.stabilizers.size()));
  }
  for (size_t i = 0; i < code.stabilizers.size(); ++i) {
    for (size_t j = i + 1; j < code.stabilizers.size(); ++j) {
      if (symplectic_product(code.stabilizers[i], code.stabilizers[j])) {
        problems.push_back("stabilizers " + std::to_string(i) + " and " + std::to_string(j) +
                           " anticommute");
      }
    }
  }
  for (size_t j = 0; j < code.k; ++j) {
    if (!symplectic_product(code.logical_x[j], code.logical_z[j])) {
      problems.push_back("logical X and Z commute");
    }
    for (size_t i = 0; i < code.stabilizers.size(); ++i) {
      if (symplectic_product(code.logical_x[j], code.stabilizers[i])) {
        problems.push_back("logical X anticommutes with stabilizer " + std::to_string(i));
      }
      if (symplectic_product(code.logical_z[j], code.stabilizers[i])) {
        problems.push_back("logical Z anticommutes with stabilizer " + std::to_string(i));
      }
    }
  }
  std::vector<PauliString> all = code.stabilizers;
  all.insert(all.end(), code.logical_x.begin(), code.logical_x.end());
  all.insert(all.end(), code.logical_z.begin(), code.logical_z.end());
  size_t r = rref(all).rank();
  if (r != all.size()) {
    problems.push_back("generators are dependent (rank " + std::to_string(r) + " of " +
                       std::to_string(all.size()) + ")");
  }
  return problems;
}

// Solves for operators d_i with <row_j, d_i> = delta_ij for every row j of
// `rows`, which must be independent. Returns one operator per row.
std::vector<PauliString> dual_basis(const std::vector<PauliString>& rows, size_t n) {
  const size_t m = rows.size();
  const size_t cols = 2 * n;
  // Row j encodes the functional d -> <rows[j], d> over columns [d.x | d.z],
  // augmented with the identity to record the row operations.
  std::vector<BitVector> work;
  work.reserve(m);
  for (size_t j = 0; j < m; ++j) {
    BitVector v(cols + m);
    for (size_t q = 0; q < n; ++q) {
      if (rows[j].z()[q]) v.set(q, true);
      if (rows[j].x()[q]) v.set(n + q, true);
    }
    v.set(cols + j, true);
    work.push_back(std::move(v));
  }
  std::vector<size_t> pivot_col;
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < m; ++c) {
    size_t p = rank;
    while (p < m && !work[p][c]) ++p;
    if (p == m) continue;
    std::swap(work[rank], work[p]);
    for (size_t r = 0; r < m; ++r) {
      if (r != rank && work[r][c]) work[r] ^= work[rank];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  if (rank != m) {
    throw std::invalid_argument("cannot solve for destabilizers: generators are dependent");
  }
  std::vector<PauliString> result(m, PauliString(n));
  for (size_t r = 0; r < m; ++r) {
    size_t c = pivot_col[r];
    for (size_t i = 0; i < m; ++i) {
      if (!work[r][cols + i]) continue;
      if (c < n) {
        result[i].x().flip(c);
      } else {
        result[i].z().flip(c - n);
      }
    }
  }
  return result;
}

}  // namespace

StabilizerCode make_stabilizer_code(std::vector<PauliString> stabilizers,
                                    std::vector<PauliString> logical_x,
                                    std::vector<PauliString> logical_z) {
  StabilizerCode code;
  if (!stabilizers.empty()) {
    code.n = stabilizers.front().num_qubits();
  } else if (!logical_x.empty()) {
    code.n = logical_x.front().num_qubits();
  }
  code.k = logical_x.size();
  code.stabilizers = std::move(stabilizers);
  code.logical_x = std::move(logical_x);
  code.logical_z = std::move(logical_z);
  auto problems = check_generators(code);
  if (!problems.empty()) {
    throw std::invalid_argument("invalid stabilizer code: " + join(problems));
  }
  std::vector<PauliString> rows = code.stabilizers;
  rows.insert(rows.end(), code.logical_x.begin(), code.logical_x.end());
  rows.insert(rows.end(), code.logical_z.begin(), code.logical_z.end());
  auto dual = dual_basis(rows, code.n);
  dual.resize(code.stabilizers.size());
  code.destabilizers = std::move(dual);
  return code;
}

std::vector<std::string> check_invariants(const StabilizerCode& code) {
  auto problems = check_generators(code);
  if (!problems.empty()) return problems;
  if (code.destabilizers.size() != code.stabilizers.size()) {
    problems.push_back("destabilizer count does not match stabilizer count");
    return problems;
  }
  for (size_t i = 0; i < code.destabilizers.size(); ++i) {
    const auto& d = code.destabilizers[i];
    if (d.num_qubits() != code.n) {
      problems.push_back("destabilizer " + std::to_string(i) + " has the wrong size");
      continue;
    }
    for (size_t j = 0; j < code.stabilizers.size(); ++j) {
      if (symplectic_product(d, code.stabilizers[j]) != (i == j)) {
        problems.push_back("destabilizer " + std::to_string(i) + " has wrong commutation with "
                           "stabilizer " + std::to_string(j));
      }
    }
    for (size_t j = 0; j < code.k; ++j) {
      if (symplectic_product(d, code.logical_x[j]) || symplectic_product(d, code.logical_z[j])) {
        problems.push_back("destabilizer " + std::to_string(i) +
                           " anticommutes with a logical operator");
      }
    }
  }
  return problems;
}

BitVector syndrome(const StabilizerCode& code, const PauliString& error) {
  if (error.num_qubits() != code.n) {
    throw std::invalid_argument("error acts on " + std::to_string(error.num_qubits()) +
                                " qubits, code has " + std::to_string(code.n));
  }
  BitVector s(code.stabilizers.size());
  for (size_t i = 0; i < code.stabilizers.size(); ++i) {
    if (symplectic_product(code.stabilizers[i], error)) s.set(i, true);
  }
  return s;
}

PauliString pure_error(const StabilizerCode& code, const BitVector& s) {
  if (s.size() != code.stabilizers.size()) {
    throw std::invalid_argument("syndrome has " + std::to_string(s.size()) + " bits, code has " +
                                std::to_string(code.stabilizers.size()) + " checks");
  }
  PauliString f(code.n);
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i]) f *= code.destabilizers[i];
  }
  return f;
}

Pauli logical_class_unchecked(const StabilizerCode& code, const PauliString& r) {
  return make_pauli(symplectic_product(r, code.logical_z[0]),
                    symplectic_product(r, code.logical_x[0]));
}

Pauli logical_class(const StabilizerCode& code, const PauliString& r) {
  if (code.k != 1) {
    throw std::domain_error("logical_class requires exactly one logical qubit");
  }
  if (syndrome(code, r).any()) {
    throw std::domain_error("operator " + r.to_string() + " has a nonzero syndrome");
  }
  return logical_class_unchecked(code, r);
}

size_t min_distance(const StabilizerCode& code) {
  if (code.k != 1) {
    throw std::domain_error("min_distance requires exactly one logical qubit");
  }
  if (code.n > kMaxDistanceSearchQubits) {
    throw std::length_error("min_distance search is capped at " +
                            std::to_string(kMaxDistanceSearchQubits) + " qubits, code has " +
                            std::to_string(code.n));
  }
  const size_t n = code.n;
  PauliString candidate(n);
  std::vector<size_t> support;

  // Enumerates all operators of exactly `weight` on increasing qubit indices.
  std::function<bool(size_t, size_t)> search = [&](size_t start, size_t remaining) -> bool {
    if (remaining == 0) {
      return !syndrome(code, candidate).any() &&
             logical_class_unchecked(code, candidate) != Pauli::I;
    }
    for (size_t q = start; q + remaining <= n; ++q) {
      for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
        candidate.set(q, p);
        if (search(q + 1, remaining - 1)) return true;
      }
      candidate.set(q, Pauli::I);
    }
    return false;
  };
  for (size_t w = 1; w <= n; ++w) {
    if (search(0, w)) return w;
  }
  throw std::logic_error("no nontrivial logical operator found");
}

}  // namespace holocode

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

#ifndef HOLOCODE_STABILIZER_CODE_H
#define HOLOCODE_STABILIZER_CODE_H

#include <cstddef>
#include <string>
#include <vector>

#include "holocode/pauli.h"

namespace holocode {

/// Stabilizer code with at most one logical qubit.
///
/// destabilizers[i] anticommutes with stabilizers[i] only and commutes with
/// the logical operators, so the product of the destabilizers selected by a
/// syndrome is a pure error for that syndrome.
struct StabilizerCode {
  size_t n = 0;
  size_t k = 0;
  std::vector<PauliString> stabilizers;
  std::vector<PauliString> logical_x;
  std::vector<PauliString> logical_z;
  std::vector<PauliString> destabilizers;

  size_t num_checks() const { return stabilizers.size(); }
};

/// Validates the generator sets and solves for destabilizers. Throws
/// std::invalid_argument when any invariant listed by check_invariants fails.
StabilizerCode make_stabilizer_code(std::vector<PauliString> stabilizers,
                                    std::vector<PauliString> logical_x,
                                    std::vector<PauliString> logical_z);

/// Human-readable list of violated invariants; empty for a valid code.
std::vector<std::string> check_invariants(const StabilizerCode& code);

BitVector syndrome(const StabilizerCode& code, const PauliString& error);

/// Product of the destabilizers selected by s.
PauliString pure_error(const StabilizerCode& code, const BitVector& s);

/// Logical class of an operator with trivial syndrome. Requires k == 1;
/// throws std::domain_error when r does not commute with every stabilizer.
Pauli logical_class(const StabilizerCode& code, const PauliString& r);

/// Same as logical_class without the syndrome check, for hot loops where the
/// caller guarantees a trivial syndrome.
Pauli logical_class_unchecked(const StabilizerCode& code, const PauliString& r);

inline constexpr size_t kMaxDistanceSearchQubits = 12;

/// Minimum weight of a nontrivial logical operator by weight-ascending
/// exhaustive search. Throws std::length_error above kMaxDistanceSearchQubits.
size_t min_distance(const StabilizerCode& code);

}  // namespace holocode

#endif  // HOLOCODE_STABILIZER_CODE_H

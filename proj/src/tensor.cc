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

#include "holocode/tensor.h"

#include <bit>

namespace holocode {

std::vector<PauliString> enumerate_group(std::span<const PauliString> generators) {
  if (generators.empty()) return {};
  const size_t rank = generators.size();
  if (rank >= 40) {
    throw std::length_error("refusing to enumerate a group of rank " + std::to_string(rank));
  }
  std::vector<PauliString> elements;
  elements.reserve(size_t{1} << rank);
  PauliString g(generators.front().num_qubits());
  elements.push_back(g);
  for (size_t i = 1; i < (size_t{1} << rank); ++i) {
    g *= generators[static_cast<size_t>(std::countr_zero(i))];
    elements.push_back(g);
  }
  return elements;
}

TileTensor indicator_tensor(std::vector<LegLabel> legs, std::span<const PauliString> generators) {
  const size_t m = legs.size();
  if (rref(generators).rank() != generators.size()) {
    throw std::invalid_argument("indicator tensor needs independent generators");
  }
  for (const auto& g : generators) {
    if (g.num_qubits() != m) {
      throw std::invalid_argument("generator size does not match tensor legs");
    }
  }
  auto t = TileTensor::zeros(std::move(legs));
  std::vector<Pauli> index(m);
  auto mark = [&](const PauliString& g) {
    for (size_t j = 0; j < m; ++j) index[j] = g.get(j);
    t.data()[static_cast<Eigen::Index>(TileTensor::flat_index(index))] = 1.0;
  };
  if (generators.empty()) {
    mark(PauliString(m));
    return t;
  }
  for (const auto& g : enumerate_group(generators)) mark(g);
  return t;
}

}  // namespace holocode

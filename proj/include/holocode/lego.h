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

#ifndef HOLOCODE_LEGO_H
#define HOLOCODE_LEGO_H

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "holocode/pauli.h"
#include "holocode/stabilizer_code.h"

namespace holocode {

/// A q-leg stabilizer state. The last leg carries the logical index when the
/// tensor sits at the center of a tiling.
struct SeedTensor {
  std::string name;
  size_t legs = 0;
  std::vector<PauliString> generators;
  size_t logical_leg = 0;
  /// The [[q-1, 1, d]] code obtained by treating the logical leg as input.
  StabilizerCode derived_code;
};

/// The four built-in seeds: "happy", "steane", "613", "scf".
const std::map<std::string, SeedTensor, std::less<>>& seed_library();

/// Throws std::invalid_argument for an unknown name.
const SeedTensor& find_seed(std::string_view name);

using LegId = size_t;

struct Tile {
  std::string seed;
  /// Global leg ids listed in seed leg order.
  std::vector<LegId> legs;
  size_t layer = 0;
};

/// Tiles of one seed glued along contracted legs. Leg ids are 0..num_legs-1
/// and each id belongs to exactly one tile.
struct Tiling {
  std::string seed;
  size_t layers = 0;
  std::vector<Tile> tiles;
  std::vector<std::array<LegId, 2>> contractions;
  std::vector<LegId> boundary_legs;
  LegId logical_leg = 0;

  size_t num_legs() const;
};

/// Throws std::invalid_argument describing the first violated invariant:
/// leg partition, disjoint contractions, tile leg counts, connectivity.
void validate_tiling(const Tiling& tiling);

/// Layered edge inflation. Every layer attaches an edge child to each free
/// leg of the previous layer, except at corners between two neighbouring
/// tiles where a vertex child takes both adjacent legs. Children use all q
/// legs in the plane: inward legs first, then outward legs counterclockwise.
struct InflationRule {
  bool vertex_children = true;
  /// Refuse tilings with more legs than this.
  size_t max_legs = size_t{1} << 18;
};

/// Per-layer counts predicted by the rule before any tiles are built.
struct LayerCounts {
  size_t edge_children = 0;
  size_t vertex_children = 0;
  size_t free_legs = 0;
};
std::vector<LayerCounts> inflation_counts(const SeedTensor& seed, size_t layers,
                                          const InflationRule& rule = {});

Tiling inflate(const SeedTensor& seed, size_t layers, const InflationRule& rule = {});

struct TraceResult {
  std::vector<PauliString> generators;
  /// Independent elements that restricted to the identity and were dropped.
  size_t kernel_rank = 0;
};

/// Contracts legs a and b of a stabilizer group with a Bell pair: keeps the
/// elements acting identically on a and b and deletes those two columns.
TraceResult self_trace(std::span<const PauliString> generators, size_t a, size_t b);

struct HolographicCode {
  StabilizerCode code;
  Tiling tiling;
  /// Dimension of the interior kernel dropped while tracing; the tensor
  /// network overcounts every coset by 2^multiplicity_rank.
  size_t multiplicity_rank = 0;

  /// e.g. "happy_L2".
  std::string name() const;
};

/// Traces the disjoint union of all tile groups along every contraction and
/// splits the result on the logical leg. Throws std::invalid_argument when
/// the tiling does not leave exactly one logical qubit on the boundary.
HolographicCode build_code(const Tiling& tiling);

/// inflate + build_code for a library seed.
HolographicCode build_code(std::string_view seed_name, size_t layers,
                           const InflationRule& rule = {});

/// Splits a full-rank group on m legs into a k = 1 code on the other m - 1
/// legs, using logical_leg as the encoded input.
StabilizerCode split_on_logical_leg(std::span<const PauliString> generators, size_t logical_leg);

}  // namespace holocode

#endif  // HOLOCODE_LEGO_H

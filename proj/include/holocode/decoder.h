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

#ifndef HOLOCODE_DECODER_H
#define HOLOCODE_DECODER_H

#include <array>
#include <cstddef>
#include <vector>

#include "holocode/lego.h"
#include "holocode/noise.h"
#include "holocode/tensor.h"

namespace holocode {

/// Posterior over the four logical classes of a syndrome.
struct ClassDistribution {
  /// Normalized class probabilities, indexed I, X, Y, Z.
  std::array<double, 4> weights{};
  /// Natural log of each unnormalized class mass as produced by the
  /// decoder; -inf for an empty class.
  std::array<double, 4> log_weights{};
  /// Natural log of the syndrome probability (overcount removed).
  double log_total_mass = 0.0;
  /// argmax of weights; masses within kTieTolerance (relative) of the peak
  /// are tied and resolved toward I < X < Y < Z.
  Pauli chosen = Pauli::I;
};

inline constexpr double kTieTolerance = 1e-12;

/// Builds a distribution from scaled masses: true mass = raw * exp(log_scale),
/// and log_overcount is subtracted from the reported total.
ClassDistribution make_class_distribution(const std::array<double, 4>& raw, double log_scale,
                                          double log_overcount = 0.0);

/// Indicator tensor of a tile's stabilizer group, labelled by global leg ids.
TileTensor tile_tensor(const Tile& tile);

inline constexpr size_t kDefaultFrontierCap = 12;

struct MergeStep {
  /// Node indices (tile indices); `source` is absorbed into `target`.
  size_t target = 0;
  size_t source = 0;
  /// Open legs of the merged tensor.
  size_t open_legs = 0;
};

/// Greedy outside-in pairwise merge order over the tiles of a tiling, after
/// all boundary legs have been absorbed into their tiles.
struct ContractionPlan {
  std::vector<MergeStep> steps;
  size_t root = 0;
  size_t max_frontier = 0;
  /// Largest leg count touched by a single merge (free plus summed legs).
  size_t max_merge_legs = 0;
};

/// Throws std::runtime_error naming the offending merge when any
/// intermediate tensor would exceed frontier_cap open legs.
ContractionPlan plan_contraction(const Tiling& tiling, size_t frontier_cap = kDefaultFrontierCap);

/// Exact maximum-likelihood decoder: contracts the tile indicator tensors
/// with boundary priors shifted by the pure error and reads the logical leg.
///
/// Immutable after construction; decode() may run concurrently.
class TensorNetworkDecoder {
 public:
  explicit TensorNetworkDecoder(HolographicCode code, size_t frontier_cap = kDefaultFrontierCap);

  ClassDistribution decode(const BitVector& syndrome, const ChannelSpec& spec) const;

  /// Same as decode() given the pure error directly.
  ClassDistribution decode_pure_error(const PauliString& pure_error,
                                      const ChannelSpec& spec) const;

  const HolographicCode& holographic_code() const { return code_; }
  const StabilizerCode& code() const { return code_.code; }
  const ContractionPlan& plan() const { return plan_; }

 private:
  struct TileElements {
    /// Leg labels of the tensor left after boundary absorption.
    std::vector<LegLabel> open_legs;
    /// Boundary qubit index for each boundary position of the tile.
    std::vector<size_t> boundary_qubits;
    /// Per group element: flat index over open_legs.
    std::vector<uint32_t> open_index;
    /// Per group element: Pauli index on each boundary position, row-major.
    std::vector<uint8_t> boundary_paulis;
  };

  HolographicCode code_;
  ContractionPlan plan_;
  std::vector<TileElements> tiles_;
};

/// One-shot convenience wrapper around TensorNetworkDecoder.
ClassDistribution decode_ml(const HolographicCode& code, const BitVector& syndrome,
                            const ChannelSpec& spec, size_t frontier_cap = kDefaultFrontierCap);

inline constexpr size_t kMaxOracleChecks = 26;

/// Brute-force coset sums over all 2^(n-k) stabilizer group elements.
/// Refuses codes with more than kMaxOracleChecks stabilizers.
ClassDistribution decode_oracle(const StabilizerCode& code, const BitVector& syndrome,
                                const ChannelSpec& spec);

/// Histogram of (#X, #Y, #Z) counts over each logical coset of a syndrome,
/// which the oracle reuses across channels. Requires n <= 63.
class CosetEnumerator {
 public:
  CosetEnumerator(const StabilizerCode& code, const BitVector& syndrome);
  ClassDistribution evaluate(const ChannelSpec& spec) const;

 private:
  size_t n_ = 0;
  // counts_[c] maps (nx * (n+1) + ny) * (n+1) + nz to a multiplicity.
  std::array<std::vector<uint64_t>, 4> counts_;
};

}  // namespace holocode

#endif  // HOLOCODE_DECODER_H

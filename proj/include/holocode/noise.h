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

#ifndef HOLOCODE_NOISE_H
#define HOLOCODE_NOISE_H

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "holocode/pauli.h"

namespace holocode {

enum class Axis { X, Y, Z };

char to_char(Axis a);
Axis axis_from_char(char c);

/// Relative error probabilities (r_x, r_y, r_z); they sum to one.
struct BiasVector {
  double x = 1.0 / 3;
  double y = 1.0 / 3;
  double z = 1.0 / 3;

  /// Throws std::invalid_argument unless every component is in [0, 1] and
  /// the sum is one within 1e-12.
  static BiasVector make(double x, double y, double z);
  static BiasVector depolarizing() { return {1.0 / 3, 1.0 / 3, 1.0 / 3}; }

  double operator[](Axis a) const;
  bool operator==(const BiasVector&) const = default;
};

/// Approximate equality used to deduplicate grids.
bool nearly_equal(const BiasVector& a, const BiasVector& b, double tol = 1e-12);

/// On-axis component eta / (1 + eta), the other two 1 / (2 (1 + eta)).
/// eta = +inf is the pure single-Pauli channel, eta = 0 the pure two-Pauli
/// channel. Throws std::invalid_argument for negative or NaN eta.
BiasVector bias_from_eta(Axis axis, double eta);

/// Recovers (axis, eta) when two components are equal; Z is tried first.
std::optional<std::pair<Axis, double>> eta_of(const BiasVector& bias);

/// The sixteen bias values swept per axis: 0 ... 1000 and +inf.
std::vector<double> eta_sweep_values();

struct ChannelSpec {
  double p = 0.0;
  BiasVector bias;

  /// Throws std::invalid_argument unless p is in [0, 1].
  static ChannelSpec make(double p, BiasVector bias);
};

/// (1 - p, p r_x, p r_y, p r_z), indexed by Pauli order I, X, Y, Z.
Eigen::Array4d single_qubit_prior(const ChannelSpec& spec);

/// Fixed engine so that seeded streams are identical on every platform.
using Rng = std::mt19937_64;

/// SplitMix64-style mixing of a base seed with a stream index.
uint64_t derive_seed(uint64_t base, uint64_t index);

/// Uniform double in [0, 1) built from the top 53 bits of one draw.
double uniform01(Rng& rng);

/// IID draw from single_qubit_prior on every qubit.
PauliString sample_error(size_t n, const ChannelSpec& spec, Rng& rng);

/// All simplex points (i/m, j/m, k/m) with i + j + k = m, followed by the
/// extras that are not already present.
std::vector<BiasVector> ternary_grid(size_t resolution, std::span<const BiasVector> extras = {});

/// Pure X, Y, Z; pure XY, YZ, XZ; depolarizing.
std::vector<BiasVector> special_biases();

inline constexpr size_t kDefaultTernaryResolution = 4;

/// ternary_grid(kDefaultTernaryResolution, special_biases()).
std::vector<BiasVector> default_ternary_grid();

/// Accepts "Z:10", "X:inf", "inf" (pure Z), "depolarizing", or an explicit
/// triple "0.25,0.25,0.5" whose entries may be fractions like "1/3".
BiasVector parse_bias(std::string_view text);

std::string format_bias(const BiasVector& bias);

}  // namespace holocode

#endif  // HOLOCODE_NOISE_H

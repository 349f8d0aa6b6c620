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

#ifndef HOLOCODE_THRESHOLD_H
#define HOLOCODE_THRESHOLD_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "holocode/decoder.h"
#include "holocode/noise.h"
#include "holocode/stabilizer_code.h"

namespace holocode {

/// Wilson score interval for a binomial proportion.
std::pair<double, double> wilson_interval(size_t failures, size_t shots, double z = 1.96);

struct ErrorRate {
  size_t shots = 0;
  size_t failures = 0;
  double rate = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

/// Monte Carlo logical error rate of the decoder. Shot i draws its error
/// from an engine seeded with derive_seed(seed, i), so the result does not
/// depend on the thread count. threads == 0 uses the hardware concurrency.
ErrorRate logical_error_rate(const TensorNetworkDecoder& decoder, const ChannelSpec& spec,
                             size_t shots, uint64_t seed, size_t threads = 0);

inline constexpr size_t kMaxExactChecks = 12;

/// Failure probability of the maximum-likelihood decoder, summed exactly
/// over every syndrome with the brute-force coset oracle.
double exact_failure_probability(const StabilizerCode& code, const ChannelSpec& spec);

struct CurvePoint {
  double p = 0.0;
  size_t failures = 0;
  size_t shots = 0;
};

/// Logical error rates of one code size over a p-grid.
struct LayerCurve {
  size_t layers = 0;
  std::vector<CurvePoint> points;
};

struct Crossing {
  size_t smaller_layers = 0;
  size_t larger_layers = 0;
  double p = 0.0;
  double sigma = 0.0;
  /// True when the curves meet at a grid point without changing order.
  bool tangential = false;
};

struct ThresholdEstimate {
  bool found = false;
  double p_th = 0.0;
  double sigma = 0.0;
  std::vector<Crossing> crossings;
};

/// Locates where consecutive layer curves cross, by linear interpolation of
/// the rate difference between the bracketing grid points. p_th is the mean
/// crossing; sigma combines the crossing spread with the binomial error
/// propagated through the interpolation. Returns found == false when no
/// pair of curves meets inside the grid.
ThresholdEstimate estimate_threshold(std::span<const LayerCurve> curves);

}  // namespace holocode

#endif  // HOLOCODE_THRESHOLD_H

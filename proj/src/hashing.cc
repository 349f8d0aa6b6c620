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

#include "holocode/hashing.h"

#include <cmath>

namespace holocode {

namespace {

double plogp(double q) { return q > 0.0 ? q * std::log2(q) : 0.0; }

}  // namespace

double channel_entropy(const ChannelSpec& spec) {
  const Eigen::Array4d prior = single_qubit_prior(spec);
  double h = 0.0;
  for (int i = 0; i < 4; ++i) h -= plogp(prior[i]);
  return h;
}

double hashing_rate(const ChannelSpec& spec) { return 1.0 - channel_entropy(spec); }

double entropy_peak(const BiasVector& bias) {
  // dH/dp = 0 at (1 - p) / p = exp(-H(r)) with H(r) in nats.
  double h_r = 0.0;
  for (double r : {bias.x, bias.y, bias.z}) {
    if (r > 0.0) h_r -= r * std::log(r);
  }
  return 1.0 / (1.0 + std::exp(-h_r));
}

double zero_rate_point(const BiasVector& bias) {
  double lo = 0.0;
  double hi = entropy_peak(bias);
  // H(hi) >= 1 for every bias, with equality only for the pure channels,
  // where the rate touches zero at the peak without crossing.
  if (hashing_rate({hi, bias}) >= -1e-12) return hi;
  while (hi - lo > 1e-12) {
    double mid = 0.5 * (lo + hi);
    if (hashing_rate({mid, bias}) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace holocode

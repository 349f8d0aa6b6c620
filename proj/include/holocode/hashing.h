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

#ifndef HOLOCODE_HASHING_H
#define HOLOCODE_HASHING_H

#include "holocode/noise.h"

namespace holocode {

/// Shannon entropy in bits of the four outcomes (1 - p, p r_x, p r_y, p r_z),
/// with 0 log 0 = 0. The identity outcome is included.
double channel_entropy(const ChannelSpec& spec);

/// Hashing rate 1 - H. Negative above the zero-rate point.
double hashing_rate(const ChannelSpec& spec);

/// Error probability maximizing the channel entropy for a fixed bias.
double entropy_peak(const BiasVector& bias);

/// Smallest p with zero hashing rate, bisected to 1e-12 on (0, entropy_peak].
double zero_rate_point(const BiasVector& bias);

}  // namespace holocode

#endif  // HOLOCODE_HASHING_H

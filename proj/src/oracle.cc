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

#include <bit>
#include <cmath>
#include <stdexcept>

#include "holocode/decoder.h"

namespace holocode {

namespace {

uint64_t low_word(const BitVector& v) { return v.words().empty() ? 0 : v.words()[0]; }

}  // namespace

CosetEnumerator::CosetEnumerator(const StabilizerCode& code, const BitVector& syndrome)
    : n_(code.n) {
  if (code.k != 1) {
    throw std::domain_error("coset enumeration requires exactly one logical qubit");
  }
  if (code.n > 63) {
    throw std::length_error("coset enumeration supports at most 63 qubits");
  }
  if (code.num_checks() > kMaxOracleChecks) {
    throw std::length_error("oracle refuses to enumerate 2^" + std::to_string(code.num_checks()) +
                            " stabilizer elements (limit 2^" + std::to_string(kMaxOracleChecks) +
                            ")");
  }
  const PauliString f = pure_error(code, syndrome);
  const PauliString reps[4] = {PauliString(code.n), code.logical_x[0],
                               code.logical_x[0] * code.logical_z[0], code.logical_z[0]};
  uint64_t base_x[4], base_z[4];
  for (size_t c = 0; c < 4; ++c) {
    PauliString b = f * reps[c];
    base_x[c] = low_word(b.x());
    base_z[c] = low_word(b.z());
  }
  const size_t m = code.num_checks();
  std::vector<uint64_t> gx(m), gz(m);
  for (size_t i = 0; i < m; ++i) {
    gx[i] = low_word(code.stabilizers[i].x());
    gz[i] = low_word(code.stabilizers[i].z());
  }
  const size_t side = n_ + 1;
  for (auto& c : counts_) c.assign(side * side * side, 0);

  uint64_t sx = 0, sz = 0;
  const uint64_t total = uint64_t{1} << m;
  for (uint64_t i = 0;; ++i) {
    for (size_t c = 0; c < 4; ++c) {
      uint64_t x = sx ^ base_x[c];
      uint64_t z = sz ^ base_z[c];
      size_t ny = static_cast<size_t>(std::popcount(x & z));
      size_t nx = static_cast<size_t>(std::popcount(x)) - ny;
      size_t nz = static_cast<size_t>(std::popcount(z)) - ny;
      ++counts_[c][(nx * side + ny) * side + nz];
    }
    if (i + 1 == total) break;
    size_t flip = static_cast<size_t>(std::countr_zero(i + 1));
    sx ^= gx[flip];
    sz ^= gz[flip];
  }
}

ClassDistribution CosetEnumerator::evaluate(const ChannelSpec& spec) const {
  const Eigen::Array4d prior = single_qubit_prior(spec);
  const size_t side = n_ + 1;
  std::array<double, 4> raw{};
  for (size_t c = 0; c < 4; ++c) {
    double sum = 0.0;
    for (size_t nx = 0; nx <= n_; ++nx) {
      for (size_t ny = 0; nx + ny <= n_; ++ny) {
        for (size_t nz = 0; nx + ny + nz <= n_; ++nz) {
          uint64_t count = counts_[c][(nx * side + ny) * side + nz];
          if (count == 0) continue;
          int ni = static_cast<int>(n_ - nx - ny - nz);
          sum += static_cast<double>(count) * std::pow(prior[0], ni) *
                 std::pow(prior[1], static_cast<int>(nx)) *
                 std::pow(prior[2], static_cast<int>(ny)) *
                 std::pow(prior[3], static_cast<int>(nz));
        }
      }
    }
    raw[c] = sum;
  }
  return make_class_distribution(raw, 0.0);
}

ClassDistribution decode_oracle(const StabilizerCode& code, const BitVector& syndrome,
                                const ChannelSpec& spec) {
  return CosetEnumerator(code, syndrome).evaluate(spec);
}

}  // namespace holocode

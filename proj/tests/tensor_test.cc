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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "holocode/lego.h"

namespace holocode {
namespace {

std::vector<Pauli> digits(size_t flat, size_t legs) {
  std::vector<Pauli> out(legs);
  for (size_t i = legs; i-- > 0;) {
    out[i] = static_cast<Pauli>(flat & 3);
    flat >>= 2;
  }
  return out;
}

TileTensor random_tensor(std::vector<LegLabel> legs, std::mt19937_64& rng) {
  auto t = TileTensor::zeros(std::move(legs));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (Eigen::Index i = 0; i < t.data().size(); ++i) t.data()[i] = u(rng);
  return t;
}

TEST(Tensor, SingleQubitIndicator) {
  std::vector<PauliString> gens = {PauliString::from_string("Z")};
  TileTensor t = indicator_tensor({0}, gens);
  EXPECT_EQ(t.data().size(), 4);
  EXPECT_EQ(t.data()[0], 1.0);
  EXPECT_EQ(t.data()[1], 0.0);
  EXPECT_EQ(t.data()[2], 0.0);
  EXPECT_EQ(t.data()[3], 1.0);
}

TEST(Tensor, SeedIndicators) {
  for (const auto& [name, seed] : seed_library()) {
    SCOPED_TRACE(name);
    std::vector<LegLabel> legs(seed.legs);
    for (size_t i = 0; i < legs.size(); ++i) legs[i] = i;
    TileTensor t = indicator_tensor(legs, seed.generators);
    EXPECT_EQ(static_cast<size_t>(t.data().size()), dense_size(seed.legs));
    EXPECT_EQ(t.data().sum(), std::ldexp(1.0, static_cast<int>(seed.legs)));
    EXPECT_EQ(t.data()[0], 1.0);
    for (Eigen::Index i = 0; i < t.data().size(); ++i) {
      EXPECT_TRUE(t.data()[i] == 0.0 || t.data()[i] == 1.0);
    }
    for (const auto& g : seed.generators) {
      std::vector<Pauli> idx(seed.legs);
      for (size_t j = 0; j < seed.legs; ++j) idx[j] = g.get(j);
      EXPECT_EQ(t(idx), 1.0);
    }
  }
}

TEST(Tensor, BoundaryPriors) {
  const Eigen::Array4d uniform = Eigen::Array4d::Constant(0.25);
  const auto& seed = find_seed("happy");
  TileTensor t = indicator_tensor({0, 1, 2, 3, 4, 5}, seed.generators);
  TileTensor identity_slice = attach_boundary_prior(t, 2, Eigen::Array4d(1, 0, 0, 0).eval());
  EXPECT_EQ(identity_slice.num_legs(), 5u);
  for (size_t flat = 0; flat < dense_size(5); ++flat) {
    auto d = digits(flat, 5);
    std::vector<Pauli> full = {d[0], d[1], Pauli::I, d[2], d[3], d[4]};
    EXPECT_EQ(identity_slice.data()[static_cast<Eigen::Index>(flat)], t(full));
  }
  TileTensor r = t;
  for (LegLabel l = 0; l < 6; ++l) r = attach_boundary_prior(r, l, uniform);
  EXPECT_EQ(r.num_legs(), 0u);
  EXPECT_NEAR(r.data()[0], 64.0 / 4096.0, 1e-15);
  std::vector<PauliString> z = {PauliString::from_string("Z")};
  TileTensor one = attach_boundary_prior(indicator_tensor({7}, z), 7, uniform);
  EXPECT_NEAR(one.data()[0], 2.0 / 4.0, 1e-15);
  EXPECT_THROW(attach_boundary_prior(t, 9, uniform), std::invalid_argument);
}

TEST(Tensor, ContractMatchesExplicitSum) {
  std::mt19937_64 rng(8);
  // a(1, 2, 3, 4) b(5, 3, 1, 6): shared legs 1 and 3.
  TileTensor a = random_tensor({1, 2, 3, 4}, rng);
  TileTensor b = random_tensor({5, 3, 1, 6}, rng);
  a.set_log_scale(0.5);
  b.set_log_scale(-0.25);
  TileTensor c = contract(a, b);
  ASSERT_EQ(c.legs(), (std::vector<LegLabel>{2, 4, 5, 6}));
  EXPECT_EQ(c.log_scale(), 0.25);
  for (size_t flat = 0; flat < dense_size(4); ++flat) {
    auto o = digits(flat, 4);  // legs 2, 4, 5, 6
    double sum = 0.0;
    for (Pauli l1 : kAllPaulis) {
      for (Pauli l3 : kAllPaulis) {
        std::vector<Pauli> ia = {l1, o[0], l3, o[1]};
        std::vector<Pauli> ib = {o[2], l3, l1, o[3]};
        sum += a(ia) * b(ib);
      }
    }
    EXPECT_NEAR(c.data()[static_cast<Eigen::Index>(flat)], sum, 1e-12);
  }
}

TEST(Tensor, PermuteRoundTrip) {
  std::mt19937_64 rng(9);
  TileTensor a = random_tensor({4, 8, 15, 16, 23}, rng);
  std::vector<LegLabel> order = {23, 4, 16, 8, 15};
  TileTensor p = permute(a, order);
  for (size_t flat = 0; flat < dense_size(5); ++flat) {
    auto d = digits(flat, 5);  // in a's order
    std::vector<Pauli> pd = {d[4], d[0], d[3], d[1], d[2]};
    EXPECT_EQ(p(pd), a(d));
  }
  TileTensor back = permute(p, a.legs());
  EXPECT_EQ(back.data(), a.data());
}

TEST(Tensor, NormalizeKeepsValue) {
  std::mt19937_64 rng(10);
  TileTensor a = random_tensor({0, 1}, rng);
  a.data() *= 1e-200;
  TileTensor n = a;
  n.normalize();
  EXPECT_EQ(n.data().maxCoeff(), 1.0);
  for (Eigen::Index i = 0; i < a.data().size(); ++i) {
    EXPECT_NEAR(n.data()[i] * std::exp(n.log_scale()) / a.data()[i], 1.0, 1e-12);
  }
}

TEST(Tensor, RejectsDependentGenerators) {
  std::vector<PauliString> dep = {PauliString::from_string("XX"), PauliString::from_string("XX")};
  EXPECT_THROW(indicator_tensor({0, 1}, dep), std::invalid_argument);
}

}  // namespace
}  // namespace holocode

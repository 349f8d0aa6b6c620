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

#include "holocode/decoder.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace holocode {
namespace {

BitVector bits_of(uint64_t v, size_t m) {
  BitVector s(m);
  for (size_t i = 0; i < m; ++i) s.set(i, (v >> i) & 1);
  return s;
}

BitVector random_bits(size_t m, std::mt19937_64& rng) {
  BitVector s(m);
  for (size_t i = 0; i < m; ++i) s.set(i, rng() & 1);
  return s;
}

// Weights agree and the oracle/decoder mass ratio is the same for all classes.
void expect_equivalent(const ClassDistribution& tn, const ClassDistribution& oracle,
                       size_t multiplicity_rank) {
  ASSERT_EQ(tn.chosen, oracle.chosen);
  double ratio = 0.0;
  bool have_ratio = false;
  for (size_t c = 0; c < 4; ++c) {
    EXPECT_NEAR(tn.weights[c], oracle.weights[c], 1e-9 * std::max(oracle.weights[c], 1e-300));
    if (std::isinf(oracle.log_weights[c])) {
      EXPECT_TRUE(std::isinf(tn.log_weights[c]));
      continue;
    }
    double r = tn.log_weights[c] - oracle.log_weights[c];
    if (!have_ratio) {
      ratio = r;
      have_ratio = true;
    }
    EXPECT_NEAR(r, ratio, 1e-9);
  }
  if (have_ratio) EXPECT_NEAR(ratio, static_cast<double>(multiplicity_rank) * std::log(2.0), 1e-9);
  if (std::isinf(oracle.log_total_mass)) {
    EXPECT_EQ(tn.log_total_mass, oracle.log_total_mass);
  } else {
    EXPECT_NEAR(tn.log_total_mass, oracle.log_total_mass, 1e-9 * std::abs(oracle.log_total_mass));
  }
}

const std::vector<BiasVector>& test_biases() {
  static const std::vector<BiasVector> b = {BiasVector::depolarizing(), BiasVector::make(0, 0, 1),
                                            BiasVector::make(0.1, 0.2, 0.7)};
  return b;
}

TEST(Plan, SingleTileIsEmpty) {
  ContractionPlan plan = plan_contraction(inflate(find_seed("happy"), 0));
  EXPECT_TRUE(plan.steps.empty());
  EXPECT_EQ(plan.root, 0u);
}

TEST(Plan, TwoTilesMergeOnce) {
  Tiling t;
  t.seed = "happy";
  t.tiles = {{"happy", {0, 1, 2, 3, 4, 5}, 0}, {"happy", {6, 7, 8, 9, 10, 11}, 1}};
  t.contractions = {{0, 6}};
  t.boundary_legs = {1, 2, 3, 4, 7, 8, 9, 10, 11};
  t.logical_leg = 5;
  t.layers = 1;
  ContractionPlan plan = plan_contraction(t);
  ASSERT_EQ(plan.steps.size(), 1u);
  EXPECT_EQ(plan.steps[0].target, 0u);
  EXPECT_EQ(plan.steps[0].source, 1u);
  EXPECT_EQ(plan.steps[0].open_legs, 1u);
}

TEST(Plan, FrontierStaysSmall) {
  const std::map<std::string, size_t> frozen = {{"happy", 7}, {"scf", 7}, {"613", 8}, {"steane", 8}};
  for (const auto& [name, bound] : frozen) {
    ContractionPlan plan = plan_contraction(inflate(find_seed(name), 3));
    EXPECT_LE(plan.max_frontier, bound) << name;
  }
  EXPECT_LE(plan_contraction(inflate(find_seed("happy"), 2), 12).max_frontier, 12u);
}

TEST(Plan, CapIsEnforced) {
  try {
    plan_contraction(inflate(find_seed("happy"), 2), 3);
    FAIL() << "expected a refusal";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("above the cap of 3"), std::string::npos);
  }
}

TEST(Decoder, NoiselessIdentity) {
  TensorNetworkDecoder dec(build_code("happy", 1));
  ClassDistribution d = dec.decode(BitVector(dec.code().num_checks()),
                                   ChannelSpec::make(0, BiasVector::depolarizing()));
  EXPECT_EQ(d.chosen, Pauli::I);
  EXPECT_EQ(d.weights[0], 1.0);
  EXPECT_NEAR(d.log_total_mass, 0.0, 1e-12);
}

TEST(Decoder, LowNoiseFavorsIdentity) {
  TensorNetworkDecoder dec(build_code("happy", 0));
  ClassDistribution d = dec.decode(BitVector(4), ChannelSpec::make(0.1, BiasVector::depolarizing()));
  for (size_t c = 1; c < 4; ++c) EXPECT_GT(d.weights[0], d.weights[c]);
}

TEST(Decoder, MatchesOracleOnSeedCodes) {
  const std::vector<double> ps = {0.05, 0.2, 0.45};
  for (const auto& [name, seed] : seed_library()) {
    SCOPED_TRACE(name);
    TensorNetworkDecoder dec(build_code(name, 0));
    const auto& code = dec.code();
    double total = 0.0;
    for (uint64_t v = 0; v < (uint64_t{1} << code.num_checks()); ++v) {
      BitVector s = bits_of(v, code.num_checks());
      for (const auto& bias : test_biases()) {
        for (double p : ps) {
          ChannelSpec spec = ChannelSpec::make(p, bias);
          expect_equivalent(dec.decode(s, spec), decode_oracle(code, s, spec),
                            dec.holographic_code().multiplicity_rank);
        }
      }
      total += std::exp(dec.decode(s, ChannelSpec::make(0.2, test_biases()[2])).log_total_mass);
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(Decoder, MatchesOracleOnOneLayer) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> up(0.01, 0.5);
  for (std::string name : {"happy", "scf"}) {
    SCOPED_TRACE(name);
    TensorNetworkDecoder dec(build_code(name, 1));
    const auto& code = dec.code();
    for (int trial = 0; trial < 100; ++trial) {
      BitVector s = random_bits(code.num_checks(), rng);
      double a = up(rng), b = up(rng), c = up(rng);
      BiasVector bias = BiasVector::make(a / (a + b + c), b / (a + b + c), 1 - (a + b) / (a + b + c));
      ChannelSpec spec = ChannelSpec::make(up(rng), bias);
      expect_equivalent(dec.decode(s, spec), decode_oracle(code, s, spec),
                        dec.holographic_code().multiplicity_rank);
    }
  }
}

TEST(Decoder, IsDeterministic) {
  TensorNetworkDecoder dec(build_code("613", 2));
  std::mt19937_64 rng(3);
  BitVector s = random_bits(dec.code().num_checks(), rng);
  ChannelSpec spec = ChannelSpec::make(0.17, BiasVector::make(0.2, 0.3, 0.5));
  ClassDistribution a = dec.decode(s, spec), b = dec.decode(s, spec);
  EXPECT_EQ(a.weights, b.weights);
  EXPECT_EQ(a.log_total_mass, b.log_total_mass);
}

PauliString relabel(const PauliString& p, const std::array<Pauli, 4>& map) {
  PauliString out(p.num_qubits());
  for (size_t q = 0; q < p.num_qubits(); ++q) out.set(q, map[index(p.get(q))]);
  return out;
}

std::vector<PauliString> relabel(const std::vector<PauliString>& rows, const std::array<Pauli, 4>& map) {
  std::vector<PauliString> out;
  for (const auto& r : rows) out.push_back(relabel(r, map));
  return out;
}

// Relabeling X -> Y -> Z -> X on every qubit of the code and in the bias
// leaves every class mass unchanged; under depolarizing noise the bias is
// unchanged, so the code alone can be relabeled.
TEST(Decoder, AxisRelabelingSymmetry) {
  const std::array<Pauli, 4> cycle = {Pauli::I, Pauli::Y, Pauli::Z, Pauli::X};
  TensorNetworkDecoder dec(build_code("happy", 1));
  const auto& code = dec.code();
  StabilizerCode rel = make_stabilizer_code(relabel(code.stabilizers, cycle),
                                            relabel(code.logical_x, cycle),
                                            relabel(code.logical_z, cycle));
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    BitVector s = random_bits(code.num_checks(), rng);
    BiasVector bias = BiasVector::make(0.1, 0.2, 0.7);
    BiasVector rel_bias = BiasVector::make(bias.z, bias.x, bias.y);
    ClassDistribution a = dec.decode(s, ChannelSpec::make(0.15, bias));
    ClassDistribution b = decode_oracle(rel, s, ChannelSpec::make(0.15, rel_bias));
    for (size_t c = 0; c < 4; ++c) EXPECT_NEAR(a.weights[c], b.weights[c], 1e-9);
    ClassDistribution d1 = dec.decode(s, ChannelSpec::make(0.15, BiasVector::depolarizing()));
    ClassDistribution d2 = decode_oracle(rel, s, ChannelSpec::make(0.15, BiasVector::depolarizing()));
    for (size_t c = 0; c < 4; ++c) EXPECT_NEAR(d1.weights[c], d2.weights[c], 1e-9);
  }
}

TEST(Oracle, RefusesLargeCodes) {
  HolographicCode big = build_code("happy", 2);
  EXPECT_THROW(decode_oracle(big.code, BitVector(big.code.num_checks()),
                             ChannelSpec::make(0.1, BiasVector::depolarizing())),
               std::length_error);
}

TEST(Oracle, PartitionOfTheNormalizerCoset) {
  // For the 5-qubit code each coset of the normalizer has 2^4 elements per
  // class; at p = 3/4 depolarizing every Pauli has probability 4^-5.
  TensorNetworkDecoder dec(build_code("happy", 0));
  ClassDistribution d = decode_oracle(dec.code(), bits_of(5, 4), ChannelSpec::make(0.75, BiasVector::depolarizing()));
  for (size_t c = 0; c < 4; ++c) {
    EXPECT_NEAR(d.weights[c], 0.25, 1e-15);
    EXPECT_NEAR(d.log_weights[c], std::log(16.0 / 1024.0), 1e-12);
  }
}

}  // namespace
}  // namespace holocode

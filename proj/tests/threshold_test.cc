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

#include "holocode/threshold.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace holocode {
namespace {

LayerCurve linear_curve(size_t layers, double slope, std::span<const double> grid, size_t shots) {
  LayerCurve c;
  c.layers = layers;
  for (double p : grid) {
    double rate = slope * (p - 0.2) + 0.5;
    c.points.push_back({p, static_cast<size_t>(std::llround(rate * static_cast<double>(shots))), shots});
  }
  return c;
}

TEST(Wilson, KnownValues) {
  auto [lo, hi] = wilson_interval(0, 10);
  EXPECT_EQ(lo, 0.0);
  EXPECT_NEAR(hi, 0.27754, 1e-5);
  auto [lo2, hi2] = wilson_interval(50, 100);
  EXPECT_NEAR(lo2, 0.40383, 1e-5);
  EXPECT_NEAR(hi2, 0.59617, 1e-5);
}

TEST(ErrorRate, NoiselessIsZero) {
  TensorNetworkDecoder dec(build_code("happy", 1));
  ErrorRate r = logical_error_rate(dec, ChannelSpec::make(0, BiasVector::depolarizing()), 200, 1);
  EXPECT_EQ(r.failures, 0u);
  EXPECT_EQ(r.rate, 0.0);
}

TEST(ErrorRate, IndependentOfThreadCount) {
  TensorNetworkDecoder dec(build_code("happy", 2));
  ChannelSpec spec = ChannelSpec::make(0.17, BiasVector::make(0.2, 0.2, 0.6));
  ErrorRate a = logical_error_rate(dec, spec, 301, 77, 1);
  ErrorRate b = logical_error_rate(dec, spec, 301, 77, 4);
  EXPECT_EQ(a.failures, b.failures);
  EXPECT_EQ(a.ci_low, b.ci_low);
}

TEST(ExactFailure, ClosedForms) {
  HolographicCode five = build_code("happy", 0);
  EXPECT_EQ(exact_failure_probability(five.code, ChannelSpec::make(0, BiasVector::depolarizing())), 0.0);
  // At p = 1 pure Z the only error is ZZZZZ. It is deterministic, so the
  // maximum-likelihood decoder undoes it.
  EXPECT_EQ(exact_failure_probability(five.code, ChannelSpec::make(1, BiasVector::make(0, 0, 1))),
            0.0);
  EXPECT_THROW(exact_failure_probability(build_code("happy", 1).code,
                                         ChannelSpec::make(0.1, BiasVector::depolarizing())),
               std::length_error);
}

TEST(ExactFailure, FiveQubitSmallP) {
  // Distance 3: every weight-1 error is corrected, so the leading term is
  // O(p^2) and strictly below the weight-2 error mass.
  HolographicCode five = build_code("happy", 0);
  double p = 0.01;
  double f = exact_failure_probability(five.code, ChannelSpec::make(p, BiasVector::depolarizing()));
  double two_or_more = 1.0 - std::pow(1 - p, 5) - 5 * p * std::pow(1 - p, 4);
  EXPECT_GT(f, 0.0);
  EXPECT_LE(f, two_or_more);
}

TEST(ExactFailure, AxisRelabelingInvariance) {
  for (std::string name : {"happy", "613", "scf", "steane"}) {
    const auto& code = find_seed(name).derived_code;
    auto rel = [](const std::vector<PauliString>& rows) {
      std::vector<PauliString> out;
      for (const auto& r : rows) {
        PauliString o(r.num_qubits());
        const Pauli map[4] = {Pauli::I, Pauli::Z, Pauli::X, Pauli::Y};
        for (size_t q = 0; q < r.num_qubits(); ++q) o.set(q, map[index(r.get(q))]);
        out.push_back(o);
      }
      return out;
    };
    StabilizerCode r = make_stabilizer_code(rel(code.stabilizers), rel(code.logical_x), rel(code.logical_z));
    BiasVector b = BiasVector::make(0.1, 0.3, 0.6);
    BiasVector rb = BiasVector::make(b.y, b.z, b.x);
    double f1 = exact_failure_probability(code, ChannelSpec::make(0.2, b));
    double f2 = exact_failure_probability(r, ChannelSpec::make(0.2, rb));
    EXPECT_NEAR(f1, f2, 1e-14) << name;
  }
}

TEST(ErrorRate, FiveQubitWithinFourSigmaOfExact) {
  TensorNetworkDecoder dec(build_code("happy", 0));
  ChannelSpec spec = ChannelSpec::make(0.05, BiasVector::depolarizing());
  double exact = exact_failure_probability(dec.code(), spec);
  const size_t shots = 20000;
  ErrorRate r = logical_error_rate(dec, spec, shots, 5);
  double sigma = std::sqrt(exact * (1 - exact) / shots);
  EXPECT_NEAR(r.rate, exact, 4 * sigma);
}

// 95% Wilson intervals should cover the exact value in about 19 of 20
// independent trials; 17 or more keeps the false-alarm rate below 2%.
TEST(ErrorRate, WilsonCoverageOverRepeatedTrials) {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> u(0.02, 1.0);
  std::uniform_real_distribution<double> up(0.02, 0.3);
  size_t covered = 0;
  const size_t trials = 20;
  for (size_t t = 0; t < trials; ++t) {
    std::string name = t % 2 ? "happy" : "613";
    TensorNetworkDecoder dec(build_code(name, 0));
    double a = u(rng), b = u(rng), c = u(rng);
    BiasVector bias = BiasVector::make(a / (a + b + c), b / (a + b + c), 1 - (a + b) / (a + b + c));
    ChannelSpec spec = ChannelSpec::make(up(rng), bias);
    double exact = exact_failure_probability(dec.code(), spec);
    ErrorRate r = logical_error_rate(dec, spec, 4000, 1000 + t);
    covered += r.ci_low <= exact && exact <= r.ci_high;
  }
  EXPECT_GE(covered, 17u);
}

TEST(ErrorRate, RecoveryReturnsPastOneHalf) {
  TensorNetworkDecoder dec(build_code("happy", 2));
  BiasVector z = BiasVector::make(0, 0, 1);
  ErrorRate half = logical_error_rate(dec, ChannelSpec::make(0.5, z), 2000, 9);
  ErrorRate high = logical_error_rate(dec, ChannelSpec::make(0.7, z), 2000, 9);
  EXPECT_LT(high.rate, half.rate);
}

TEST(Estimate, SyntheticLinesCrossExactly) {
  std::vector<double> grid = {0.1, 0.15, 0.2, 0.25, 0.3};
  std::vector<LayerCurve> curves = {linear_curve(1, 1.0, grid, 1000000),
                                    linear_curve(2, 2.0, grid, 1000000),
                                    linear_curve(3, 3.0, grid, 1000000)};
  ThresholdEstimate e = estimate_threshold(curves);
  ASSERT_TRUE(e.found);
  EXPECT_NEAR(e.p_th, 0.2, 1e-12);
  EXPECT_EQ(e.crossings.size(), 2u);
  EXPECT_GT(e.sigma, 0.0);
}

TEST(Estimate, InterpolatesBetweenGridPoints) {
  std::vector<double> grid = {0.1, 0.14, 0.18, 0.22, 0.26};
  // Crossing at 0.2, between grid points.
  std::vector<LayerCurve> curves = {linear_curve(1, 1.0, grid, 1000000),
                                    linear_curve(2, 2.0, grid, 1000000)};
  ThresholdEstimate e = estimate_threshold(curves);
  ASSERT_TRUE(e.found);
  EXPECT_NEAR(e.p_th, 0.2, 1e-6);
  EXPECT_GE(e.p_th, grid.front());
  EXPECT_LE(e.p_th, grid.back());
}

TEST(Estimate, ParallelCurvesDoNotCross) {
  std::vector<double> grid = {0.1, 0.15, 0.2};
  LayerCurve a{1, {{0.1, 300, 1000}, {0.15, 400, 1000}, {0.2, 500, 1000}}};
  LayerCurve b{2, {{0.1, 100, 1000}, {0.15, 200, 1000}, {0.2, 300, 1000}}};
  std::vector<LayerCurve> curves = {a, b};
  ThresholdEstimate e = estimate_threshold(curves);
  EXPECT_FALSE(e.found);
  EXPECT_TRUE(e.crossings.empty());
}

TEST(Estimate, TouchingCurvesMeetAtTheContactPoint) {
  // Both codes fail half the time at 0.5 and the larger code is better on
  // either side, as for a pure single-Pauli channel.
  LayerCurve a{1, {{0.46, 350, 2000}, {0.48, 420, 2000}, {0.5, 1000, 2000}, {0.52, 420, 2000}}};
  LayerCurve b{2, {{0.46, 250, 2000}, {0.48, 330, 2000}, {0.5, 995, 2000}, {0.52, 330, 2000}}};
  std::vector<LayerCurve> curves = {a, b};
  ThresholdEstimate e = estimate_threshold(curves);
  ASSERT_TRUE(e.found);
  EXPECT_EQ(e.p_th, 0.5);
  EXPECT_TRUE(e.crossings[0].tangential);
  EXPECT_NEAR(e.sigma, 0.01, 1e-12);
}

TEST(Estimate, PicksTheMostConsistentSignChange) {
  // A noisy flip at 0.12 is outvoted by the crossing near 0.17.
  LayerCurve a{1, {{0.10, 100, 1000}, {0.12, 120, 1000}, {0.14, 150, 1000}, {0.16, 200, 1000},
                   {0.18, 260, 1000}, {0.20, 330, 1000}}};
  LayerCurve b{2, {{0.10, 60, 1000}, {0.12, 125, 1000}, {0.14, 110, 1000}, {0.16, 180, 1000},
                   {0.18, 280, 1000}, {0.20, 400, 1000}}};
  std::vector<LayerCurve> curves = {a, b};
  ThresholdEstimate e = estimate_threshold(curves);
  ASSERT_TRUE(e.found);
  EXPECT_GT(e.p_th, 0.16);
  EXPECT_LT(e.p_th, 0.18);
}

TEST(Estimate, RejectsDuplicateLayers) {
  std::vector<double> grid = {0.1, 0.2};
  std::vector<LayerCurve> curves = {linear_curve(1, 1.0, grid, 100), linear_curve(1, 2.0, grid, 100)};
  EXPECT_THROW(estimate_threshold(curves), std::invalid_argument);
}

}  // namespace
}  // namespace holocode

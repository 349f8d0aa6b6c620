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

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <thread>

namespace holocode {

std::pair<double, double> wilson_interval(size_t failures, size_t shots, double z) {
  if (shots == 0) return {0.0, 1.0};
  const double n = static_cast<double>(shots);
  const double phat = static_cast<double>(failures) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

ErrorRate logical_error_rate(const TensorNetworkDecoder& decoder, const ChannelSpec& spec,
                             size_t shots, uint64_t seed, size_t threads) {
  const StabilizerCode& code = decoder.code();
  auto run = [&](size_t begin, size_t end) {
    size_t failures = 0;
    for (size_t i = begin; i < end; ++i) {
      Rng rng(derive_seed(seed, i));
      PauliString e = sample_error(code.n, spec, rng);
      PauliString f = pure_error(code, syndrome(code, e));
      ClassDistribution d = decoder.decode_pure_error(f, spec);
      // e * f is in the normalizer; its class relative to f is the truth.
      if (logical_class_unchecked(code, e * f) != d.chosen) ++failures;
    }
    return failures;
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::max<size_t>(1, std::min(threads, shots));
  std::vector<size_t> partial(threads, 0);
  if (threads == 1) {
    partial[0] = run(0, shots);
  } else {
    std::vector<std::thread> pool;
    for (size_t t = 0; t < threads; ++t) {
      size_t begin = shots * t / threads;
      size_t end = shots * (t + 1) / threads;
      pool.emplace_back([&, t, begin, end] { partial[t] = run(begin, end); });
    }
    for (auto& th : pool) th.join();
  }

  ErrorRate r;
  r.shots = shots;
  for (size_t f : partial) r.failures += f;
  r.rate = shots ? static_cast<double>(r.failures) / static_cast<double>(shots) : 0.0;
  std::tie(r.ci_low, r.ci_high) = wilson_interval(r.failures, shots);
  return r;
}

double exact_failure_probability(const StabilizerCode& code, const ChannelSpec& spec) {
  const size_t m = code.num_checks();
  if (m > kMaxExactChecks) {
    throw std::length_error("exact failure probability supports at most " +
                            std::to_string(kMaxExactChecks) + " stabilizers, got " +
                            std::to_string(m));
  }
  double failure = 0.0;
  BitVector s(m);
  for (uint64_t bits = 0; bits < (uint64_t{1} << m); ++bits) {
    for (size_t i = 0; i < m; ++i) s.set(i, (bits >> i) & 1);
    ClassDistribution d = CosetEnumerator(code, s).evaluate(spec);
    double total = 0.0, best = 0.0;
    for (double lw : d.log_weights) {
      double w = std::exp(lw);
      total += w;
      best = std::max(best, w);
    }
    failure += total - best;
  }
  return failure;
}

namespace {

struct PairPoint {
  double p;
  double d;
  double sigma;
};

double binomial_sigma(const CurvePoint& pt) {
  if (pt.shots == 0) return 0.0;
  double r = static_cast<double>(pt.failures) / static_cast<double>(pt.shots);
  return std::sqrt(r * (1.0 - r) / static_cast<double>(pt.shots));
}

double rate_of(const CurvePoint& pt) {
  return pt.shots ? static_cast<double>(pt.failures) / static_cast<double>(pt.shots) : 0.0;
}

// d = rate(smaller) - rate(larger) on the p values both curves share.
// Points where both rates are 0 or both are 1 carry no ordering.
std::vector<PairPoint> pair_points(const LayerCurve& a, const LayerCurve& b) {
  std::vector<PairPoint> out;
  for (const auto& pa : a.points) {
    for (const auto& pb : b.points) {
      if (std::abs(pa.p - pb.p) > 1e-12) continue;
      double ra = rate_of(pa), rb = rate_of(pb);
      if ((ra == 0.0 && rb == 0.0) || (ra == 1.0 && rb == 1.0)) break;
      double s = std::hypot(binomial_sigma(pa), binomial_sigma(pb));
      out.push_back({pa.p, ra - rb, s});
      break;
    }
  }
  std::sort(out.begin(), out.end(), [](const PairPoint& x, const PairPoint& y) { return x.p < y.p; });
  return out;
}

std::optional<Crossing> find_crossing(const std::vector<PairPoint>& pts) {
  if (pts.size() < 2) return std::nullopt;
  const size_t n = pts.size();
  const double span = pts.back().p - pts.front().p;

  // Candidate intervals where the larger code goes from better to not better.
  // Among several, keep the one that misorders the fewest grid points.
  size_t best = n;
  size_t best_misses = n + 1;
  for (size_t i = 0; i + 1 < n; ++i) {
    if (!(pts[i].d > 0.0 && pts[i + 1].d <= 0.0)) continue;
    size_t misses = 0;
    for (size_t j = 0; j <= i; ++j) misses += pts[j].d <= 0.0;
    for (size_t j = i + 1; j < n; ++j) misses += pts[j].d > 0.0;
    if (misses < best_misses) {
      best_misses = misses;
      best = i;
    }
  }
  if (best < n) {
    const auto& l = pts[best];
    const auto& r = pts[best + 1];
    double dp = r.p - l.p;
    double slope = (r.d - l.d) / dp;
    Crossing c;
    c.p = l.p - l.d / slope;
    double sd = 0.5 * (l.sigma + r.sigma);
    c.sigma = std::min(span, sd / std::abs(slope));
    c.sigma = std::max(c.sigma, dp / std::sqrt(12.0));
    return c;
  }

  // Curves that meet without changing order, as at a point where every
  // code fails with the same probability.
  size_t arg = 0;
  for (size_t i = 1; i < n; ++i) {
    if (pts[i].d < pts[arg].d) arg = i;
  }
  if (arg == 0) return std::nullopt;
  for (size_t j = 0; j < arg; ++j) {
    if (pts[j].d <= 0.0) return std::nullopt;
  }
  if (pts[arg].sigma <= 0.0 || pts[arg].d > 2.0 * pts[arg].sigma) return std::nullopt;
  Crossing c;
  c.p = pts[arg].p;
  double step = pts[arg].p - pts[arg - 1].p;
  if (arg + 1 < n) step = std::min(step, pts[arg + 1].p - pts[arg].p);
  c.sigma = step / 2.0;
  c.tangential = true;
  return c;
}

}  // namespace

ThresholdEstimate estimate_threshold(std::span<const LayerCurve> curves) {
  std::vector<const LayerCurve*> sorted;
  for (const auto& c : curves) sorted.push_back(&c);
  std::sort(sorted.begin(), sorted.end(),
            [](const LayerCurve* a, const LayerCurve* b) { return a->layers < b->layers; });

  ThresholdEstimate est;
  for (size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i]->layers == sorted[i + 1]->layers) {
      throw std::invalid_argument("duplicate layer count in threshold curves");
    }
    auto c = find_crossing(pair_points(*sorted[i], *sorted[i + 1]));
    if (!c) continue;
    c->smaller_layers = sorted[i]->layers;
    c->larger_layers = sorted[i + 1]->layers;
    est.crossings.push_back(*c);
  }
  if (est.crossings.empty()) return est;

  const double k = static_cast<double>(est.crossings.size());
  double mean = 0.0, mean_var = 0.0;
  for (const auto& c : est.crossings) {
    mean += c.p / k;
    mean_var += c.sigma * c.sigma / k;
  }
  double spread2 = 0.0;
  if (est.crossings.size() > 1) {
    for (const auto& c : est.crossings) spread2 += (c.p - mean) * (c.p - mean);
    spread2 /= k - 1.0;
  }
  est.found = true;
  est.p_th = mean;
  est.sigma = std::max(std::sqrt(spread2 + mean_var), 1e-12);
  return est;
}

}  // namespace holocode

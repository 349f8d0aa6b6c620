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

#include "holocode/noise.h"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace holocode {

char to_char(Axis a) { return "XYZ"[static_cast<int>(a)]; }

Axis axis_from_char(char c) {
  switch (c) {
    case 'X':
    case 'x':
      return Axis::X;
    case 'Y':
    case 'y':
      return Axis::Y;
    case 'Z':
    case 'z':
      return Axis::Z;
    default:
      throw std::invalid_argument(std::string("not a Pauli axis: '") + c + "'");
  }
}

BiasVector BiasVector::make(double x, double y, double z) {
  for (double v : {x, y, z}) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("bias components must lie in [0, 1]");
    }
  }
  if (std::abs(x + y + z - 1.0) > 1e-12) {
    throw std::invalid_argument("bias components must sum to 1");
  }
  return {x, y, z};
}

double BiasVector::operator[](Axis a) const {
  switch (a) {
    case Axis::X:
      return x;
    case Axis::Y:
      return y;
    case Axis::Z:
      return z;
  }
  return 0.0;
}

bool nearly_equal(const BiasVector& a, const BiasVector& b, double tol) {
  return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol && std::abs(a.z - b.z) <= tol;
}

BiasVector bias_from_eta(Axis axis, double eta) {
  if (std::isnan(eta) || eta < 0.0) {
    throw std::invalid_argument("bias eta must be nonnegative");
  }
  double on = 0.0;
  double off = 0.0;
  if (std::isinf(eta)) {
    on = 1.0;
  } else if (eta == 0.0) {
    off = 0.5;
  } else {
    on = eta / (1.0 + eta);
    off = 1.0 / (2.0 * (1.0 + eta));
  }
  switch (axis) {
    case Axis::X:
      return {on, off, off};
    case Axis::Y:
      return {off, on, off};
    case Axis::Z:
      return {off, off, on};
  }
  return {};
}

std::optional<std::pair<Axis, double>> eta_of(const BiasVector& bias) {
  for (Axis axis : {Axis::Z, Axis::X, Axis::Y}) {
    double on = bias[axis];
    double a = 0.0;
    double b = 0.0;
    bool first = true;
    for (Axis other : {Axis::X, Axis::Y, Axis::Z}) {
      if (other == axis) continue;
      (first ? a : b) = bias[other];
      first = false;
    }
    if (std::abs(a - b) > 1e-12) continue;
    double rest = a + b;
    double eta = rest == 0.0 ? std::numeric_limits<double>::infinity() : on / rest;
    return std::make_pair(axis, eta);
  }
  return std::nullopt;
}

std::vector<double> eta_sweep_values() {
  return {0.0,     1.0 / 1000, 33.0 / 10000, 99.0 / 10000, 33.0 / 1000, 1.0 / 10,
          1.0 / 3, 1.0 / 2,    1.0,          3.0,          10.0,        30.0,
          100.0,   300.0,      1000.0,       std::numeric_limits<double>::infinity()};
}

ChannelSpec ChannelSpec::make(double p, BiasVector bias) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("error probability must lie in [0, 1]");
  }
  BiasVector::make(bias.x, bias.y, bias.z);
  return {p, bias};
}

Eigen::Array4d single_qubit_prior(const ChannelSpec& spec) {
  return {1.0 - spec.p, spec.p * spec.bias.x, spec.p * spec.bias.y, spec.p * spec.bias.z};
}

uint64_t derive_seed(uint64_t base, uint64_t index) {
  uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

PauliString sample_error(size_t n, const ChannelSpec& spec, Rng& rng) {
  const Eigen::Array4d prior = single_qubit_prior(spec);
  const double c_i = prior[0];
  const double c_x = c_i + prior[1];
  const double c_y = c_x + prior[2];
  PauliString e(n);
  for (size_t q = 0; q < n; ++q) {
    double u = uniform01(rng);
    if (u < c_i) continue;
    if (u < c_x && prior[1] > 0) {
      e.set(q, Pauli::X);
    } else if (u < c_y && prior[2] > 0) {
      e.set(q, Pauli::Y);
    } else if (prior[3] > 0) {
      e.set(q, Pauli::Z);
    } else if (prior[2] > 0) {
      e.set(q, Pauli::Y);
    } else {
      e.set(q, Pauli::X);
    }
  }
  return e;
}

std::vector<BiasVector> ternary_grid(size_t resolution, std::span<const BiasVector> extras) {
  if (resolution < 1) {
    throw std::invalid_argument("ternary grid resolution must be at least 1");
  }
  std::vector<BiasVector> points;
  const double m = static_cast<double>(resolution);
  for (size_t i = 0; i <= resolution; ++i) {
    for (size_t j = 0; i + j <= resolution; ++j) {
      size_t k = resolution - i - j;
      points.push_back({i / m, j / m, k / m});
    }
  }
  for (const auto& extra : extras) {
    bool seen = false;
    for (const auto& p : points) seen = seen || nearly_equal(p, extra);
    if (!seen) points.push_back(extra);
  }
  return points;
}

std::vector<BiasVector> special_biases() {
  return {{1, 0, 0},     {0, 1, 0},     {0, 0, 1},
          {0.5, 0.5, 0}, {0, 0.5, 0.5}, {0.5, 0, 0.5},
          BiasVector::depolarizing()};
}

std::vector<BiasVector> default_ternary_grid() {
  auto extras = special_biases();
  return ternary_grid(kDefaultTernaryResolution, extras);
}

namespace {

double parse_number(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "inf" || text == "+inf" || text == "infinity") {
    return std::numeric_limits<double>::infinity();
  }
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    double num = parse_number(text.substr(0, slash));
    double den = parse_number(text.substr(slash + 1));
    if (den == 0.0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

BiasVector parse_bias(std::string_view text) {
  if (text == "depolarizing" || text == "depol") return BiasVector::depolarizing();
  if (text == "inf" || text == "+inf") return bias_from_eta(Axis::Z, parse_number(text));
  if (text.size() >= 2 && text[1] == ':') {
    return bias_from_eta(axis_from_char(text[0]), parse_number(text.substr(2)));
  }
  std::vector<double> parts;
  size_t start = 0;
  while (true) {
    size_t comma = text.find(',', start);
    parts.push_back(parse_number(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3) {
    throw std::invalid_argument("bias must be AXIS:ETA, inf, or rx,ry,rz; got '" +
                                std::string(text) + "'");
  }
  double sum = parts[0] + parts[1] + parts[2];
  if (std::abs(sum - 1.0) > 1e-6) {
    throw std::invalid_argument("bias components must sum to 1; got '" + std::string(text) + "'");
  }
  return BiasVector::make(parts[0] / sum, parts[1] / sum, parts[2] / sum);
}

std::string format_bias(const BiasVector& bias) {
  std::ostringstream out;
  out.precision(17);
  out << bias.x << "," << bias.y << "," << bias.z;
  return out.str();
}

}  // namespace holocode

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

#include "holocode/sweep.h"

#include <bit>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "holocode/hashing.h"
#include "json.hpp"

namespace holocode {

using Json = nlohmann::ordered_json;

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  return std::string(buf, end);
}

std::string record_to_json(const RunRecord& r) {
  Json j;
  j["schema"] = kRecordSchema;
  j["code"] = r.code;
  j["layers"] = r.layers;
  j["r_x"] = r.bias.x;
  j["r_y"] = r.bias.y;
  j["r_z"] = r.bias.z;
  j["p"] = r.p;
  j["shots"] = r.shots;
  j["failures"] = r.failures;
  j["seed"] = r.seed;
  return j.dump();
}

RunRecord record_from_json(std::string_view line) {
  try {
    Json j = Json::parse(line);
    if (j.at("schema").get<int>() != kRecordSchema) {
      throw std::invalid_argument("unsupported record schema " + j.at("schema").dump());
    }
    RunRecord r;
    r.code = j.at("code").get<std::string>();
    r.layers = j.at("layers").get<size_t>();
    r.bias = BiasVector::make(j.at("r_x").get<double>(), j.at("r_y").get<double>(),
                              j.at("r_z").get<double>());
    r.p = j.at("p").get<double>();
    r.shots = j.at("shots").get<size_t>();
    r.failures = j.at("failures").get<size_t>();
    r.seed = j.at("seed").get<uint64_t>();
    if (r.failures > r.shots) throw std::invalid_argument("record has failures > shots");
    return r;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed run record: ") + e.what());
  }
}

uint64_t record_seed(uint64_t run_seed, std::string_view code, size_t layers,
                     const BiasVector& bias, double p) {
  // FNV-1a over the key; doubles enter through their exact bit patterns.
  uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](const void* data, size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < size; ++i) {
      h ^= bytes[i];
      h *= 0x100000001b3ULL;
    }
  };
  mix(code.data(), code.size());
  uint64_t words[5] = {layers, std::bit_cast<uint64_t>(bias.x), std::bit_cast<uint64_t>(bias.y),
                       std::bit_cast<uint64_t>(bias.z), std::bit_cast<uint64_t>(p)};
  for (uint64_t w : words) {
    unsigned char le[8];
    for (int b = 0; b < 8; ++b) le[b] = static_cast<unsigned char>(w >> (8 * b));
    mix(le, 8);
  }
  return derive_seed(run_seed, h);
}

RecordStore::RecordStore(std::filesystem::path path) : path_(std::move(path)) {
  if (!std::filesystem::exists(*path_)) return;
  std::ifstream in(*path_, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path_->string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  size_t start = 0;
  while (true) {
    size_t nl = text.find('\n', start);
    if (nl == std::string::npos) break;
    if (nl > start) records_.push_back(record_from_json(std::string_view(text).substr(start, nl - start)));
    start = nl + 1;
  }
  if (start < text.size()) {
    in.close();
    std::filesystem::resize_file(*path_, start);
  }
}

const RunRecord* RecordStore::find(std::string_view code, size_t layers, const BiasVector& bias,
                                   double p, size_t shots, uint64_t seed) const {
  for (const auto& r : records_) {
    if (r.code == code && r.layers == layers && r.bias == bias && r.p == p && r.shots == shots &&
        r.seed == seed) {
      return &r;
    }
  }
  return nullptr;
}

void RecordStore::append(const RunRecord& record) {
  records_.push_back(record);
  if (!path_) return;
  std::ofstream out(*path_, std::ios::binary | std::ios::app);
  out << record_to_json(record) << '\n';
  out.flush();
  if (!out) throw std::runtime_error("cannot append to " + path_->string());
}

PGrid PGrid::range(double lo, double hi, double step) {
  if (!(step > 0.0) || hi < lo) throw std::invalid_argument("invalid p range");
  PGrid g;
  g.policy = Policy::Fixed;
  size_t count = static_cast<size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  for (size_t i = 0; i < count; ++i) {
    g.fixed.push_back(std::round((lo + static_cast<double>(i) * step) * 1e10) / 1e10);
  }
  return g;
}

std::vector<double> PGrid::points(const BiasVector& bias) const {
  std::vector<double> out;
  if (policy == Policy::Fixed) {
    out = fixed;
  } else {
    if (!(step > 0.0) || half_width < 0.0) throw std::invalid_argument("invalid p grid");
    const double center = zero_rate_point(bias);
    const long k = std::lround(half_width / step);
    for (long i = -k; i <= k; ++i) {
      double p = std::round((center + static_cast<double>(i) * step) * 1e10) / 1e10;
      if (p > 0.0 && p < 1.0) out.push_back(p);
    }
  }
  for (double p : out) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p grid leaves [0, 1]");
  }
  return out;
}

ThresholdRun run_threshold(const DecoderFamily& family, const BiasVector& bias,
                           std::span<const double> grid, size_t shots, uint64_t run_seed,
                           size_t threads, RecordStore& store, std::ostream* log) {
  if (family.size() < 2) throw std::invalid_argument("a threshold needs at least two code sizes");
  if (shots == 0) throw std::invalid_argument("shots must be at least 1");
  ThresholdRun run;
  for (const TensorNetworkDecoder* dec : family) {
    const auto& hc = dec->holographic_code();
    const std::string& code = hc.tiling.seed;
    LayerCurve curve;
    curve.layers = hc.tiling.layers;
    for (double p : grid) {
      const uint64_t seed = record_seed(run_seed, code, curve.layers, bias, p);
      const RunRecord* done = store.find(code, curve.layers, bias, p, shots, seed);
      RunRecord rec;
      if (done) {
        rec = *done;
      } else {
        auto t0 = std::chrono::steady_clock::now();
        ErrorRate er = logical_error_rate(*dec, ChannelSpec::make(p, bias), shots, seed, threads);
        rec = {code, curve.layers, bias, p, shots, er.failures, seed,
               std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()};
        store.append(rec);
        if (log) {
          *log << code << " L=" << rec.layers << " bias=" << format_bias(bias) << " p=" << p
               << " failures=" << rec.failures << "/" << shots << " (" << rec.wall_time_s
               << " s)\n";
        }
      }
      curve.points.push_back({p, rec.failures, rec.shots});
    }
    run.curves.push_back(std::move(curve));
  }
  run.estimate = estimate_threshold(run.curves);
  return run;
}

std::vector<SweepRow> sweep(const DecoderFamily& family, std::span<const BiasVector> biases,
                            const PGrid& grid, size_t shots, uint64_t run_seed, size_t threads,
                            RecordStore& store, std::ostream* log) {
  std::vector<SweepRow> rows;
  for (const auto& bias : biases) {
    SweepRow row;
    row.bias = bias;
    row.hashing_p_star = zero_rate_point(bias);
    try {
      auto points = grid.points(bias);
      row.estimate = run_threshold(family, bias, points, shots, run_seed, threads, store, log).estimate;
    } catch (const std::exception& e) {
      row.error = e.what();
      if (log) *log << "bias " << format_bias(bias) << " failed: " << e.what() << "\n";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string summary_csv_header() {
  return "code,layers_used,r_x,r_y,r_z,eta,axis,p_th,sigma,hashing_p_star";
}

std::string summary_csv_row(std::string_view code, std::span<const size_t> layers,
                            const SweepRow& row) {
  std::string used;
  for (size_t i = 0; i < layers.size(); ++i) {
    if (i) used += ';';
    used += std::to_string(layers[i]);
  }
  std::string eta, axis;
  if (auto e = eta_of(row.bias)) {
    axis = std::string(1, to_char(e->first));
    eta = format_number(e->second);
  }
  std::string p_th, sigma;
  if (row.estimate.found) {
    p_th = format_number(row.estimate.p_th);
    sigma = format_number(row.estimate.sigma);
  }
  std::ostringstream out;
  out << code << ',' << used << ',' << format_number(row.bias.x) << ','
      << format_number(row.bias.y) << ',' << format_number(row.bias.z) << ',' << eta << ','
      << axis << ',' << p_th << ',' << sigma << ',' << format_number(row.hashing_p_star);
  return out.str();
}

void write_summary_csv(std::ostream& out, std::string_view code, std::span<const size_t> layers,
                       std::span<const SweepRow> rows) {
  out << summary_csv_header() << '\n';
  for (const auto& row : rows) out << summary_csv_row(code, layers, row) << '\n';
}

}  // namespace holocode

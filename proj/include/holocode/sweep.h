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

#ifndef HOLOCODE_SWEEP_H
#define HOLOCODE_SWEEP_H

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "holocode/decoder.h"
#include "holocode/noise.h"
#include "holocode/threshold.h"

namespace holocode {

inline constexpr int kRecordSchema = 1;

/// One Monte Carlo data point.
struct RunRecord {
  std::string code;
  size_t layers = 0;
  BiasVector bias;
  double p = 0.0;
  size_t shots = 0;
  size_t failures = 0;
  uint64_t seed = 0;
  /// Reported on the console only; never written to result files.
  double wall_time_s = 0.0;
};

/// Single-line JSON object without a trailing newline.
std::string record_to_json(const RunRecord& record);
RunRecord record_from_json(std::string_view line);

/// Seed of the data point (code, layers, bias, p) within a run.
uint64_t record_seed(uint64_t run_seed, std::string_view code, size_t layers,
                     const BiasVector& bias, double p);

/// Append-only JSON-lines record file. Opening an existing file keeps every
/// complete line and drops a partially written last line, so an
/// interrupted run resumes where it stopped.
class RecordStore {
 public:
  /// In-memory store.
  RecordStore() = default;
  explicit RecordStore(std::filesystem::path path);

  const RunRecord* find(std::string_view code, size_t layers, const BiasVector& bias, double p,
                        size_t shots, uint64_t seed) const;
  void append(const RunRecord& record);
  const std::vector<RunRecord>& records() const { return records_; }

 private:
  std::optional<std::filesystem::path> path_;
  std::vector<RunRecord> records_;
};

struct PGrid {
  enum class Policy { Fixed, HashingCentered };
  Policy policy = Policy::HashingCentered;
  /// Used by Policy::Fixed.
  std::vector<double> fixed;
  /// Used by Policy::HashingCentered: zero_rate_point +- half_width.
  double half_width = 0.05;
  double step = 0.01;

  static PGrid range(double lo, double hi, double step);
  std::vector<double> points(const BiasVector& bias) const;
};

/// Decoders of one code family at increasing layer counts.
using DecoderFamily = std::vector<const TensorNetworkDecoder*>;

struct ThresholdRun {
  ThresholdEstimate estimate;
  std::vector<LayerCurve> curves;
};

/// Runs every (layers, p) point missing from the store, then extracts the
/// threshold. Points are visited in a fixed order, so the record file does
/// not depend on thread count or on where an earlier run was interrupted.
ThresholdRun run_threshold(const DecoderFamily& family, const BiasVector& bias,
                           std::span<const double> grid, size_t shots, uint64_t run_seed,
                           size_t threads, RecordStore& store, std::ostream* log = nullptr);

struct SweepRow {
  BiasVector bias;
  ThresholdEstimate estimate;
  double hashing_p_star = 0.0;
  /// Non-empty when this bias failed; the sweep continues.
  std::string error;
};

std::vector<SweepRow> sweep(const DecoderFamily& family, std::span<const BiasVector> biases,
                            const PGrid& grid, size_t shots, uint64_t run_seed, size_t threads,
                            RecordStore& store, std::ostream* log = nullptr);

/// code,layers_used,r_x,r_y,r_z,eta,axis,p_th,sigma,hashing_p_star
std::string summary_csv_header();
/// p_th and sigma are empty when no crossing was found; eta and axis are
/// empty for biases off every axis line.
std::string summary_csv_row(std::string_view code, std::span<const size_t> layers,
                            const SweepRow& row);
void write_summary_csv(std::ostream& out, std::string_view code, std::span<const size_t> layers,
                       std::span<const SweepRow> rows);

/// Shortest round-trip decimal, "inf" for infinity.
std::string format_number(double x);

}  // namespace holocode

#endif  // HOLOCODE_SWEEP_H

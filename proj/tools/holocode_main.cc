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

// Command-line front end: builds codes, decodes syndromes, and runs the
// Monte Carlo threshold and hashing-bound pipelines. Result files depend
// only on the arguments and --seed.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "holocode/decoder.h"
#include "holocode/hashing.h"
#include "holocode/lego.h"
#include "holocode/noise.h"
#include "holocode/sweep.h"
#include "holocode/threshold.h"
#include "holocode/tiling_io.h"
#include "json.hpp"

namespace {

using namespace holocode;
using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr const char* kOutDirEnv = "HOLOCODE_OUT_DIR";

fs::path out_dir() {
  const char* env = std::getenv(kOutDirEnv);
  return env && *env ? fs::path(env) : fs::path(".");
}

// Relative output paths land in $HOLOCODE_OUT_DIR when it is set.
fs::path resolve_output(const std::string& path) {
  fs::path p(path);
  if (p.is_absolute()) return p;
  return out_dir() / p;
}

// Writes to the named file, or to stdout when the name is empty or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  fs::path target = resolve_output(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  std::ofstream out(target, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + target.string());
  out << text;
}

// "happy_L{1,2,3}" -> happy_L1 happy_L2 happy_L3; other names pass through.
std::vector<std::string> expand_braces(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& name : names) {
    auto open = name.find('{');
    auto close = name.find('}', open == std::string::npos ? 0 : open);
    if (open == std::string::npos || close == std::string::npos) {
      out.push_back(name);
      continue;
    }
    std::string prefix = name.substr(0, open);
    std::string suffix = name.substr(close + 1);
    std::stringstream items(name.substr(open + 1, close - open - 1));
    std::string item;
    while (std::getline(items, item, ',')) out.push_back(prefix + item + suffix);
  }
  return out;
}

BitVector parse_syndrome(const std::string& bits, size_t expected) {
  if (bits.size() != expected) {
    throw std::invalid_argument("syndrome has " + std::to_string(bits.size()) + " bits, code has " +
                                std::to_string(expected) + " stabilizers");
  }
  return BitVector::from_string(bits);
}

std::string class_name(Pauli p) { return std::string(1, to_char(p)); }

struct Family {
  std::vector<std::unique_ptr<TensorNetworkDecoder>> owned;
  DecoderFamily decoders;
  std::string name;
  std::vector<size_t> layers;

  void add(HolographicCode code, size_t frontier_cap) {
    if (name.empty()) name = code.tiling.seed;
    if (code.tiling.seed != name) {
      throw std::invalid_argument("threshold codes mix seeds " + name + " and " + code.tiling.seed);
    }
    layers.push_back(code.tiling.layers);
    owned.push_back(std::make_unique<TensorNetworkDecoder>(std::move(code), frontier_cap));
    decoders.push_back(owned.back().get());
  }
};

Family family_from_codes(const std::vector<std::string>& codes, size_t frontier_cap) {
  Family f;
  for (const auto& c : expand_braces(codes)) f.add(resolve_code(c), frontier_cap);
  return f;
}

Family family_from_seed(const std::string& seed, const std::vector<size_t>& layers,
                        size_t frontier_cap) {
  Family f;
  for (size_t l : layers) f.add(build_code(seed, l), frontier_cap);
  return f;
}

struct GridOptions {
  double p_min = -1.0;
  double p_max = -1.0;
  double p_step = 0.01;
  double half_width = 0.05;

  void add_to(CLI::App* app) {
    app->add_option("--p-min", p_min, "Fixed grid lower end; omit for a grid centred on the hashing point");
    app->add_option("--p-max", p_max, "Fixed grid upper end");
    app->add_option("--p-step", p_step, "Grid spacing")->capture_default_str();
    app->add_option("--half-width", half_width, "Half width of the hashing-centred grid")
        ->capture_default_str();
  }

  PGrid grid() const {
    if ((p_min >= 0.0) != (p_max >= 0.0)) {
      throw std::invalid_argument("--p-min and --p-max must be given together");
    }
    if (p_min >= 0.0) return PGrid::range(p_min, p_max, p_step);
    PGrid g;
    g.policy = PGrid::Policy::HashingCentered;
    g.half_width = half_width;
    g.step = p_step;
    return g;
  }
};

struct RunOptions {
  uint64_t seed = 0;
  size_t shots = 2000;
  size_t threads = 0;
  size_t frontier_cap = kDefaultFrontierCap;
  std::string records;

  void add_to(CLI::App* app, bool with_records) {
    app->add_option("--seed", seed, "Run seed")->required();
    app->add_option("--shots", shots, "Monte Carlo shots per point")->capture_default_str();
    app->add_option("--threads", threads, "Worker threads (0 = available parallelism)")
        ->capture_default_str();
    app->add_option("--frontier-cap", frontier_cap, "Largest open-leg count of an intermediate tensor")
        ->capture_default_str();
    if (with_records) {
      app->add_option("--records", records, "JSON-lines record file; existing records are reused");
    }
  }

  RecordStore store() const {
    return records.empty() ? RecordStore() : RecordStore(resolve_output(records));
  }
};

std::string estimate_csv(const Family& fam, const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  write_summary_csv(out, fam.name, fam.layers, rows);
  return out.str();
}

int run_build(const std::string& seed, size_t layers, const std::string& out) {
  HolographicCode code = build_code(seed, layers);
  fs::path path = out.empty() ? out_dir() / (code.name() + ".json") : resolve_output(out);
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  save_code(path, code);
  std::cout << code.name() << ": n=" << code.code.n << " k=" << code.code.k
            << " tiles=" << code.tiling.tiles.size() << " multiplicity_rank=" << code.multiplicity_rank
            << "\n";
  std::vector<size_t> per_layer(layers + 1, 0);
  for (const auto& t : code.tiling.tiles) ++per_layer[t.layer];
  for (size_t l = 0; l <= layers; ++l) {
    std::cout << "  layer " << l << ": " << per_layer[l] << " tiles\n";
  }
  std::cout << "wrote " << path.string() << "\n";
  return 0;
}

int run_verify(const std::string& code_arg) {
  HolographicCode code = resolve_code(code_arg);
  Json report;
  report["code"] = code.name();
  report["n"] = code.code.n;
  report["k"] = code.code.k;
  std::vector<std::string> problems = check_invariants(code.code);
  try {
    validate_tiling(code.tiling);
  } catch (const std::exception& e) {
    problems.push_back(std::string("tiling: ") + e.what());
  }
  if (problems.empty()) {
    HolographicCode rebuilt = build_code(code.tiling);
    if (!same_span(rebuilt.code.stabilizers, code.code.stabilizers)) {
      problems.push_back("stored stabilizers differ from the traced tiling");
    }
    if (code.code.n <= kMaxDistanceSearchQubits) report["distance"] = min_distance(code.code);
  }
  report["ok"] = problems.empty();
  report["violations"] = problems;
  std::cout << report.dump(2) << "\n";
  return problems.empty() ? 0 : 1;
}

int run_decode(const std::string& code_arg, const std::string& bits, const std::string& bias_text,
               double p, size_t frontier_cap) {
  HolographicCode code = resolve_code(code_arg);
  BitVector s = parse_syndrome(bits, code.code.num_checks());
  ChannelSpec spec = ChannelSpec::make(p, parse_bias(bias_text));
  ClassDistribution d = TensorNetworkDecoder(std::move(code), frontier_cap).decode(s, spec);
  Json out;
  out["weights"] = Json{{"I", d.weights[0]}, {"X", d.weights[1]}, {"Y", d.weights[2]}, {"Z", d.weights[3]}};
  out["chosen_class"] = class_name(d.chosen);
  out["log_total_mass"] = d.log_total_mass;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_lerate(const std::string& code_arg, const std::string& bias_text, double p,
               const RunOptions& run, bool exact, const std::string& out) {
  HolographicCode code = resolve_code(code_arg);
  ChannelSpec spec = ChannelSpec::make(p, parse_bias(bias_text));
  const std::string name = code.name();
  TensorNetworkDecoder decoder(std::move(code), run.frontier_cap);
  ErrorRate r = logical_error_rate(decoder, spec, run.shots, run.seed, run.threads);
  Json j;
  j["code"] = name;
  j["r_x"] = spec.bias.x;
  j["r_y"] = spec.bias.y;
  j["r_z"] = spec.bias.z;
  j["p"] = p;
  j["shots"] = r.shots;
  j["failures"] = r.failures;
  j["rate"] = r.rate;
  j["ci_low"] = r.ci_low;
  j["ci_high"] = r.ci_high;
  j["seed"] = run.seed;
  if (exact) j["exact"] = exact_failure_probability(decoder.code(), spec);
  emit(out, j.dump(2) + "\n");
  return 0;
}

int run_threshold_cmd(const std::vector<std::string>& codes, const std::string& bias_text,
                      const GridOptions& grid_opts, const RunOptions& run,
                      const std::string& out, const std::string& curves_out) {
  Family fam = family_from_codes(codes, run.frontier_cap);
  BiasVector bias = parse_bias(bias_text);
  RecordStore store = run.store();
  auto points = grid_opts.grid().points(bias);
  ThresholdRun tr = run_threshold(fam.decoders, bias, points, run.shots, run.seed, run.threads,
                                  store, &std::cerr);
  SweepRow row{bias, tr.estimate, zero_rate_point(bias), {}};
  emit(out, estimate_csv(fam, {row}));
  if (!curves_out.empty()) {
    std::ostringstream c;
    c << "layers,p,shots,failures,rate,ci_low,ci_high\n";
    for (const auto& curve : tr.curves) {
      for (const auto& pt : curve.points) {
        auto [lo, hi] = wilson_interval(pt.failures, pt.shots);
        c << curve.layers << ',' << format_number(pt.p) << ',' << pt.shots << ',' << pt.failures
          << ',' << format_number(static_cast<double>(pt.failures) / static_cast<double>(pt.shots))
          << ',' << format_number(lo) << ',' << format_number(hi) << '\n';
      }
    }
    emit(curves_out, c.str());
  }
  return 0;
}

int run_sweep_cmd(const std::string& seed_name, const std::vector<size_t>& layers,
                  const std::vector<BiasVector>& biases, const GridOptions& grid_opts,
                  const RunOptions& run, const std::string& out) {
  Family fam = family_from_seed(seed_name, layers, run.frontier_cap);
  RecordStore store = run.store();
  auto rows = sweep(fam.decoders, biases, grid_opts.grid(), run.shots, run.seed, run.threads,
                    store, &std::cerr);
  emit(out, estimate_csv(fam, rows));
  for (const auto& r : rows) {
    if (!r.error.empty()) return 3;
  }
  return 0;
}

int run_hashing(const std::vector<std::string>& bias_texts, const std::string& eta_axis,
                const std::string& out) {
  std::ostringstream csv;
  csv << "eta,r_x,r_y,r_z,p_star\n";
  auto row = [&](const BiasVector& b) {
    std::string eta;
    if (auto e = eta_of(b)) eta = format_number(e->second);
    csv << eta << ',' << format_number(b.x) << ',' << format_number(b.y) << ','
        << format_number(b.z) << ',' << format_number(zero_rate_point(b)) << '\n';
  };
  if (!eta_axis.empty()) {
    if (eta_axis.size() != 1) throw std::invalid_argument("--eta-sweep takes X, Y or Z");
    Axis axis = axis_from_char(eta_axis[0]);
    for (double eta : eta_sweep_values()) {
      BiasVector b = bias_from_eta(axis, eta);
      std::string eta_s = format_number(eta);
      csv << eta_s << ',' << format_number(b.x) << ',' << format_number(b.y) << ','
          << format_number(b.z) << ',' << format_number(zero_rate_point(b)) << '\n';
    }
  }
  for (const auto& t : bias_texts) row(parse_bias(t));
  if (eta_axis.empty() && bias_texts.empty()) {
    throw std::invalid_argument("hashing-bound needs --bias or --eta-sweep");
  }
  emit(out, csv.str());
  return 0;
}

void print_error(const std::string& type, const std::string& message) {
  Json err;
  err["error"] = Json{{"type", type}, {"message", message}};
  std::cerr << err.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Holographic code builder, maximum-likelihood decoder and threshold estimator"};
  app.set_config("--config", "", "Read options from a TOML/INI file; flags override it");
  app.require_subcommand(1);
  app.footer(std::string("Environment: ") + kOutDirEnv + " sets the directory for relative output paths.");

  // build
  std::string build_seed, build_out;
  size_t build_layers = 0;
  auto* build = app.add_subcommand("build", "Inflate a seed tensor and write the tiling and code as JSON");
  build->add_option("seed", build_seed, "Seed tensor: happy, steane, 613, scf")->required();
  build->add_option("layers", build_layers, "Number of inflation layers")->required();
  build->add_option("-o,--out", build_out, "Output file (default <name>.json)");

  // verify
  std::string verify_code;
  auto* verify = app.add_subcommand("verify", "Run the invariant suite on a code file");
  verify->add_option("code", verify_code, "Code file or name like happy_L2")->required();

  // decode
  std::string dec_code, dec_syndrome, dec_bias = "depolarizing";
  double dec_p = 0.1;
  size_t dec_cap = kDefaultFrontierCap;
  auto* decode = app.add_subcommand("decode", "Maximum-likelihood class distribution of one syndrome");
  decode->add_option("--code", dec_code, "Code file or name like happy_L2")->required();
  decode->add_option("--syndrome", dec_syndrome, "Syndrome bits, stabilizer 0 first")->required();
  decode->add_option("--bias", dec_bias, "Bias: depolarizing, inf, Z:10 or r_x,r_y,r_z")->capture_default_str();
  decode->add_option("--p", dec_p, "Physical error probability")->required();
  decode->add_option("--frontier-cap", dec_cap, "Largest open-leg count of an intermediate tensor")
      ->capture_default_str();

  // lerate
  std::string le_code, le_bias = "depolarizing", le_out;
  double le_p = 0.1;
  bool le_exact = false;
  RunOptions le_run;
  auto* lerate = app.add_subcommand("lerate", "Monte Carlo logical error rate at one point");
  lerate->add_option("--code", le_code, "Code file or name like happy_L2")->required();
  lerate->add_option("--bias", le_bias, "Bias specification")->capture_default_str();
  lerate->add_option("--p", le_p, "Physical error probability")->required();
  lerate->add_flag("--exact", le_exact, "Also report the exact failure probability (small codes)");
  lerate->add_option("-o,--out", le_out, "Output JSON file (default stdout)");
  le_run.add_to(lerate, false);

  // threshold
  std::vector<std::string> th_codes;
  std::string th_bias = "depolarizing", th_out, th_curves;
  GridOptions th_grid;
  RunOptions th_run;
  auto* threshold = app.add_subcommand("threshold", "Threshold of one code family at one bias");
  threshold->add_option("--code", th_codes, "Codes at increasing layers, e.g. happy_L{1,2,3}")
      ->required()
      ->expected(1, -1);
  threshold->add_option("--bias", th_bias, "Bias specification")->capture_default_str();
  threshold->add_option("-o,--out", th_out, "Summary CSV (default stdout)");
  threshold->add_option("--curves", th_curves, "Per-point rate CSV");
  th_grid.add_to(threshold);
  th_run.add_to(threshold, true);

  // sweep-eta
  std::string se_seed = "happy", se_axis = "Z", se_out;
  std::vector<size_t> se_layers = {1, 2, 3};
  std::vector<double> se_etas;
  GridOptions se_grid;
  RunOptions se_run;
  auto* sweep_eta = app.add_subcommand("sweep-eta", "Thresholds along one bias axis");
  sweep_eta->add_option("--family", se_seed, "Seed tensor")->capture_default_str();
  sweep_eta->add_option("--layers", se_layers, "Layer counts")->capture_default_str()->delimiter(',');
  sweep_eta->add_option("--axis", se_axis, "Bias axis X, Y or Z")->capture_default_str();
  sweep_eta->add_option("--eta", se_etas, "Bias values (default: the sixteen standard values)")
      ->delimiter(',');
  sweep_eta->add_option("-o,--out", se_out, "Summary CSV (default stdout)");
  se_grid.add_to(sweep_eta);
  se_run.add_to(sweep_eta, true);

  // sweep-ternary
  std::string st_seed = "happy", st_out;
  std::vector<size_t> st_layers = {1, 2, 3};
  size_t st_resolution = kDefaultTernaryResolution;
  bool st_special = false, st_special_only = false;
  GridOptions st_grid;
  RunOptions st_run;
  auto* sweep_ternary = app.add_subcommand("sweep-ternary", "Thresholds over a grid of the bias simplex");
  sweep_ternary->add_option("--family", st_seed, "Seed tensor")->capture_default_str();
  sweep_ternary->add_option("--layers", st_layers, "Layer counts")->capture_default_str()->delimiter(',');
  auto* res_opt = sweep_ternary->add_option("--resolution", st_resolution,
                                            "Simplex points (i/m, j/m, k/m); without this flag the "
                                            "default grid also holds the seven special biases")
                      ->capture_default_str();
  sweep_ternary->add_flag("--special", st_special, "Add the seven special biases to the grid");
  sweep_ternary->add_flag("--special-only", st_special_only, "Use only the seven special biases");
  sweep_ternary->add_option("-o,--out", st_out, "Summary CSV (default stdout)");
  st_grid.add_to(sweep_ternary);
  st_run.add_to(sweep_ternary, true);

  // hashing-bound
  std::vector<std::string> hb_biases;
  std::string hb_axis, hb_out;
  auto* hashing = app.add_subcommand("hashing-bound", "Zero-rate hashing points as CSV");
  hashing->alias("hashing");
  hashing->add_option("--bias", hb_biases, "Bias specification (repeatable)");
  hashing->add_option("--eta-sweep", hb_axis, "Emit the sixteen standard bias values on this axis");
  hashing->add_option("-o,--out", hb_out, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("usage", e.what());
    return 2;
  }

  try {
    if (*build) return run_build(build_seed, build_layers, build_out);
    if (*verify) return run_verify(verify_code);
    if (*decode) return run_decode(dec_code, dec_syndrome, dec_bias, dec_p, dec_cap);
    if (*lerate) return run_lerate(le_code, le_bias, le_p, le_run, le_exact, le_out);
    if (*threshold) {
      return run_threshold_cmd(th_codes, th_bias, th_grid, th_run, th_out, th_curves);
    }
    if (*sweep_eta) {
      if (se_axis.size() != 1) throw std::invalid_argument("--axis takes X, Y or Z");
      Axis axis = axis_from_char(se_axis[0]);
      if (se_etas.empty()) se_etas = eta_sweep_values();
      std::vector<BiasVector> biases;
      for (double eta : se_etas) biases.push_back(bias_from_eta(axis, eta));
      return run_sweep_cmd(se_seed, se_layers, biases, se_grid, se_run, se_out);
    }
    if (*sweep_ternary) {
      std::vector<BiasVector> biases;
      if (st_special_only) {
        biases = special_biases();
      } else if (st_special || res_opt->count() == 0) {
        biases = ternary_grid(st_resolution, special_biases());
      } else {
        biases = ternary_grid(st_resolution);
      }
      return run_sweep_cmd(st_seed, st_layers, biases, st_grid, st_run, st_out);
    }
    if (*hashing) return run_hashing(hb_biases, hb_axis, hb_out);
  } catch (const std::invalid_argument& e) {
    print_error("invalid_argument", e.what());
    return 1;
  } catch (const std::length_error& e) {
    print_error("too_large", e.what());
    return 1;
  } catch (const std::exception& e) {
    print_error("runtime", e.what());
    return 1;
  }
  return 0;
}

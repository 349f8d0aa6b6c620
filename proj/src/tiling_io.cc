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

#include "holocode/tiling_io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace holocode {

using Json = nlohmann::ordered_json;

namespace {

Json rows_to_json(const std::vector<PauliString>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(r.to_string());
  return out;
}

std::vector<PauliString> rows_from_json(const Json& j) {
  std::vector<PauliString> rows;
  for (const auto& s : j) rows.push_back(PauliString::from_string(s.get<std::string>()));
  return rows;
}

}  // namespace

std::string code_to_json(const HolographicCode& code) {
  const Tiling& t = code.tiling;
  Json doc;
  doc["format"] = "holocode";
  doc["version"] = kCodeFileVersion;
  doc["seed"] = t.seed;
  doc["layers"] = t.layers;
  Json tiles = Json::array();
  for (const auto& tile : t.tiles) {
    tiles.push_back(Json{{"seed", tile.seed}, {"layer", tile.layer}, {"legs", tile.legs}});
  }
  doc["tiles"] = std::move(tiles);
  Json contractions = Json::array();
  for (const auto& [a, b] : t.contractions) contractions.push_back(Json::array({a, b}));
  doc["contractions"] = std::move(contractions);
  doc["boundary_legs"] = t.boundary_legs;
  doc["logical_leg"] = t.logical_leg;
  doc["code"] = Json{{"n", code.code.n},
                     {"k", code.code.k},
                     {"multiplicity_rank", code.multiplicity_rank},
                     {"stabilizers", rows_to_json(code.code.stabilizers)},
                     {"logical_x", rows_to_json(code.code.logical_x)},
                     {"logical_z", rows_to_json(code.code.logical_z)}};
  return doc.dump(2) + "\n";
}

HolographicCode code_from_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("code file is not valid JSON: ") + e.what());
  }
  try {
    if (doc.contains("version") && doc.at("version").get<int>() != kCodeFileVersion) {
      throw std::invalid_argument("unsupported code file version " + doc.at("version").dump());
    }
    Tiling t;
    t.seed = doc.at("seed").get<std::string>();
    t.layers = doc.at("layers").get<size_t>();
    for (const auto& jt : doc.at("tiles")) {
      Tile tile;
      tile.seed = jt.contains("seed") ? jt.at("seed").get<std::string>() : t.seed;
      tile.layer = jt.at("layer").get<size_t>();
      tile.legs = jt.at("legs").get<std::vector<LegId>>();
      t.tiles.push_back(std::move(tile));
    }
    for (const auto& jc : doc.at("contractions")) {
      t.contractions.push_back({jc.at(0).get<LegId>(), jc.at(1).get<LegId>()});
    }
    t.boundary_legs = doc.at("boundary_legs").get<std::vector<LegId>>();
    t.logical_leg = doc.at("logical_leg").get<LegId>();
    validate_tiling(t);

    if (!doc.contains("code")) return build_code(t);

    const Json& jc = doc.at("code");
    HolographicCode out;
    out.code = make_stabilizer_code(rows_from_json(jc.at("stabilizers")),
                                    rows_from_json(jc.at("logical_x")),
                                    rows_from_json(jc.at("logical_z")));
    if (out.code.n != jc.at("n").get<size_t>() || out.code.k != jc.at("k").get<size_t>()) {
      throw std::invalid_argument("stored n, k disagree with the stored generators");
    }
    if (out.code.n != t.boundary_legs.size()) {
      throw std::invalid_argument("stored code size differs from the tiling boundary");
    }
    out.multiplicity_rank = jc.at("multiplicity_rank").get<size_t>();
    out.tiling = std::move(t);
    return out;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed code file: ") + e.what());
  }
}

void save_code(const std::filesystem::path& path, const HolographicCode& code) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << code_to_json(code);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

HolographicCode load_code(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open code file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return code_from_json(buf.str());
}

HolographicCode resolve_code(std::string_view file_or_name) {
  std::filesystem::path path{std::string(file_or_name)};
  if (std::filesystem::is_regular_file(path)) return load_code(path);
  auto pos = file_or_name.rfind("_L");
  if (pos != std::string_view::npos) {
    std::string_view seed = file_or_name.substr(0, pos);
    std::string_view digits = file_or_name.substr(pos + 2);
    size_t layers = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), layers);
    if (ec == std::errc() && end == digits.data() + digits.size() && !digits.empty() &&
        seed_library().count(seed)) {
      return build_code(seed, layers);
    }
  }
  throw std::invalid_argument("'" + std::string(file_or_name) +
                              "' is neither a code file nor a name like happy_L2");
}

}  // namespace holocode

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

#include "holocode/lego.h"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

namespace holocode {

namespace {

SeedTensor make_seed(std::string name, std::vector<std::string> rows) {
  SeedTensor seed;
  seed.name = std::move(name);
  seed.generators = parse_paulis(rows);
  seed.legs = seed.generators.front().num_qubits();
  seed.logical_leg = seed.legs - 1;
  if (rref(seed.generators).rank() != seed.legs) {
    throw std::logic_error("seed " + seed.name + " is not a full-rank stabilizer state");
  }
  seed.derived_code = split_on_logical_leg(seed.generators, seed.logical_leg);
  return seed;
}

PauliString project(const PauliString& op, std::span<const size_t> keep) {
  PauliString out(keep.size());
  for (size_t i = 0; i < keep.size(); ++i) {
    out.set(i, op.get(keep[i]));
  }
  return out;
}

// Restricts the span of `rows` to elements whose bit at (x_a ^ x_b) and
// (z_a ^ z_b) vanish. Each binding constraint consumes one row.
void impose_equal_legs(std::vector<PauliString>& rows, size_t a, size_t b) {
  for (int plane = 0; plane < 2; ++plane) {
    auto violates = [&](const PauliString& g) {
      const BitVector& bits = plane == 0 ? g.x() : g.z();
      return bits[a] != bits[b];
    };
    auto pivot = std::find_if(rows.begin(), rows.end(), violates);
    if (pivot == rows.end()) continue;
    PauliString p = std::move(*pivot);
    rows.erase(pivot);
    for (auto& g : rows) {
      if (violates(g)) g *= p;
    }
  }
}

}  // namespace

StabilizerCode split_on_logical_leg(std::span<const PauliString> generators, size_t logical_leg) {
  if (generators.empty()) {
    throw std::invalid_argument("cannot split an empty group");
  }
  const size_t m = generators.front().num_qubits();
  if (logical_leg >= m) {
    throw std::invalid_argument("logical leg out of range");
  }
  std::vector<PauliString> rows(generators.begin(), generators.end());
  size_t rank = rref(rows).rank();
  if (rank != m) {
    throw std::invalid_argument("group has rank " + std::to_string(rank) + " on " +
                                std::to_string(m) + " legs; expected a full-rank state");
  }
  auto take_pivot = [&](bool z_plane) -> std::optional<PauliString> {
    auto hit = [&](const PauliString& g) {
      return z_plane ? g.z()[logical_leg] : g.x()[logical_leg];
    };
    auto it = std::find_if(rows.begin(), rows.end(), hit);
    if (it == rows.end()) return std::nullopt;
    PauliString p = std::move(*it);
    rows.erase(it);
    for (auto& g : rows) {
      if (hit(g)) g *= p;
    }
    return p;
  };
  auto lx = take_pivot(false);
  auto lz = take_pivot(true);
  if (!lx || !lz) {
    throw std::invalid_argument("no logical operator reaches the logical leg");
  }
  if (lx->z()[logical_leg]) *lx *= *lz;

  std::vector<size_t> keep(m - 1);
  std::iota(keep.begin(), keep.begin() + logical_leg, size_t{0});
  std::iota(keep.begin() + logical_leg, keep.end(), logical_leg + 1);

  std::vector<PauliString> stabilizers;
  stabilizers.reserve(rows.size());
  for (const auto& g : rows) stabilizers.push_back(project(g, keep));
  stabilizers = rref(stabilizers).rows;
  return make_stabilizer_code(std::move(stabilizers), {project(*lx, keep)},
                              {project(*lz, keep)});
}

const std::map<std::string, SeedTensor, std::less<>>& seed_library() {
  static const auto* library = [] {
    auto* lib = new std::map<std::string, SeedTensor, std::less<>>();
    // The last character of each row is the action on the logical leg.
    auto add = [&](SeedTensor s) { lib->emplace(s.name, std::move(s)); };
    add(make_seed("happy", {"XZZXII", "IXZZXI", "XIXZZI", "ZXIXZI", "ZZZZZZ", "XXXXXX"}));
    add(make_seed("steane", {"XXIIIXXI", "IXXXIIXI", "IIIXXXXI", "ZZIIIZZI", "IZZZIIZI",
                             "IIIZZZZI", "ZZZZZZZZ", "XXXXXXXX"}));
    add(make_seed("613", {"ZIZIIII", "XZYYXII", "XXXXZII", "IZZXIXI", "XYXYIZI", "XZXZIIX",
                          "XYYXIIZ"}));
    add(make_seed("scf", {"XXIXII", "IIXXXI", "ZIZZII", "IZIZZI", "XIXIIX", "IIZIZZ"}));
    return lib;
  }();
  return *library;
}

const SeedTensor& find_seed(std::string_view name) {
  const auto& lib = seed_library();
  auto it = lib.find(name);
  if (it == lib.end()) {
    std::string known;
    for (const auto& [k, _] : lib) known += (known.empty() ? "" : ", ") + k;
    throw std::invalid_argument("unknown seed '" + std::string(name) + "' (known: " + known +
                                ")");
  }
  return it->second;
}

size_t Tiling::num_legs() const {
  size_t total = 0;
  for (const auto& t : tiles) total += t.legs.size();
  return total;
}

void validate_tiling(const Tiling& tiling) {
  if (tiling.tiles.empty()) {
    throw std::invalid_argument("tiling has no tiles");
  }
  const size_t num_legs = tiling.num_legs();
  constexpr size_t kUnset = static_cast<size_t>(-1);
  std::vector<size_t> owner(num_legs, kUnset);
  for (size_t t = 0; t < tiling.tiles.size(); ++t) {
    const auto& tile = tiling.tiles[t];
    const auto& seed = find_seed(tile.seed);
    if (tile.seed != tiling.seed) {
      throw std::invalid_argument("tile " + std::to_string(t) + " uses seed '" + tile.seed +
                                  "' in a '" + tiling.seed + "' tiling");
    }
    if (tile.legs.size() != seed.legs) {
      throw std::invalid_argument("tile " + std::to_string(t) + " lists " +
                                  std::to_string(tile.legs.size()) + " legs, seed has " +
                                  std::to_string(seed.legs));
    }
    for (LegId leg : tile.legs) {
      if (leg >= num_legs) {
        throw std::invalid_argument("leg id " + std::to_string(leg) + " out of range");
      }
      if (owner[leg] != kUnset) {
        throw std::invalid_argument("leg " + std::to_string(leg) + " appears in two tiles");
      }
      owner[leg] = t;
    }
  }

  // 0 = unassigned, 1 = contracted, 2 = boundary, 3 = logical
  std::vector<int> role(num_legs, 0);
  auto assign = [&](LegId leg, int r, const char* what) {
    if (leg >= num_legs) {
      throw std::invalid_argument(std::string(what) + " leg " + std::to_string(leg) +
                                  " out of range");
    }
    if (role[leg] != 0) {
      throw std::invalid_argument("leg " + std::to_string(leg) + " is used twice");
    }
    role[leg] = r;
  };
  for (const auto& [a, b] : tiling.contractions) {
    if (a == b) throw std::invalid_argument("contraction pairs a leg with itself");
    assign(a, 1, "contracted");
    assign(b, 1, "contracted");
  }
  for (LegId leg : tiling.boundary_legs) assign(leg, 2, "boundary");
  assign(tiling.logical_leg, 3, "logical");
  for (size_t leg = 0; leg < num_legs; ++leg) {
    if (role[leg] == 0) {
      throw std::invalid_argument("leg " + std::to_string(leg) +
                                  " is neither contracted, boundary, nor logical");
    }
  }

  std::vector<size_t> parent(tiling.tiles.size());
  std::iota(parent.begin(), parent.end(), size_t{0});
  auto find = [&](size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  size_t components = tiling.tiles.size();
  for (const auto& [a, b] : tiling.contractions) {
    size_t ra = find(owner[a]);
    size_t rb = find(owner[b]);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  if (components != 1) {
    throw std::invalid_argument("tiling contraction graph is disconnected");
  }
}

std::vector<LayerCounts> inflation_counts(const SeedTensor& seed, size_t layers,
                                          const InflationRule& rule) {
  const size_t q = seed.legs;
  std::vector<LayerCounts> counts;
  counts.push_back({0, 0, q - 1});
  size_t tiles_in_layer = 1;
  size_t total_legs = q;
  for (size_t layer = 1; layer <= layers; ++layer) {
    const auto& prev = counts.back();
    size_t corners = (rule.vertex_children && tiles_in_layer >= 2) ? tiles_in_layer : 0;
    LayerCounts c;
    c.vertex_children = corners;
    c.edge_children = prev.free_legs - 2 * corners;
    c.free_legs = c.edge_children * (q - 1) + c.vertex_children * (q - 2);
    tiles_in_layer = c.edge_children + c.vertex_children;
    total_legs += tiles_in_layer * q;
    if (total_legs > rule.max_legs) {
      throw std::length_error("inflating '" + seed.name + "' to " + std::to_string(layers) +
                              " layers needs more than " + std::to_string(rule.max_legs) +
                              " legs (limit reached at layer " + std::to_string(layer) +
                              "); raise the leg budget or use fewer layers");
    }
    counts.push_back(c);
  }
  return counts;
}

Tiling inflate(const SeedTensor& seed, size_t layers, const InflationRule& rule) {
  inflation_counts(seed, layers, rule);  // refuses oversized requests up front

  const size_t q = seed.legs;
  Tiling tiling;
  tiling.seed = seed.name;
  tiling.layers = layers;

  struct FreeLeg {
    LegId leg;
    size_t tile;
  };
  LegId next_leg = 0;
  auto new_tile = [&](size_t layer) -> Tile& {
    Tile t;
    t.seed = seed.name;
    t.layer = layer;
    t.legs.resize(q);
    for (auto& l : t.legs) l = next_leg++;
    tiling.tiles.push_back(std::move(t));
    return tiling.tiles.back();
  };

  std::vector<FreeLeg> boundary;
  {
    Tile& center = new_tile(0);
    for (size_t i = 0; i + 1 < q; ++i) boundary.push_back({center.legs[i], 0});
    tiling.logical_leg = center.legs[q - 1];
  }

  for (size_t layer = 1; layer <= layers; ++layer) {
    const size_t count = boundary.size();
    auto corner_after = [&](size_t i) {
      return rule.vertex_children && boundary[i].tile != boundary[(i + 1) % count].tile;
    };
    // Start the walk on a corner so no vertex child straddles the wrap-around.
    size_t start = 0;
    for (size_t i = 0; i < count; ++i) {
      if (corner_after(i)) {
        start = i;
        break;
      }
    }
    std::vector<FreeLeg> next;
    next.reserve(count * q);
    size_t step = 0;
    while (step < count) {
      size_t i = (start + step) % count;
      bool vertex = corner_after(i);
      if (vertex) {
        size_t j = (i + 1) % count;
        if (step + 1 >= count || corner_after(j)) {
          throw std::logic_error("tile with a single free leg between two corners");
        }
        size_t t = tiling.tiles.size();
        Tile& child = new_tile(layer);
        // Counterclockwise around the child: later leg, earlier leg, outward legs.
        tiling.contractions.push_back({boundary[j].leg, child.legs[0]});
        tiling.contractions.push_back({boundary[i].leg, child.legs[1]});
        for (size_t k = 2; k < q; ++k) next.push_back({child.legs[k], t});
        step += 2;
      } else {
        size_t t = tiling.tiles.size();
        Tile& child = new_tile(layer);
        tiling.contractions.push_back({boundary[i].leg, child.legs[0]});
        for (size_t k = 1; k < q; ++k) next.push_back({child.legs[k], t});
        step += 1;
      }
    }
    boundary = std::move(next);
  }
  for (const auto& f : boundary) tiling.boundary_legs.push_back(f.leg);
  validate_tiling(tiling);
  return tiling;
}

TraceResult self_trace(std::span<const PauliString> generators, size_t a, size_t b) {
  if (generators.empty()) return {};
  const size_t m = generators.front().num_qubits();
  if (a >= m || b >= m) {
    throw std::invalid_argument("trace legs out of range");
  }
  if (a == b) {
    throw std::invalid_argument("cannot trace a leg with itself");
  }
  std::vector<PauliString> rows(generators.begin(), generators.end());
  impose_equal_legs(rows, a, b);
  std::vector<size_t> keep;
  for (size_t i = 0; i < m; ++i) {
    if (i != a && i != b) keep.push_back(i);
  }
  std::vector<PauliString> projected;
  for (const auto& g : rows) projected.push_back(project(g, keep));
  TraceResult result;
  if (keep.empty()) {
    result.kernel_rank = projected.size();
    return result;
  }
  result.generators = rref(projected).rows;
  result.kernel_rank = projected.size() - result.generators.size();
  return result;
}

std::string HolographicCode::name() const {
  return tiling.seed + "_L" + std::to_string(tiling.layers);
}

HolographicCode build_code(const Tiling& tiling) {
  validate_tiling(tiling);
  const size_t num_legs = tiling.num_legs();

  std::vector<PauliString> rows;
  for (const auto& tile : tiling.tiles) {
    const auto& seed = find_seed(tile.seed);
    for (const auto& g : seed.generators) {
      PauliString lifted(num_legs);
      for (size_t j = 0; j < tile.legs.size(); ++j) lifted.set(tile.legs[j], g.get(j));
      rows.push_back(std::move(lifted));
    }
  }
  for (const auto& [a, b] : tiling.contractions) impose_equal_legs(rows, a, b);

  std::vector<size_t> keep(tiling.boundary_legs.begin(), tiling.boundary_legs.end());
  keep.push_back(tiling.logical_leg);
  std::vector<PauliString> projected;
  projected.reserve(rows.size());
  for (const auto& g : rows) projected.push_back(project(g, keep));
  auto basis = rref(projected);

  HolographicCode result;
  result.tiling = tiling;
  result.multiplicity_rank = projected.size() - basis.rank();
  try {
    result.code = split_on_logical_leg(basis.rows, keep.size() - 1);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("tiling does not encode one logical qubit: " +
                                std::string(e.what()));
  }
  return result;
}

HolographicCode build_code(std::string_view seed_name, size_t layers, const InflationRule& rule) {
  return build_code(inflate(find_seed(seed_name), layers, rule));
}

}  // namespace holocode

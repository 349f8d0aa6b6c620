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

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>

namespace holocode {

ClassDistribution make_class_distribution(const std::array<double, 4>& raw, double log_scale,
                                          double log_overcount) {
  ClassDistribution dist;
  double total = 0.0;
  for (double w : raw) total += w;
  double peak = 0.0;
  for (size_t c = 0; c < 4; ++c) {
    dist.weights[c] = total > 0.0 ? raw[c] / total : 0.0;
    dist.log_weights[c] =
        raw[c] > 0.0 ? std::log(raw[c]) + log_scale : -std::numeric_limits<double>::infinity();
    peak = std::max(peak, raw[c]);
  }
  // Masses within rounding of the peak count as tied; ties go to the lowest
  // class so that every exact evaluation order picks the same winner.
  size_t best = 0;
  while (best < 3 && raw[best] < peak * (1.0 - kTieTolerance)) ++best;
  dist.chosen = static_cast<Pauli>(best);
  dist.log_total_mass = total > 0.0 ? std::log(total) + log_scale - log_overcount
                                    : -std::numeric_limits<double>::infinity();
  return dist;
}

TileTensor tile_tensor(const Tile& tile) {
  const auto& seed = find_seed(tile.seed);
  return indicator_tensor(tile.legs, seed.generators);
}

namespace {

// Label shared by the two legs of a contraction; other legs keep their id.
std::vector<LegLabel> bond_labels(const Tiling& tiling) {
  std::vector<LegLabel> label(tiling.num_legs());
  for (size_t i = 0; i < label.size(); ++i) label[i] = i;
  for (const auto& [a, b] : tiling.contractions) {
    label[a] = label[b] = std::min(a, b);
  }
  return label;
}

std::vector<bool> boundary_mask(const Tiling& tiling) {
  std::vector<bool> mask(tiling.num_legs(), false);
  for (LegId leg : tiling.boundary_legs) mask[leg] = true;
  return mask;
}

}  // namespace

ContractionPlan plan_contraction(const Tiling& tiling, size_t frontier_cap) {
  validate_tiling(tiling);
  const auto label = bond_labels(tiling);
  const auto is_boundary = boundary_mask(tiling);
  const size_t num_tiles = tiling.tiles.size();

  std::vector<std::vector<LegLabel>> open(num_tiles);
  std::vector<size_t> layer(num_tiles);
  std::vector<bool> alive(num_tiles, true);
  for (size_t t = 0; t < num_tiles; ++t) {
    for (LegId leg : tiling.tiles[t].legs) {
      if (!is_boundary[leg]) open[t].push_back(label[leg]);
    }
    std::sort(open[t].begin(), open[t].end());
    layer[t] = tiling.tiles[t].layer;
  }

  ContractionPlan plan;
  for (size_t t = 0; t < num_tiles; ++t) {
    plan.max_frontier = std::max(plan.max_frontier, open[t].size());
  }

  std::map<LegLabel, std::vector<size_t>> holders;
  for (size_t t = 0; t < num_tiles; ++t) {
    for (LegLabel l : open[t]) holders[l].push_back(t);
  }

  for (size_t step = 0; step + 1 < num_tiles; ++step) {
    // Score: fewest open legs after the merge, then outermost layer, then
    // the cheapest merge, then lowest indices.
    using Score = std::tuple<size_t, long, size_t, size_t, size_t>;
    bool found = false;
    Score best{};
    for (const auto& [l, nodes] : holders) {
      if (nodes.size() != 2) continue;
      size_t u = std::min(nodes[0], nodes[1]);
      size_t v = std::max(nodes[0], nodes[1]);
      std::vector<LegLabel> shared;
      std::set_intersection(open[u].begin(), open[u].end(), open[v].begin(), open[v].end(),
                            std::back_inserter(shared));
      size_t result = open[u].size() + open[v].size() - 2 * shared.size();
      size_t merge_legs = open[u].size() + open[v].size() - shared.size();
      Score s{result, -static_cast<long>(std::max(layer[u], layer[v])), merge_legs, u, v};
      if (!found || s < best) {
        best = s;
        found = true;
      }
    }
    if (!found) {
      throw std::runtime_error("contraction graph is disconnected at step " +
                               std::to_string(step));
    }
    auto [result, neg_layer, merge_legs, u, v] = best;
    (void)neg_layer;
    size_t target = layer[u] <= layer[v] ? u : v;
    size_t source = target == u ? v : u;
    if (result > frontier_cap) {
      throw std::runtime_error("contraction step " + std::to_string(step) + " (tile " +
                               std::to_string(source) + " into tile " + std::to_string(target) +
                               ") leaves " + std::to_string(result) + " open legs, above the cap of " +
                               std::to_string(frontier_cap));
    }
    std::vector<LegLabel> merged;
    std::set_symmetric_difference(open[target].begin(), open[target].end(), open[source].begin(),
                                  open[source].end(), std::back_inserter(merged));
    for (LegLabel l : open[source]) {
      auto& h = holders[l];
      h.erase(std::find(h.begin(), h.end(), source));
      if (std::binary_search(merged.begin(), merged.end(), l)) {
        h.push_back(target);
      }
    }
    for (LegLabel l : open[target]) {
      if (!std::binary_search(merged.begin(), merged.end(), l)) {
        auto& h = holders[l];
        h.erase(std::find(h.begin(), h.end(), target));
      }
    }
    for (auto it = holders.begin(); it != holders.end();) {
      it = it->second.empty() ? holders.erase(it) : std::next(it);
    }
    open[target] = std::move(merged);
    open[source].clear();
    alive[source] = false;
    layer[target] = std::min(layer[target], layer[source]);
    plan.steps.push_back({target, source, result});
    plan.max_frontier = std::max(plan.max_frontier, result);
    plan.max_merge_legs = std::max(plan.max_merge_legs, merge_legs);
  }
  plan.root = static_cast<size_t>(std::find(alive.begin(), alive.end(), true) - alive.begin());
  if (open[plan.root] != std::vector<LegLabel>{label[tiling.logical_leg]}) {
    throw std::runtime_error("contraction does not end on the logical leg alone");
  }
  return plan;
}

TensorNetworkDecoder::TensorNetworkDecoder(HolographicCode code, size_t frontier_cap)
    : code_(std::move(code)), plan_(plan_contraction(code_.tiling, frontier_cap)) {
  const Tiling& tiling = code_.tiling;
  const auto label = bond_labels(tiling);
  constexpr size_t kNotBoundary = static_cast<size_t>(-1);
  std::vector<size_t> qubit_of(tiling.num_legs(), kNotBoundary);
  for (size_t q = 0; q < tiling.boundary_legs.size(); ++q) qubit_of[tiling.boundary_legs[q]] = q;

  tiles_.reserve(tiling.tiles.size());
  for (const auto& tile : tiling.tiles) {
    const auto& seed = find_seed(tile.seed);
    TileElements te;
    std::vector<size_t> open_pos, boundary_pos;
    for (size_t j = 0; j < tile.legs.size(); ++j) {
      if (qubit_of[tile.legs[j]] == kNotBoundary) {
        open_pos.push_back(j);
        te.open_legs.push_back(label[tile.legs[j]]);
      } else {
        boundary_pos.push_back(j);
        te.boundary_qubits.push_back(qubit_of[tile.legs[j]]);
      }
    }
    if (open_pos.size() > kMaxDenseLegs) {
      throw std::length_error("tile tensor too large for dense storage");
    }
    for (const auto& g : enumerate_group(seed.generators)) {
      uint32_t flat = 0;
      for (size_t j : open_pos) flat = (flat << 2) | static_cast<uint32_t>(index(g.get(j)));
      te.open_index.push_back(flat);
      for (size_t j : boundary_pos) te.boundary_paulis.push_back(static_cast<uint8_t>(index(g.get(j))));
    }
    tiles_.push_back(std::move(te));
  }
}

ClassDistribution TensorNetworkDecoder::decode(const BitVector& syndrome,
                                               const ChannelSpec& spec) const {
  return decode_pure_error(pure_error(code_.code, syndrome), spec);
}

ClassDistribution TensorNetworkDecoder::decode_pure_error(const PauliString& f,
                                                          const ChannelSpec& spec) const {
  if (f.num_qubits() != code_.code.n) {
    throw std::invalid_argument("pure error size does not match the code");
  }
  const Eigen::Array4d prior = single_qubit_prior(spec);
  // shifted[q][P] = prior(f_q * P)
  std::vector<std::array<double, 4>> shifted(code_.code.n);
  for (size_t q = 0; q < code_.code.n; ++q) {
    Pauli fq = f.get(q);
    for (Pauli p : kAllPaulis) shifted[q][index(p)] = prior[static_cast<Eigen::Index>(index(fq * p))];
  }

  std::vector<TileTensor> tensors;
  tensors.reserve(tiles_.size());
  for (const auto& te : tiles_) {
    auto t = TileTensor::zeros(te.open_legs);
    const size_t nb = te.boundary_qubits.size();
    const uint8_t* paulis = te.boundary_paulis.data();
    for (size_t e = 0; e < te.open_index.size(); ++e, paulis += nb) {
      double w = 1.0;
      for (size_t b = 0; b < nb; ++b) w *= shifted[te.boundary_qubits[b]][paulis[b]];
      t.data()[te.open_index[e]] += w;
    }
    t.normalize();
    tensors.push_back(std::move(t));
  }
  for (const auto& step : plan_.steps) {
    tensors[step.target] = contract(tensors[step.target], tensors[step.source]);
    tensors[step.target].normalize();
    tensors[step.source] = TileTensor();
  }
  const TileTensor& root = tensors[plan_.root];
  std::array<double, 4> raw{};
  for (size_t c = 0; c < 4; ++c) raw[c] = root.data()[static_cast<Eigen::Index>(c)];
  return make_class_distribution(raw, root.log_scale(),
                                 static_cast<double>(code_.multiplicity_rank) * std::log(2.0));
}

ClassDistribution decode_ml(const HolographicCode& code, const BitVector& syndrome,
                            const ChannelSpec& spec, size_t frontier_cap) {
  return TensorNetworkDecoder(code, frontier_cap).decode(syndrome, spec);
}

}  // namespace holocode

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

#ifndef HOLOCODE_TENSOR_H
#define HOLOCODE_TENSOR_H

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "holocode/pauli.h"

namespace holocode {

using LegLabel = size_t;

inline constexpr size_t kMaxDenseLegs = 14;

inline size_t dense_size(size_t legs) { return size_t{1} << (2 * legs); }

/// Dense nonnegative tensor with one Pauli-class index (I, X, Y, Z) per leg.
///
/// The flat layout is row-major with the first leg most significant. The
/// represented values are data * exp(log_scale).
template <typename Scalar>
class PauliTensor {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  PauliTensor() : data_(Vector::Ones(1)) {}
  PauliTensor(std::vector<LegLabel> legs, Vector data, Scalar log_scale = Scalar(0))
      : legs_(std::move(legs)), data_(std::move(data)), log_scale_(log_scale) {
    if (legs_.size() > kMaxDenseLegs) {
      throw std::length_error("dense tensor with " + std::to_string(legs_.size()) +
                              " legs exceeds the limit of " + std::to_string(kMaxDenseLegs));
    }
    if (static_cast<size_t>(data_.size()) != dense_size(legs_.size())) {
      throw std::invalid_argument("tensor data size does not match leg count");
    }
  }

  static PauliTensor zeros(std::vector<LegLabel> legs) {
    size_t m = legs.size();
    if (m > kMaxDenseLegs) {
      throw std::length_error("dense tensor with " + std::to_string(m) +
                              " legs exceeds the limit of " + std::to_string(kMaxDenseLegs));
    }
    return PauliTensor(std::move(legs), Vector::Zero(static_cast<Eigen::Index>(dense_size(m))));
  }

  const std::vector<LegLabel>& legs() const { return legs_; }
  size_t num_legs() const { return legs_.size(); }
  const Vector& data() const { return data_; }
  Vector& data() { return data_; }
  Scalar log_scale() const { return log_scale_; }
  void set_log_scale(Scalar s) { log_scale_ = s; }

  /// Position of `leg` in legs(), or num_legs() if absent.
  size_t position(LegLabel leg) const {
    return static_cast<size_t>(std::find(legs_.begin(), legs_.end(), leg) - legs_.begin());
  }

  static size_t flat_index(std::span<const Pauli> index) {
    size_t flat = 0;
    for (Pauli p : index) flat = (flat << 2) | holocode::index(p);
    return flat;
  }

  Scalar operator()(std::span<const Pauli> index) const { return data_[flat_index(index)]; }

  /// Divides by the largest entry and folds it into log_scale. An all-zero
  /// tensor is left untouched.
  void normalize() {
    Scalar peak = data_.maxCoeff();
    if (peak > Scalar(0)) {
      data_ /= peak;
      log_scale_ += std::log(peak);
    }
  }

 private:
  std::vector<LegLabel> legs_;
  Vector data_;
  Scalar log_scale_ = Scalar(0);
};

using TileTensor = PauliTensor<double>;

/// Reorders the legs of t to `order`, which must be a permutation of t.legs().
template <typename Scalar>
PauliTensor<Scalar> permute(const PauliTensor<Scalar>& t, std::span<const LegLabel> order) {
  const size_t m = t.num_legs();
  if (order.size() != m) {
    throw std::invalid_argument("permutation has the wrong number of legs");
  }
  std::vector<size_t> stride(m);
  bool identity = true;
  for (size_t i = 0; i < m; ++i) {
    size_t pos = t.position(order[i]);
    if (pos == m) throw std::invalid_argument("permutation names a missing leg");
    identity = identity && pos == i;
    stride[i] = size_t{1} << (2 * (m - 1 - pos));
  }
  std::vector<LegLabel> legs(order.begin(), order.end());
  if (identity) return PauliTensor<Scalar>(std::move(legs), t.data(), t.log_scale());

  typename PauliTensor<Scalar>::Vector out(t.data().size());
  const Scalar* src = t.data().data();
  std::vector<size_t> counter(m, 0);
  size_t offset = 0;
  const size_t total = dense_size(m);
  for (size_t flat = 0; flat < total; ++flat) {
    out[static_cast<Eigen::Index>(flat)] = src[offset];
    // Odometer increment over the new layout, last leg fastest.
    for (size_t i = m; i-- > 0;) {
      offset += stride[i];
      if (++counter[i] < 4) break;
      offset -= 4 * stride[i];
      counter[i] = 0;
    }
  }
  return PauliTensor<Scalar>(std::move(legs), std::move(out), t.log_scale());
}

/// Sums over every leg shared by a and b (matching Pauli classes on both
/// sides). The result keeps a's free legs followed by b's free legs.
template <typename Scalar>
PauliTensor<Scalar> contract(const PauliTensor<Scalar>& a, const PauliTensor<Scalar>& b) {
  std::vector<LegLabel> a_free, shared, b_free;
  for (LegLabel l : a.legs()) {
    (b.position(l) < b.num_legs() ? shared : a_free).push_back(l);
  }
  for (LegLabel l : b.legs()) {
    if (a.position(l) == a.num_legs()) b_free.push_back(l);
  }
  std::vector<LegLabel> a_order = a_free;
  a_order.insert(a_order.end(), shared.begin(), shared.end());
  std::vector<LegLabel> b_order = shared;
  b_order.insert(b_order.end(), b_free.begin(), b_free.end());
  const auto ap = permute(a, a_order);
  const auto bp = permute(b, b_order);

  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const auto sdim = static_cast<Eigen::Index>(dense_size(shared.size()));
  const auto adim = static_cast<Eigen::Index>(dense_size(a_free.size()));
  const auto bdim = static_cast<Eigen::Index>(dense_size(b_free.size()));
  Eigen::Map<const Matrix> ma(ap.data().data(), sdim, adim);
  Eigen::Map<const Matrix> mb(bp.data().data(), bdim, sdim);

  std::vector<LegLabel> legs = a_free;
  legs.insert(legs.end(), b_free.begin(), b_free.end());
  auto result = PauliTensor<Scalar>::zeros(std::move(legs));
  Eigen::Map<Matrix> mr(result.data().data(), bdim, adim);
  mr.noalias() = mb * ma;
  result.set_log_scale(a.log_scale() + b.log_scale());
  return result;
}

/// Contracts `leg` against the weight vector v and removes it.
template <typename Scalar>
PauliTensor<Scalar> attach_boundary_prior(const PauliTensor<Scalar>& t, LegLabel leg,
                                          const Eigen::Array<Scalar, 4, 1>& v) {
  if (t.position(leg) == t.num_legs()) {
    throw std::invalid_argument("leg " + std::to_string(leg) + " is not open on this tensor");
  }
  PauliTensor<Scalar> vec({leg}, v.matrix());
  return contract(t, vec);
}

/// 0/1 indicator of the GF(2) span of `generators` (each on legs.size()
/// qubits), built by walking the 2^rank group elements in Gray-code order.
TileTensor indicator_tensor(std::vector<LegLabel> legs, std::span<const PauliString> generators);

/// Every element of the span of an independent generator list, Gray-code
/// ordered starting from the identity.
std::vector<PauliString> enumerate_group(std::span<const PauliString> generators);

}  // namespace holocode

#endif  // HOLOCODE_TENSOR_H

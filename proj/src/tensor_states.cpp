// Copyright 2026 The orbitent Authors
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

#include "orbitent/tensor_states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "orbitent/error.hpp"
#include "orbitent/kernels.hpp"

namespace orbitent {

namespace {

void validate_shape(const Dims& dims, Eigen::Index size) {
  if (dims.empty())
    throw Error(ErrorKind::DimensionMismatch, "state needs at least one party");
  for (int d : dims)
    if (d < 2)
      throw Error(ErrorKind::DimensionMismatch,
                  "local dimension must be at least 2, got " + std::to_string(d));
  if (total_dimension(dims) != static_cast<std::size_t>(size))
    throw Error(ErrorKind::DimensionMismatch,
                "coefficient count " + std::to_string(size) +
                    " does not match dims (expected " +
                    std::to_string(total_dimension(dims)) + ")");
}

void require_equal_dims(const Dims& dims, Symmetry symmetry) {
  if (symmetry == Symmetry::distinguishable) return;
  if (std::adjacent_find(dims.begin(), dims.end(), std::not_equal_to<>()) !=
      dims.end())
    throw Error(ErrorKind::DimensionMismatch,
                std::string(to_string(symmetry)) +
                    " states need equal local dimensions");
}

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

// Largest |C - sign * P_k C| over adjacent transpositions P_k.
double symmetry_defect(const Dims& dims, const CVector& c, int sign) {
  const int m = static_cast<int>(dims.size());
  double worst = 0.0;
  for (std::size_t f = 0; f < static_cast<std::size_t>(c.size()); ++f) {
    std::vector<int> idx = multi_index(dims, f);
    for (int k = 0; k + 1 < m; ++k) {
      std::swap(idx[k], idx[k + 1]);
      const Complex swapped = c[static_cast<Eigen::Index>(flat_index(dims, idx))];
      std::swap(idx[k], idx[k + 1]);
      worst = std::max(worst, std::abs(c[static_cast<Eigen::Index>(f)] -
                                       static_cast<double>(sign) * swapped));
    }
  }
  return worst;
}

void verify_symmetry(const Dims& dims, const CVector& c, Symmetry symmetry) {
  if (symmetry == Symmetry::distinguishable) return;
  const int sign = symmetry == Symmetry::bosonic ? 1 : -1;
  const double scale = c.cwiseAbs().maxCoeff();
  const double defect = symmetry_defect(dims, c, sign);
  if (defect > tol::kSymmetry * scale)
    throw Error(ErrorKind::SymmetryViolation,
                "tensor is not " + std::string(to_string(symmetry)) +
                    " (defect " + std::to_string(defect) + ")");
}

}  // namespace

std::size_t flat_index(const Dims& dims, const std::vector<int>& index) {
  std::size_t f = 0;
  for (std::size_t k = 0; k < dims.size(); ++k)
    f = f * static_cast<std::size_t>(dims[k]) + static_cast<std::size_t>(index[k]);
  return f;
}

std::vector<int> multi_index(const Dims& dims, std::size_t flat) {
  std::vector<int> idx(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    idx[k] = static_cast<int>(flat % static_cast<std::size_t>(dims[k]));
    flat /= static_cast<std::size_t>(dims[k]);
  }
  return idx;
}

Complex StateTensor::at(const std::vector<int>& index) const {
  if (index.size() != dims_.size())
    throw Error(ErrorKind::DimensionMismatch, "index rank mismatch");
  for (std::size_t k = 0; k < dims_.size(); ++k)
    if (index[k] < 0 || index[k] >= dims_[k])
      throw Error(ErrorKind::DimensionMismatch, "index out of range");
  return coeffs_[static_cast<Eigen::Index>(flat_index(dims_, index))];
}

StateTensor build_state(const RawTensor& raw, Symmetry symmetry) {
  validate_shape(raw.dims, raw.data.size());
  require_equal_dims(raw.dims, symmetry);
  if (!raw.data.allFinite())
    throw Error(ErrorKind::InvalidArgument, "coefficients must be finite");
  const double norm = raw.data.norm();
  if (norm == 0.0)
    throw Error(ErrorKind::ZeroState, "all-zero coefficient tensor");
  CVector c = raw.data / norm;
  verify_symmetry(raw.dims, c, symmetry);
  return StateTensor(raw.dims, std::move(c), symmetry);
}

StateTensor symmetrize(const RawTensor& raw, Symmetry symmetry) {
  validate_shape(raw.dims, raw.data.size());
  require_equal_dims(raw.dims, symmetry);
  if (symmetry == Symmetry::distinguishable) return build_state(raw, symmetry);

  const Dims& dims = raw.dims;
  const int m = static_cast<int>(dims.size());
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  CVector out = CVector::Zero(raw.data.size());
  double count = 0.0;
  do {
    const double sign =
        symmetry == Symmetry::fermionic ? permutation_sign(perm) : 1.0;
    for (std::size_t f = 0; f < static_cast<std::size_t>(out.size()); ++f) {
      const std::vector<int> idx = multi_index(dims, f);
      std::vector<int> src(m);
      for (int k = 0; k < m; ++k) src[k] = idx[perm[k]];
      out[static_cast<Eigen::Index>(f)] +=
          sign * raw.data[static_cast<Eigen::Index>(flat_index(dims, src))];
    }
    count += 1.0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  out /= count;

  const double input_norm = raw.data.norm();
  const double norm = out.norm();
  if (norm == 0.0 || norm <= 1e-14 * input_norm)
    throw Error(ErrorKind::ZeroState, std::string(to_string(symmetry)) +
                                          " projection of the tensor vanishes");
  out /= norm;
  return StateTensor(dims, std::move(out), symmetry);
}

CMatrix to_special_unitary(const CMatrix& u) {
  const Complex det = u.determinant();
  return u * std::pow(det, -1.0 / static_cast<double>(u.rows()));
}

LocalUnitaryTuple LocalUnitaryTuple::make(std::vector<CMatrix> blocks,
                                          bool rescale_det) {
  for (auto& u : blocks) {
    if (u.rows() != u.cols() || u.rows() < 1)
      throw Error(ErrorKind::DimensionMismatch, "local unitary must be square");
    const CMatrix gram = u.adjoint() * u;
    const double defect =
        (gram - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
    if (defect > tol::kSpecialUnitary)
      throw Error(ErrorKind::NotSpecialUnitary,
                  "block is not unitary (defect " + std::to_string(defect) + ")");
    Complex det = u.determinant();
    if (rescale_det && std::abs(std::abs(det) - 1.0) <= tol::kSpecialUnitary) {
      u = to_special_unitary(u);
      det = u.determinant();
    }
    if (std::abs(det - 1.0) > tol::kSpecialUnitary)
      throw Error(ErrorKind::NotSpecialUnitary, "block determinant is not 1");
  }
  return LocalUnitaryTuple(std::move(blocks));
}

LocalUnitaryTuple LocalUnitaryTuple::identity(const Dims& dims) {
  std::vector<CMatrix> blocks;
  blocks.reserve(dims.size());
  for (int d : dims) blocks.push_back(CMatrix::Identity(d, d));
  return LocalUnitaryTuple(std::move(blocks));
}

LocalUnitaryTuple LocalUnitaryTuple::inverse() const {
  std::vector<CMatrix> inv;
  inv.reserve(blocks_.size());
  for (const auto& u : blocks_) inv.push_back(u.adjoint());
  return LocalUnitaryTuple(std::move(inv));
}

StateTensor apply_local(const StateTensor& state, const LocalUnitaryTuple& g) {
  const Dims& dims = state.dims();
  if (g.parties() != dims.size())
    throw Error(ErrorKind::DimensionMismatch,
                "local unitary tuple has wrong number of blocks");
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (g.blocks()[k].rows() != dims[k])
      throw Error(ErrorKind::DimensionMismatch,
                  "local unitary block does not match local dimension");
  if (state.symmetry() != Symmetry::distinguishable) {
    for (const auto& u : g.blocks())
      if ((u - g.blocks().front()).cwiseAbs().maxCoeff() > 1e-12)
        throw Error(ErrorKind::SymmetryViolation,
                    "indistinguishable particles need identical local blocks");
  }

  CVector cur = state.coeffs();
  CVector next(cur.size());
  for (std::size_t k = 0; k < dims.size(); ++k) {
    next.setZero();
    kernels::parallel::mode_apply_add(
        kernels::mode_layout(dims, static_cast<int>(k)), g.blocks()[k],
        cur.data(), next.data());
    cur.swap(next);
  }
  return StateTensor(dims, std::move(cur), state.symmetry());
}

Complex overlap(const StateTensor& a, const StateTensor& b) {
  if (a.dims() != b.dims())
    throw Error(ErrorKind::DimensionMismatch, "overlap of states with different dims");
  return a.coeffs().dot(b.coeffs());
}

bool projectively_equal(const StateTensor& a, const StateTensor& b, double tol) {
  if (a.dims() != b.dims()) return false;
  return std::abs(std::abs(overlap(a, b)) - 1.0) <= tol;
}

RawTensor basis_tensor(const Dims& dims, const std::vector<int>& index) {
  if (index.size() != dims.size())
    throw Error(ErrorKind::DimensionMismatch, "index rank mismatch");
  RawTensor t{dims, CVector::Zero(static_cast<Eigen::Index>(total_dimension(dims)))};
  t.data[static_cast<Eigen::Index>(flat_index(dims, index))] = 1.0;
  return t;
}

RawTensor product_tensor(const std::vector<CVector>& factors) {
  RawTensor t;
  CVector acc = CVector::Ones(1);
  for (const auto& f : factors) {
    t.dims.push_back(static_cast<int>(f.size()));
    CVector next(acc.size() * f.size());
    for (Eigen::Index i = 0; i < acc.size(); ++i)
      next.segment(i * f.size(), f.size()) = acc[i] * f;
    acc = std::move(next);
  }
  t.data = std::move(acc);
  return t;
}

}  // namespace orbitent

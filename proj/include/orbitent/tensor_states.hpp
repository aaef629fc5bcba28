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

#pragma once

#include <vector>

#include "orbitent/types.hpp"

namespace orbitent {

/// Unnormalized coefficient tensor, row-major with the first party's index
/// varying slowest.
struct RawTensor {
  Dims dims;
  CVector data;
};

class LocalUnitaryTuple;

/// Normalized pure state C_{i1...iM} of M parties with a declared symmetry
/// class. Instances are immutable; obtain them through build_state,
/// symmetrize or apply_local.
class StateTensor {
 public:
  const Dims& dims() const { return dims_; }
  int parties() const { return static_cast<int>(dims_.size()); }
  std::size_t size() const { return static_cast<std::size_t>(coeffs_.size()); }
  const CVector& coeffs() const { return coeffs_; }
  Symmetry symmetry() const { return symmetry_; }

  /// Coefficient at a multi-index.
  Complex at(const std::vector<int>& index) const;

 private:
  StateTensor(Dims dims, CVector coeffs, Symmetry symmetry)
      : dims_(std::move(dims)), coeffs_(std::move(coeffs)), symmetry_(symmetry) {}

  Dims dims_;
  CVector coeffs_;
  Symmetry symmetry_;

  friend StateTensor build_state(const RawTensor&, Symmetry);
  friend StateTensor symmetrize(const RawTensor&, Symmetry);
  friend StateTensor apply_local(const StateTensor&, const LocalUnitaryTuple&);
};

/// g = U_1 (x) ... (x) U_M with every U_k in SU(N_k).
class LocalUnitaryTuple {
 public:
  /// Validates unitarity and unit determinant. With rescale_det, blocks whose
  /// determinant has unit modulus are multiplied by det^(-1/N) first.
  static LocalUnitaryTuple make(std::vector<CMatrix> blocks,
                                bool rescale_det = false);
  static LocalUnitaryTuple identity(const Dims& dims);

  const std::vector<CMatrix>& blocks() const { return blocks_; }
  std::size_t parties() const { return blocks_.size(); }

  LocalUnitaryTuple inverse() const;

 private:
  explicit LocalUnitaryTuple(std::vector<CMatrix> blocks)
      : blocks_(std::move(blocks)) {}
  std::vector<CMatrix> blocks_;
};

/// Normalizes a nonzero tensor and verifies (never imposes) the declared
/// particle symmetry.
StateTensor build_state(const RawTensor& raw, Symmetry symmetry);

/// (U_1 (x) ... (x) U_M) psi. Indistinguishable particles require identical
/// blocks.
StateTensor apply_local(const StateTensor& state, const LocalUnitaryTuple& g);

/// Projects onto Sym^M or Alt^M and normalizes. Distinguishable symmetry only
/// normalizes.
StateTensor symmetrize(const RawTensor& raw, Symmetry symmetry);

/// Rescales a unitary with unit-modulus determinant into SU(N).
CMatrix to_special_unitary(const CMatrix& u);

/// <a|b>.
Complex overlap(const StateTensor& a, const StateTensor& b);

/// |<a|b>| = 1 within tol; states compared as points of projective space.
bool projectively_equal(const StateTensor& a, const StateTensor& b,
                        double tol = tol::kProjective);

/// Basis product state e_{i1} (x) ... (x) e_{iM} (0-based indices).
RawTensor basis_tensor(const Dims& dims, const std::vector<int>& index);

/// Product of local vectors, one per party.
RawTensor product_tensor(const std::vector<CVector>& factors);

/// Row-major flat offset of a multi-index.
std::size_t flat_index(const Dims& dims, const std::vector<int>& index);
std::vector<int> multi_index(const Dims& dims, std::size_t flat);

}  // namespace orbitent

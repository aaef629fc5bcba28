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

#include "orbitent/sampling.hpp"

#include <cmath>

namespace orbitent {

namespace {

CVector gaussian_vector(Eigen::Index n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v[i] = Complex(re, im);
  }
  return v;
}

}  // namespace

StateTensor random_state(const Dims& dims, Symmetry symmetry, Rng& rng) {
  RawTensor raw{dims, gaussian_vector(static_cast<Eigen::Index>(total_dimension(dims)), rng)};
  if (symmetry == Symmetry::distinguishable) return build_state(raw, symmetry);
  return symmetrize(raw, symmetry);
}

StateTensor random_product_state(const Dims& dims, Rng& rng) {
  std::vector<CVector> factors;
  for (int d : dims) factors.push_back(gaussian_vector(d, rng));
  return build_state(product_tensor(factors), Symmetry::distinguishable);
}

CMatrix random_special_unitary(int n, Rng& rng) {
  CMatrix z(n, n);
  for (int c = 0; c < n; ++c) z.col(c) = gaussian_vector(n, rng);
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const Complex d = r(i, i);
    if (std::abs(d) > 0.0) q.col(i) *= d / std::abs(d);
  }
  return to_special_unitary(q);
}

LocalUnitaryTuple random_local_unitaries(const Dims& dims, Symmetry symmetry,
                                         Rng& rng) {
  std::vector<CMatrix> blocks;
  if (symmetry == Symmetry::distinguishable) {
    for (int d : dims) blocks.push_back(random_special_unitary(d, rng));
  } else {
    const CMatrix u = random_special_unitary(dims.front(), rng);
    blocks.assign(dims.size(), u);
  }
  return LocalUnitaryTuple::make(std::move(blocks));
}

}  // namespace orbitent

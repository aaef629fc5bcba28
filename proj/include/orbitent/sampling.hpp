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

#include <random>

#include "orbitent/tensor_states.hpp"
#include "orbitent/types.hpp"

namespace orbitent {

using Rng = std::mt19937_64;

/// Normalized complex-Gaussian tensor, projected onto Sym^M / Alt^M for
/// indistinguishable particles.
StateTensor random_state(const Dims& dims, Symmetry symmetry, Rng& rng);

/// Product of independent random local vectors.
StateTensor random_product_state(const Dims& dims, Rng& rng);

/// Haar-distributed element of SU(n) (QR of a Ginibre matrix with the phase
/// fix, then det-normalized).
CMatrix random_special_unitary(int n, Rng& rng);

/// Independent blocks for distinguishable parties, one shared block
/// otherwise.
LocalUnitaryTuple random_local_unitaries(const Dims& dims, Symmetry symmetry,
                                         Rng& rng);

}  // namespace orbitent

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

#include <cmath>
#include <vector>

#include "orbitent/sampling.hpp"
#include "orbitent/tensor_states.hpp"

namespace orbitent::testing {

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

inline StateTensor from_flat(const Dims& dims, std::vector<Complex> values,
                             Symmetry s = Symmetry::distinguishable) {
  RawTensor raw{dims, Eigen::Map<CVector>(values.data(), static_cast<Eigen::Index>(values.size()))};
  return build_state(raw, s);
}

inline StateTensor basis_state(const Dims& dims, const std::vector<int>& index) {
  return build_state(basis_tensor(dims, index), Symmetry::distinguishable);
}

// (e1 e2 + e2 e1)/sqrt2
inline StateTensor bell() { return from_flat({2, 2}, {0, 1, 1, 0}); }
inline StateTensor bell_minus() { return from_flat({2, 2}, {0, 1, -1, 0}); }
inline StateTensor ghz() { return from_flat({2, 2, 2}, {1, 0, 0, 0, 0, 0, 0, 1}); }
inline StateTensor w_state() { return from_flat({2, 2, 2}, {0, 1, 1, 0, 1, 0, 0, 0}); }

inline Rng rng(std::uint64_t seed) { return Rng(seed); }

}  // namespace orbitent::testing

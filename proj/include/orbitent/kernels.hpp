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

// Dense inner loops of the library. Every kernel exists twice: a serial
// reference in `serial` and an OpenMP version in `parallel`. Each output
// entry is accumulated in the same fixed order in both, so the two agree
// bit for bit regardless of thread count.

#include <cstddef>
#include <span>

#include "orbitent/types.hpp"

namespace orbitent::kernels {

/// View of a row-major M-index tensor as (outer, extent, inner) around one
/// party's index.
struct ModeLayout {
  std::size_t outer = 1;
  std::size_t extent = 1;
  std::size_t inner = 1;
};

ModeLayout mode_layout(const Dims& dims, int party);

namespace serial {

/// out += (I (x) m (x) I) in, with m acting on the layout's middle index.
template <class T, class Mat>
void mode_apply_add(const ModeLayout& l, const Mat& m, const T* in, T* out) {
  for (std::size_t o = 0; o < l.outer; ++o) {
    for (std::size_t a = 0; a < l.extent; ++a) {
      for (std::size_t i = 0; i < l.inner; ++i) {
        T acc{};
        for (std::size_t b = 0; b < l.extent; ++b) {
          const T coef = static_cast<T>(m(a, b));
          if (coef == T{}) continue;
          acc += coef * in[(o * l.extent + b) * l.inner + i];
        }
        out[(o * l.extent + a) * l.inner + i] += acc;
      }
    }
  }
}

CMatrix reduced_matrix(const ModeLayout& l, const Complex* coeffs);
CMatrix hermitian_products(const CMatrix& columns);
CMatrix generator_images(const Dims& dims, const CVector& v,
                         std::span<const AlgebraElement> generators);

}  // namespace serial

namespace parallel {

template <class T, class Mat>
void mode_apply_add(const ModeLayout& l, const Mat& m, const T* in, T* out) {
  const auto rows = static_cast<std::ptrdiff_t>(l.outer * l.extent);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    const std::size_t o = static_cast<std::size_t>(r) / l.extent;
    const std::size_t a = static_cast<std::size_t>(r) % l.extent;
    for (std::size_t i = 0; i < l.inner; ++i) {
      T acc{};
      for (std::size_t b = 0; b < l.extent; ++b) {
        const T coef = static_cast<T>(m(a, b));
        if (coef == T{}) continue;
        acc += coef * in[(o * l.extent + b) * l.inner + i];
      }
      out[(o * l.extent + a) * l.inner + i] += acc;
    }
  }
}

CMatrix reduced_matrix(const ModeLayout& l, const Complex* coeffs);
CMatrix hermitian_products(const CMatrix& columns);
CMatrix generator_images(const Dims& dims, const CVector& v,
                         std::span<const AlgebraElement> generators);

}  // namespace parallel

/// Number of threads the parallel kernels will use.
int max_threads();

}  // namespace orbitent::kernels

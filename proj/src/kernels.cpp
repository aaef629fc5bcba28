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

#include "orbitent/kernels.hpp"

#include <cstddef>

#ifdef ORBITENT_HAVE_OPENMP
#include <omp.h>
#endif

#include "orbitent/error.hpp"

namespace orbitent::kernels {

ModeLayout mode_layout(const Dims& dims, int party) {
  if (party < 0 || party >= static_cast<int>(dims.size()))
    throw Error(ErrorKind::DimensionMismatch, "party index out of range");
  ModeLayout l;
  for (int k = 0; k < party; ++k) l.outer *= static_cast<std::size_t>(dims[k]);
  l.extent = static_cast<std::size_t>(dims[party]);
  for (std::size_t k = party + 1; k < dims.size(); ++k)
    l.inner *= static_cast<std::size_t>(dims[k]);
  return l;
}

int max_threads() {
#ifdef ORBITENT_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

Complex reduced_entry(const ModeLayout& l, const Complex* c, std::size_t n,
                      std::size_t m) {
  Complex acc{};
  for (std::size_t o = 0; o < l.outer; ++o) {
    const Complex* row_n = c + (o * l.extent + n) * l.inner;
    const Complex* row_m = c + (o * l.extent + m) * l.inner;
    for (std::size_t i = 0; i < l.inner; ++i)
      acc += std::conj(row_n[i]) * row_m[i];
  }
  return acc;
}

Complex column_product(const CMatrix& t, Eigen::Index a, Eigen::Index b) {
  Complex acc{};
  const Complex* x = t.col(a).data();
  const Complex* y = t.col(b).data();
  for (Eigen::Index k = 0; k < t.rows(); ++k) acc += std::conj(x[k]) * y[k];
  return acc;
}

void check_generator(const Dims& dims, const AlgebraElement& g) {
  if (g.blocks.size() != dims.size())
    throw Error(ErrorKind::DimensionMismatch,
                "algebra element has wrong number of party blocks");
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const auto& b = g.blocks[k];
    if (b.size() != 0 && (b.rows() != dims[k] || b.cols() != dims[k]))
      throw Error(ErrorKind::DimensionMismatch,
                  "algebra block does not match local dimension");
  }
}

// A v - v <v|A v> for one generator, fully serial so that both kernel
// variants produce identical columns.
CVector projected_image(const Dims& dims, const CVector& v,
                        const AlgebraElement& g) {
  CVector w = CVector::Zero(v.size());
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (g.blocks[k].size() == 0) continue;
    serial::mode_apply_add(mode_layout(dims, static_cast<int>(k)),
                           g.blocks[k], v.data(), w.data());
  }
  Complex overlap{};
  for (Eigen::Index i = 0; i < v.size(); ++i) overlap += std::conj(v[i]) * w[i];
  for (Eigen::Index i = 0; i < v.size(); ++i) w[i] -= v[i] * overlap;
  return w;
}

}  // namespace

namespace serial {

CMatrix reduced_matrix(const ModeLayout& l, const Complex* coeffs) {
  const auto n = static_cast<Eigen::Index>(l.extent);
  CMatrix r(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = a; b < n; ++b) {
      r(a, b) = reduced_entry(l, coeffs, a, b);
      r(b, a) = std::conj(r(a, b));
    }
    r(a, a) = Complex(r(a, a).real(), 0.0);
  }
  return r;
}

CMatrix hermitian_products(const CMatrix& t) {
  const Eigen::Index n = t.cols();
  CMatrix h(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = a; b < n; ++b) {
      h(a, b) = column_product(t, a, b);
      h(b, a) = std::conj(h(a, b));
    }
    h(a, a) = Complex(h(a, a).real(), 0.0);
  }
  return h;
}

CMatrix generator_images(const Dims& dims, const CVector& v,
                         std::span<const AlgebraElement> generators) {
  CMatrix t(v.size(), static_cast<Eigen::Index>(generators.size()));
  for (std::size_t a = 0; a < generators.size(); ++a) {
    check_generator(dims, generators[a]);
    t.col(static_cast<Eigen::Index>(a)) =
        projected_image(dims, v, generators[a]);
  }
  return t;
}

}  // namespace serial

namespace parallel {

CMatrix reduced_matrix(const ModeLayout& l, const Complex* coeffs) {
  const auto n = static_cast<std::ptrdiff_t>(l.extent);
  CMatrix r(n, n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t a = 0; a < n; ++a) {
    for (std::ptrdiff_t b = a; b < n; ++b)
      r(a, b) = reduced_entry(l, coeffs, static_cast<std::size_t>(a),
                              static_cast<std::size_t>(b));
  }
  for (std::ptrdiff_t a = 0; a < n; ++a) {
    for (std::ptrdiff_t b = a + 1; b < n; ++b) r(b, a) = std::conj(r(a, b));
    r(a, a) = Complex(r(a, a).real(), 0.0);
  }
  return r;
}

CMatrix hermitian_products(const CMatrix& t) {
  const auto n = static_cast<std::ptrdiff_t>(t.cols());
  CMatrix h(n, n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t a = 0; a < n; ++a) {
    for (std::ptrdiff_t b = a; b < n; ++b) h(a, b) = column_product(t, a, b);
  }
  for (std::ptrdiff_t a = 0; a < n; ++a) {
    for (std::ptrdiff_t b = a + 1; b < n; ++b) h(b, a) = std::conj(h(a, b));
    h(a, a) = Complex(h(a, a).real(), 0.0);
  }
  return h;
}

CMatrix generator_images(const Dims& dims, const CVector& v,
                         std::span<const AlgebraElement> generators) {
  for (const auto& g : generators) check_generator(dims, g);
  const auto n = static_cast<std::ptrdiff_t>(generators.size());
  CMatrix t(v.size(), n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t a = 0; a < n; ++a)
    t.col(a) = projected_image(dims, v, generators[static_cast<std::size_t>(a)]);
  return t;
}

}  // namespace parallel

}  // namespace orbitent::kernels

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

#include <gtest/gtest.h>

#include "orbitent/kernels.hpp"
#include "orbitent/lie_structure.hpp"
#include "orbitent/sampling.hpp"
#include "support.hpp"

using namespace orbitent;
using namespace orbitent::testing;

// Serial and parallel kernels must agree bit for bit.

TEST(Kernels, ModeLayout) {
  const auto l = kernels::mode_layout({2, 3, 4}, 1);
  EXPECT_EQ(l.outer, 2u);
  EXPECT_EQ(l.extent, 3u);
  EXPECT_EQ(l.inner, 4u);
}

TEST(Kernels, ModeApplyBitIdentical) {
  auto r = rng(51);
  const Dims dims{3, 4, 5};
  const StateTensor s = random_state(dims, Symmetry::distinguishable, r);
  for (int party = 0; party < 3; ++party) {
    const CMatrix m = random_special_unitary(dims[static_cast<std::size_t>(party)], r);
    const auto l = kernels::mode_layout(dims, party);
    CVector a = CVector::Zero(s.coeffs().size()), b = a;
    kernels::serial::mode_apply_add(l, m, s.coeffs().data(), a.data());
    kernels::parallel::mode_apply_add(l, m, s.coeffs().data(), b.data());
    EXPECT_EQ(a, b) << "party " << party;
  }
}

TEST(Kernels, ReducedMatrixBitIdentical) {
  auto r = rng(52);
  const Dims dims{4, 3, 5, 2};
  const StateTensor s = random_state(dims, Symmetry::distinguishable, r);
  for (int party = 0; party < 4; ++party) {
    const auto l = kernels::mode_layout(dims, party);
    const CMatrix a = kernels::serial::reduced_matrix(l, s.coeffs().data());
    const CMatrix b = kernels::parallel::reduced_matrix(l, s.coeffs().data());
    EXPECT_EQ(a, b);
    for (Eigen::Index i = 0; i < a.rows(); ++i) EXPECT_EQ(a(i, i).imag(), 0.0);
    EXPECT_EQ(a, a.adjoint());
  }
}

TEST(Kernels, GeneratorImagesAndGramBitIdentical) {
  auto r = rng(53);
  for (const Dims& dims : {Dims{3, 3}, Dims{2, 3, 4}}) {
    const StateTensor s = random_state(dims, Symmetry::distinguishable, r);
    std::vector<AlgebraElement> gens;
    for (const auto& e : su_basis(dims).elements) gens.push_back(e.element);
    const CMatrix ts = kernels::serial::generator_images(dims, s.coeffs(), gens);
    const CMatrix tp = kernels::parallel::generator_images(dims, s.coeffs(), gens);
    EXPECT_EQ(ts, tp);
    const CMatrix hs = kernels::serial::hermitian_products(ts);
    const CMatrix hp = kernels::parallel::hermitian_products(ts);
    EXPECT_EQ(hs, hp);
    EXPECT_NEAR((hs - ts.adjoint() * ts).norm(), 0.0, 1e-12);
  }
}

TEST(Kernels, ThreadsReported) { EXPECT_GE(kernels::max_threads(), 1); }

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

#include <limits>

#include "orbitent/error.hpp"
#include "orbitent/sampling.hpp"
#include "orbitent/tensor_states.hpp"
#include "support.hpp"

using namespace orbitent;
using namespace orbitent::testing;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(BuildState, ProductIsKept) {
  const StateTensor s = from_flat({2, 2}, {1, 0, 0, 0});
  EXPECT_DOUBLE_EQ(s.coeffs().norm(), 1.0);
  EXPECT_EQ(s.at({0, 0}), Complex(1.0));
  EXPECT_EQ(s.parties(), 2);
  EXPECT_EQ(s.size(), 4u);
}

TEST(BuildState, NormalizesBySqrt2) {
  const StateTensor s = from_flat({2, 2}, {0, 1, 1, 0});
  EXPECT_NEAR(s.at({0, 1}).real(), kInvSqrt2, 1e-15);
  EXPECT_NEAR(s.at({1, 0}).real(), kInvSqrt2, 1e-15);
}

TEST(BuildState, SymmetricTensorIsNotFermionic) {
  EXPECT_EQ(kind_of([] { from_flat({2, 2}, {0, 1, 1, 0}, Symmetry::fermionic); }),
            ErrorKind::SymmetryViolation);
  EXPECT_NO_THROW(from_flat({2, 2}, {0, 1, -1, 0}, Symmetry::fermionic));
  EXPECT_NO_THROW(from_flat({2, 2}, {0, 1, 1, 0}, Symmetry::bosonic));
  EXPECT_EQ(kind_of([] { from_flat({2, 2}, {0, 1, -1, 0}, Symmetry::bosonic); }),
            ErrorKind::SymmetryViolation);
}

TEST(BuildState, FermionicDiagonalMustVanish) {
  EXPECT_EQ(kind_of([] { from_flat({2, 2}, {1, 0, 0, 0}, Symmetry::fermionic); }),
            ErrorKind::SymmetryViolation);
}

TEST(BuildState, ZeroAndShapeErrors) {
  EXPECT_EQ(kind_of([] { from_flat({2, 2}, {0, 0, 0, 0}); }), ErrorKind::ZeroState);
  EXPECT_EQ(kind_of([] { from_flat({2, 2}, {1, 0, 0}); }), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([] { from_flat({1, 2}, {1, 0}); }), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([] { from_flat({2, 3}, {1, 0, 0, 0, 0, 0}, Symmetry::bosonic); }),
            ErrorKind::DimensionMismatch);
}

TEST(BuildState, SinglePartyAllowed) {
  const StateTensor s = from_flat({3}, {1, 1, 0});
  EXPECT_EQ(s.parties(), 1);
  EXPECT_NEAR(s.coeffs().norm(), 1.0, 1e-15);
}

TEST(Symmetrize, Examples) {
  const RawTensor e12 = basis_tensor({2, 2}, {0, 1});
  const StateTensor f = symmetrize(e12, Symmetry::fermionic);
  EXPECT_NEAR(f.at({0, 1}).real(), kInvSqrt2, 1e-15);
  EXPECT_NEAR(f.at({1, 0}).real(), -kInvSqrt2, 1e-15);
  EXPECT_EQ(f.symmetry(), Symmetry::fermionic);

  const StateTensor b = symmetrize(e12, Symmetry::bosonic);
  EXPECT_NEAR(b.at({0, 1}).real(), kInvSqrt2, 1e-15);
  EXPECT_NEAR(b.at({1, 0}).real(), kInvSqrt2, 1e-15);

  EXPECT_EQ(kind_of([] { symmetrize(basis_tensor({2, 2}, {0, 0}), Symmetry::fermionic); }),
            ErrorKind::ZeroState);
}

TEST(Symmetrize, ThreeFermionsInFourModes) {
  const StateTensor f = symmetrize(basis_tensor({4, 4, 4}, {0, 1, 2}), Symmetry::fermionic);
  const double a = 1.0 / std::sqrt(6.0);
  EXPECT_NEAR(f.at({0, 1, 2}).real(), a, 1e-15);
  EXPECT_NEAR(f.at({1, 0, 2}).real(), -a, 1e-15);
  EXPECT_NEAR(f.at({2, 0, 1}).real(), a, 1e-15);
  EXPECT_EQ(f.at({0, 0, 2}), Complex(0.0));
}

TEST(LocalUnitaryTuple, RejectsNonSpecial) {
  CMatrix u = CMatrix::Identity(2, 2);
  u(1, 1) = Complex(0, 1);  // det = i
  EXPECT_EQ(kind_of([&] { LocalUnitaryTuple::make({u}); }), ErrorKind::NotSpecialUnitary);
  const auto g = LocalUnitaryTuple::make({u}, true);
  EXPECT_NEAR(std::abs(g.blocks()[0].determinant() - Complex(1.0)), 0.0, 1e-12);

  CMatrix m = CMatrix::Identity(2, 2);
  m(0, 1) = 0.5;
  EXPECT_EQ(kind_of([&] { LocalUnitaryTuple::make({m}, true); }), ErrorKind::NotSpecialUnitary);
}

TEST(ApplyLocal, IdentityLeavesStateUnchanged) {
  auto r = rng(1);
  const StateTensor s = random_state({2, 3, 2}, Symmetry::distinguishable, r);
  const StateTensor t = apply_local(s, LocalUnitaryTuple::identity(s.dims()));
  EXPECT_EQ(s.coeffs(), t.coeffs());
}

TEST(ApplyLocal, BipartiteIsUCVTranspose) {
  auto r = rng(2);
  const StateTensor s = random_state({2, 3}, Symmetry::distinguishable, r);
  const CMatrix u = random_special_unitary(2, r);
  const CMatrix v = random_special_unitary(3, r);
  const StateTensor t = apply_local(s, LocalUnitaryTuple::make({u, v}));
  // row-major coefficients: C(i,j) = coeffs[3i + j]
  Eigen::Matrix<Complex, 2, 3, Eigen::RowMajor> c;
  for (int i = 0; i < 6; ++i) c.data()[i] = s.coeffs()[i];
  const CMatrix expect = u * c * v.transpose();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(std::abs(t.at({i, j}) - expect(i, j)), 0.0, 1e-14);
}

TEST(ApplyLocal, PhaseRotationFixesBellProjectively) {
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = Complex(0, 1);
  d(1, 1) = Complex(0, -1);
  const StateTensor b = bell();
  const StateTensor t = apply_local(b, LocalUnitaryTuple::make({d, d}));
  EXPECT_TRUE(projectively_equal(b, t));
}

TEST(ApplyLocal, IndistinguishableNeedsIdenticalBlocks) {
  auto r = rng(3);
  const StateTensor s = random_state({3, 3}, Symmetry::bosonic, r);
  const auto g = LocalUnitaryTuple::make({random_special_unitary(3, r), random_special_unitary(3, r)});
  EXPECT_EQ(kind_of([&] { apply_local(s, g); }), ErrorKind::SymmetryViolation);
  const auto h = random_local_unitaries(s.dims(), s.symmetry(), r);
  const StateTensor t = apply_local(s, h);
  EXPECT_EQ(t.symmetry(), Symmetry::bosonic);
}

TEST(ApplyLocal, DimensionMismatch) {
  auto r = rng(4);
  const StateTensor s = random_state({2, 2}, Symmetry::distinguishable, r);
  EXPECT_EQ(kind_of([&] { apply_local(s, LocalUnitaryTuple::identity({2, 3})); }),
            ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([&] { apply_local(s, LocalUnitaryTuple::identity({2})); }),
            ErrorKind::DimensionMismatch);
}

TEST(Indexing, FlatAndMultiIndexAgree) {
  const Dims dims{2, 3, 4};
  for (std::size_t f = 0; f < 24; ++f) EXPECT_EQ(flat_index(dims, multi_index(dims, f)), f);
  EXPECT_EQ(flat_index(dims, {1, 2, 3}), 23u);
}

TEST(Projective, GlobalPhaseIgnored) {
  const StateTensor a = from_flat({2, 2}, {0, 1, 1, 0});
  const StateTensor b = from_flat({2, 2}, {0, Complex(0, 2), Complex(0, 2), 0});
  EXPECT_TRUE(projectively_equal(a, b));
  EXPECT_FALSE(projectively_equal(a, bell_minus()));
}

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

#include "orbitent/error.hpp"
#include "orbitent/lie_structure.hpp"
#include "orbitent/sampling.hpp"
#include "orbitent/symplectic_oracle.hpp"
#include "support.hpp"

using namespace orbitent;
using namespace orbitent::testing;

namespace {

OracleSummary rsd(const StateTensor& s) { return degeneracy_rank(s).summary(); }

AlgebraElement single(const CMatrix& m) { return AlgebraElement{{m}}; }

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

TEST(FubiniStudy, SignConvention) {
  CMatrix a = CMatrix::Zero(2, 2), b = CMatrix::Zero(2, 2);
  a(0, 1) = a(1, 0) = Complex(0, 1);
  b(0, 1) = 1;
  b(1, 0) = -1;
  const CVector e1 = CVector::Unit(2, 0);
  EXPECT_NEAR(fubini_study_omega({2}, e1, single(a), single(b)), -1.0, 1e-15);
  EXPECT_NEAR(fubini_study_omega_commutator({2}, e1, single(a), single(b)), -1.0, 1e-15);
  EXPECT_NEAR(fubini_study_omega({2}, e1, single(b), single(a)), 1.0, 1e-15);
}

TEST(FubiniStudy, SelfPairingVanishes) {
  auto r = rng(41);
  const StateTensor s = random_state({2, 3}, Symmetry::distinguishable, r);
  for (const auto& e : su_basis({2, 3}).elements)
    EXPECT_NEAR(fubini_study_omega(s.dims(), s.coeffs(), e.element, e.element), 0.0, 1e-15);
}

TEST(FubiniStudy, BellIsFullyDegenerate) {
  const StateTensor b = bell();
  const LieBasis basis = su_basis({2, 2});
  for (const auto& x : basis.elements)
    for (const auto& y : basis.elements)
      EXPECT_NEAR(fubini_study_omega(b.dims(), b.coeffs(), x.element, y.element), 0.0, 1e-15);
}

TEST(FubiniStudy, NotNormalized) {
  const CVector v = 2.0 * CVector::Unit(4, 0);
  const LieBasis basis = su_basis({2, 2});
  EXPECT_EQ(kind_of([&] { fubini_study_omega({2, 2}, v, basis.elements[0].element, basis.elements[1].element); }),
            ErrorKind::NotNormalized);
  EXPECT_EQ(kind_of([&] {
              fubini_study_omega_commutator({2, 2}, v, basis.elements[0].element, basis.elements[1].element);
            }),
            ErrorKind::NotNormalized);
}

TEST(TangentFrame, OrthogonalToBase) {
  auto r = rng(42);
  const StateTensor s = random_state({2, 2, 3}, Symmetry::distinguishable, r);
  const TangentFrame f = tangent_frame(s);
  EXPECT_EQ(f.tangents.cols(), static_cast<Eigen::Index>(3 + 3 + 8));
  for (Eigen::Index a = 0; a < f.tangents.cols(); ++a)
    EXPECT_LT(std::abs(f.base.dot(f.tangents.col(a))), 1e-12);
  EXPECT_LE(f.rank, static_cast<int>(f.tangents.cols()));
  EXPECT_NEAR((f.gram - f.gram.transpose()).norm(), 0.0, 0.0);
}

TEST(Oracle, FrozenValues) {
  EXPECT_EQ(rsd(basis_state({2, 2}, {0, 0})), (OracleSummary{4, 4, 0}));
  EXPECT_EQ(rsd(bell()), (OracleSummary{3, 0, 3}));
  EXPECT_EQ(rsd(bell_minus()), (OracleSummary{3, 0, 3}));
  EXPECT_EQ(rsd(ghz()), (OracleSummary{7, 0, 7}));
  EXPECT_EQ(rsd(w_state()), (OracleSummary{8, 6, 2}));
  auto r = rng(43);
  EXPECT_EQ(rsd(random_state({3, 3}, Symmetry::distinguishable, r)), (OracleSummary{14, 12, 2}));
  EXPECT_EQ(rsd(random_state({2, 2, 2}, Symmetry::distinguishable, r)), (OracleSummary{9, 6, 3}));
}

TEST(Oracle, SymmetricAndAntisymmetricSectors) {
  const StateTensor e12 = symmetrize(basis_tensor({3, 3}, {0, 1}), Symmetry::bosonic);
  EXPECT_GE(rsd(e12).degeneracy, 1);
  const StateTensor e11 = symmetrize(basis_tensor({3, 3}, {0, 0}), Symmetry::bosonic);
  EXPECT_EQ(rsd(e11).degeneracy, 0);
  // Alt^2(C^2) is one-dimensional: the orbit is a point
  const StateTensor wedge = symmetrize(basis_tensor({2, 2}, {0, 1}), Symmetry::fermionic);
  EXPECT_EQ(rsd(wedge), (OracleSummary{0, 0, 0}));
  // e1 e1 e2 in Sym^3(C^2) is a weight vector on a symplectic orbit
  const StateTensor w3 = symmetrize(basis_tensor({2, 2, 2}, {0, 0, 1}), Symmetry::bosonic);
  EXPECT_EQ(rsd(w3).degeneracy, 0);
}

TEST(Oracle, RankIsEvenAndGramFrameIsOrthonormal) {
  auto r = rng(44);
  for (const Dims& dims : {Dims{2, 2}, Dims{2, 3}, Dims{3, 3}, Dims{2, 2, 2}, Dims{2, 2, 3}}) {
    const OracleResult o = degeneracy_rank(random_state(dims, Symmetry::distinguishable, r));
    EXPECT_EQ(o.symplectic_rank % 2, 0);
    EXPECT_EQ(o.degeneracy, o.orbit_dim - o.symplectic_rank);
    EXPECT_EQ(o.form.omega, -o.form.omega.transpose());
    EXPECT_EQ(o.form.restricted.rows(), o.orbit_dim);
  }
}

TEST(Oracle, Guards) {
  const Dims big{2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2};  // 8192 amplitudes
  RawTensor raw = basis_tensor(big, std::vector<int>(big.size(), 0));
  const StateTensor s = build_state(raw, Symmetry::distinguishable);
  EXPECT_EQ(kind_of([&] { degeneracy_rank(s); }), ErrorKind::EnumerationTooLarge);
  // su(9) + su(9) + su(9) + su(9) = 320 generators
  const StateTensor t = build_state(basis_tensor({9, 9, 9, 9}, {0, 0, 0, 0}), Symmetry::distinguishable);
  EXPECT_EQ(kind_of([&] { degeneracy_rank(t); }), ErrorKind::EnumerationTooLarge);
}

TEST(Oracle, RankUnstableNearThreshold) {
  // second Schmidt coefficient squared ~ 1e-8 puts tangent norms near the cut
  const double eps = 1e-4;
  const StateTensor s = from_flat({2, 2}, {1, 0, 0, eps});
  EXPECT_EQ(kind_of([&] { degeneracy_rank(s, 1e-8); }), ErrorKind::RankUnstable);
  EXPECT_NO_THROW(degeneracy_rank(s, 1e-3));
}

TEST(Verify, ExactAndBoundsKinds) {
  const ConsistencyRecord b = verify_against_formula(bell());
  EXPECT_TRUE(b.passed);
  EXPECT_EQ(b.kind, "exact");
  EXPECT_EQ(b.formula_orbit_dim, 3);
  EXPECT_EQ(std::get<int>(b.formula_degeneracy), 3);

  const ConsistencyRecord g = verify_against_formula(ghz());
  EXPECT_TRUE(g.passed);
  EXPECT_EQ(g.kind, "bounds");
  EXPECT_EQ(std::get<DegeneracyInterval>(g.formula_degeneracy), (DegeneracyInterval{3, 9}));
  EXPECT_EQ(g.oracle.degeneracy, 7);
}

TEST(Verify, RandomSamples) {
  auto r = rng(45);
  for (int i = 0; i < 30; ++i)
    EXPECT_TRUE(verify_against_formula(random_state({2, 2}, Symmetry::distinguishable, r)).passed);
  for (int i = 0; i < 20; ++i)
    EXPECT_TRUE(verify_against_formula(random_state({3, 3}, Symmetry::distinguishable, r)).passed);
  for (int i = 0; i < 20; ++i)
    EXPECT_TRUE(verify_against_formula(random_state({2, 2, 2}, Symmetry::distinguishable, r)).passed);
}

TEST(Verify, DetectsMismatch) {
  const auto c = std::vector<SpectrumClustering>(2, cluster_spectrum(std::vector<double>{0.5, 0.5}));
  const ConsistencyRecord rec = compare_with_formula({2, 2}, c, OracleSummary{4, 4, 0});
  EXPECT_FALSE(rec.passed);
  EXPECT_NE(rec.detail.find("(3, 0, 3)"), std::string::npos);
}

TEST(Verify, UnsupportedClasses) {
  auto r = rng(46);
  EXPECT_EQ(kind_of([&] { verify_against_formula(random_state({2, 3}, Symmetry::distinguishable, r)); }),
            ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([&] { verify_against_formula(random_state({3, 3}, Symmetry::bosonic, r)); }),
            ErrorKind::InvalidArgument);
  EXPECT_FALSE(has_closed_form({2, 3}, Symmetry::distinguishable));
  EXPECT_TRUE(has_closed_form({2, 3, 4}, Symmetry::distinguishable));
}

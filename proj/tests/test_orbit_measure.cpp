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
#include "orbitent/moment_map.hpp"
#include "orbitent/orbit_measure.hpp"
#include "support.hpp"

using namespace orbitent;
using namespace orbitent::testing;

namespace {

SpectrumClustering make(int kernel, std::vector<int> mults) {
  SpectrumClustering c;
  c.kernel = kernel;
  double v = 1.0;
  for (int m : mults) c.blocks.push_back({v, m}), v /= 2;
  return c;
}

std::vector<SpectrumClustering> clusterings_of(const StateTensor& s) {
  std::vector<SpectrumClustering> out;
  for (const auto& sp : reduced_matrices(s).spectra()) out.push_back(cluster_spectrum(sp));
  return out;
}

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

TEST(ClusterSpectrum, Examples) {
  const auto a = cluster_spectrum(std::vector<double>{0.5, 0.5}, 1e-8);
  EXPECT_EQ(a.kernel, 0);
  ASSERT_EQ(a.blocks.size(), 1u);
  EXPECT_EQ(a.blocks[0].multiplicity, 2);

  const auto b = cluster_spectrum(std::vector<double>{1.0, 0.0}, 1e-8);
  EXPECT_EQ(b.kernel, 1);
  ASSERT_EQ(b.blocks.size(), 1u);
  EXPECT_EQ(b.blocks[0].multiplicity, 1);

  const auto c = cluster_spectrum(std::vector<double>{0.6, 0.4 - 1e-9, 1e-12}, 1e-8);
  EXPECT_EQ(c.kernel, 1);
  ASSERT_EQ(c.blocks.size(), 2u);
  EXPECT_DOUBLE_EQ(c.blocks[0].value, 0.6);
  EXPECT_NEAR(c.blocks[1].value, 0.4, 1e-8);
  EXPECT_EQ(c.tol, 1e-8);
}

TEST(ClusterSpectrum, InvariantsAndOrdering) {
  const auto c = cluster_spectrum(std::vector<double>{0.1, 0.3, 0.3, 0.3, 0.0});
  EXPECT_EQ(c.total(), 5);
  EXPECT_EQ(c.kernel, 1);
  ASSERT_EQ(c.blocks.size(), 2u);
  EXPECT_EQ(c.blocks[0].multiplicity, 3);
  EXPECT_EQ(c.blocks[1].multiplicity, 1);
  EXPECT_EQ(c.nonzero_square_sum(), 10);
  EXPECT_EQ(c.square_sum(), 11);
}

TEST(ClusterSpectrum, AmbiguousGap) {
  // a gap of 1e-8 sits exactly at tol * max with tol = 1e-8
  EXPECT_EQ(kind_of([] { cluster_spectrum(std::vector<double>{0.5 + 5e-9, 0.5 - 5e-9}, 1e-8); }),
            ErrorKind::AmbiguousClustering);
  // an eigenvalue near the kernel cut
  EXPECT_EQ(kind_of([] { cluster_spectrum(std::vector<double>{1.0 - 2e-8, 2e-8}, 1e-8); }),
            ErrorKind::AmbiguousClustering);
  // not a probability vector
  EXPECT_THROW(cluster_spectrum(std::vector<double>{0.5, 0.4}), Error);
}

TEST(ClusterSpectrum, ToleranceChangesVerdict) {
  const std::vector<double> v{0.5 + 1e-5, 0.5 - 1e-5};
  EXPECT_EQ(cluster_spectrum(v, 1e-7).blocks.size(), 2u);
  EXPECT_EQ(cluster_spectrum(v, 1e-3).blocks.size(), 1u);
}

TEST(OrbitDimension, Bipartite) {
  EXPECT_EQ(orbit_dimension_bipartite(make(0, {2}), {2, 2}), 3);
  EXPECT_EQ(orbit_dimension_bipartite(make(1, {1}), {2, 2}), 4);
  EXPECT_EQ(orbit_dimension_bipartite(make(0, {1, 1, 1}), {3, 3}), 14);
  EXPECT_EQ(kind_of([] { orbit_dimension_bipartite(make(1, {1}), {2, 3}); }), ErrorKind::UnequalDims);
  EXPECT_EQ(kind_of([] { orbit_dimension_bipartite(make(0, {2}), {2, 2, 2}); }),
            ErrorKind::NotBipartite);
}

TEST(CoadjointDimension, Examples) {
  const std::vector<SpectrumClustering> bell2{make(0, {2}), make(0, {2})};
  EXPECT_EQ(coadjoint_dimension(bell2, {2, 2}), 0);
  const std::vector<SpectrumClustering> prod{make(1, {1}), make(1, {1})};
  EXPECT_EQ(coadjoint_dimension(prod, {2, 2}), 4);
  const std::vector<SpectrumClustering> ghz3(3, make(0, {2}));
  EXPECT_EQ(coadjoint_dimension(ghz3, {2, 2, 2}), 0);
}

TEST(Degeneracy, Bipartite) {
  EXPECT_EQ(degeneracy_bipartite(make(0, {2}), {2, 2}), 3);
  EXPECT_EQ(degeneracy_bipartite(make(1, {1}), {2, 2}), 0);
  EXPECT_EQ(degeneracy_bipartite(make(0, {2, 1}), {3, 3}), 4);
  EXPECT_EQ(kind_of([] { degeneracy_bipartite(make(0, {1, 1}), {2, 3}); }), ErrorKind::UnequalDims);
}

TEST(Degeneracy, AdditivityOverAllClusterings) {
  // every multiplicity pattern of N <= 5
  for (int n = 2; n <= 5; ++n) {
    std::vector<std::vector<int>> parts{{}};
    std::vector<std::vector<int>> all;
    std::function<void(int, std::vector<int>)> rec = [&](int left, std::vector<int> cur) {
      if (left == 0) {
        all.push_back(cur);
        return;
      }
      for (int k = 1; k <= left; ++k) {
        cur.push_back(k);
        rec(left - k, cur);
        cur.pop_back();
      }
    };
    for (int kernel = 0; kernel < n; ++kernel) {
      all.clear();
      rec(n - kernel, {});
      for (const auto& mults : all) {
        const SpectrumClustering c = make(kernel, mults);
        const std::vector<SpectrumClustering> pair{c, c};
        EXPECT_EQ(degeneracy_bipartite(c, {n, n}),
                  orbit_dimension_bipartite(c, {n, n}) - coadjoint_dimension(pair, {n, n}));
      }
    }
  }
}

TEST(Bounds, Examples) {
  const auto g = degeneracy_bounds(clusterings_of(ghz()), {2, 2, 2});
  EXPECT_EQ(g, (DegeneracyInterval{3, 9}));
  const auto w = degeneracy_bounds(clusterings_of(w_state()), {2, 2, 2});
  EXPECT_EQ(w, (DegeneracyInterval{1, 3}));
  const auto p = degeneracy_bounds(clusterings_of(basis_state({2, 2, 2}, {0, 0, 0})), {2, 2, 2});
  EXPECT_EQ(p, (DegeneracyInterval{0, 0}));
  EXPECT_TRUE(g.contains(3));
  EXPECT_TRUE(g.contains(9));
  EXPECT_FALSE(g.contains(10));
}

TEST(Separability, Examples) {
  EXPECT_TRUE(separability_test(clusterings_of(basis_state({2, 3, 2}, {1, 2, 0}))));
  EXPECT_FALSE(separability_test(clusterings_of(bell())));
  EXPECT_FALSE(separability_test(clusterings_of(ghz())));
  EXPECT_FALSE(separability_test(clusterings_of(w_state())));
}

TEST(Report, SameIntegersIgnoresSpectrumValues) {
  DegeneracyReport a;
  a.dims = {2, 2};
  a.orbit_dim = 3;
  a.coadjoint_dim = 0;
  a.degeneracy = 3;
  a.separable = false;
  a.clusterings = {make(0, {2}), make(0, {2})};
  DegeneracyReport b = a;
  b.clusterings[0].blocks[0].value = 0.5000001;
  EXPECT_TRUE(same_integers(a, b));
  b.degeneracy = 2;
  EXPECT_FALSE(same_integers(a, b));
}

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

#include "orbitent/orbit_measure.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "orbitent/error.hpp"

namespace orbitent {

int SpectrumClustering::total() const {
  int n = kernel;
  for (const auto& b : blocks) n += b.multiplicity;
  return n;
}

int SpectrumClustering::nonzero_square_sum() const {
  int s = 0;
  for (const auto& b : blocks) s += b.multiplicity * b.multiplicity;
  return s;
}

int SpectrumClustering::square_sum() const {
  return kernel * kernel + nonzero_square_sum();
}

bool operator==(const SpectrumClustering::Block& a,
                const SpectrumClustering::Block& b) {
  return a.value == b.value && a.multiplicity == b.multiplicity;
}

bool operator==(const SpectrumClustering& a, const SpectrumClustering& b) {
  return a.kernel == b.kernel && a.blocks == b.blocks && a.tol == b.tol;
}

SpectrumClustering cluster_spectrum(std::span<const double> values, double tol) {
  if (values.empty())
    throw Error(ErrorKind::InvalidArgument, "empty spectrum");
  if (!(tol > 0.0 && tol < 1.0))
    throw Error(ErrorKind::InvalidArgument, "clustering tolerance must lie in (0,1)");

  std::vector<double> v(values.begin(), values.end());
  for (double& x : v) {
    if (!std::isfinite(x) || x < -1e-12 || x > 1.0 + 1e-8)
      throw Error(ErrorKind::InvalidArgument,
                  "spectrum entries must lie in [0,1], got " + std::to_string(x));
    x = std::max(x, 0.0);
  }
  const double sum = std::accumulate(v.begin(), v.end(), 0.0);
  if (std::abs(sum - 1.0) > 1e-8)
    throw Error(ErrorKind::InvalidArgument,
                "spectrum must sum to 1, got " + std::to_string(sum));

  std::sort(v.begin(), v.end(), std::greater<>());
  const double threshold = tol * v.front();
  auto ambiguous = [&](double gap) {
    return gap >= threshold / 10.0 && gap <= threshold * 10.0;
  };
  for (double x : v)
    if (ambiguous(x))
      throw Error(ErrorKind::AmbiguousClustering,
                  "eigenvalue " + std::to_string(x) +
                      " is within a factor 10 of the kernel threshold");
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i + 1] < threshold) break;
    if (ambiguous(v[i] - v[i + 1]))
      throw Error(ErrorKind::AmbiguousClustering,
                  "spectral gap " + std::to_string(v[i] - v[i + 1]) +
                      " is within a factor 10 of the clustering threshold");
  }

  SpectrumClustering c;
  c.tol = tol;
  double block_sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < threshold) {
      ++c.kernel;
      continue;
    }
    if (i > 0 && !c.blocks.empty() && v[i - 1] - v[i] < threshold) {
      auto& b = c.blocks.back();
      ++b.multiplicity;
      block_sum += v[i];
      b.value = block_sum / b.multiplicity;
    } else {
      c.blocks.push_back({v[i], 1});
      block_sum = v[i];
    }
  }
  return c;
}

namespace {

int require_equal_bipartite(const SpectrumClustering& c, const Dims& dims) {
  if (dims.size() != 2)
    throw Error(ErrorKind::NotBipartite, "closed form needs exactly two parties");
  if (dims[0] != dims[1])
    throw Error(ErrorKind::UnequalDims,
                "closed form needs equal local dimensions");
  if (c.total() != dims[0])
    throw Error(ErrorKind::DimensionMismatch,
                "clustering size does not match the local dimension");
  return dims[0];
}

void check_clusterings(std::span<const SpectrumClustering> cs, const Dims& dims) {
  if (cs.size() != dims.size())
    throw Error(ErrorKind::DimensionMismatch, "one clustering per party required");
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (cs[k].total() != dims[k])
      throw Error(ErrorKind::DimensionMismatch,
                  "clustering size does not match party " + std::to_string(k + 1));
}

}  // namespace

int orbit_dimension_bipartite(const SpectrumClustering& c, const Dims& dims) {
  const int n = require_equal_bipartite(c, dims);
  return 2 * n * n - 2 * c.kernel * c.kernel - c.nonzero_square_sum() - 1;
}

int coadjoint_dimension(std::span<const SpectrumClustering> clusterings,
                        const Dims& dims) {
  check_clusterings(clusterings, dims);
  int algebra = 0;
  int stabilizer = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    algebra += dims[k] * dims[k] - 1;
    stabilizer += clusterings[k].square_sum();
  }
  stabilizer -= static_cast<int>(dims.size());
  return algebra - stabilizer;
}

int degeneracy_bipartite(const SpectrumClustering& c, const Dims& dims) {
  require_equal_bipartite(c, dims);
  return c.nonzero_square_sum() - 1;
}

DegeneracyInterval degeneracy_bounds(std::span<const SpectrumClustering> clusterings,
                                     const Dims& dims) {
  check_clusterings(clusterings, dims);
  DegeneracyInterval d;
  int largest = 0;
  int total = 0;
  for (const auto& c : clusterings) {
    largest = std::max(largest, c.nonzero_square_sum());
    total += c.nonzero_square_sum();
  }
  d.low = largest - 1;
  d.high = total - static_cast<int>(clusterings.size());
  return d;
}

bool separability_test(std::span<const SpectrumClustering> clusterings) {
  return std::all_of(clusterings.begin(), clusterings.end(),
                     [](const SpectrumClustering& c) {
                       return c.nonzero_square_sum() == 1;
                     });
}

bool same_integers(const DegeneracyReport& a, const DegeneracyReport& b) {
  if (a.orbit_dim != b.orbit_dim || a.coadjoint_dim != b.coadjoint_dim ||
      a.degeneracy != b.degeneracy || a.separable != b.separable ||
      a.oracle != b.oracle || a.clusterings.size() != b.clusterings.size())
    return false;
  for (std::size_t k = 0; k < a.clusterings.size(); ++k) {
    const auto& x = a.clusterings[k];
    const auto& y = b.clusterings[k];
    if (x.kernel != y.kernel || x.blocks.size() != y.blocks.size()) return false;
    for (std::size_t n = 0; n < x.blocks.size(); ++n)
      if (x.blocks[n].multiplicity != y.blocks[n].multiplicity) return false;
  }
  return true;
}

}  // namespace orbitent

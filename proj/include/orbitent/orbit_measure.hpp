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

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "orbitent/types.hpp"

namespace orbitent {

/// Eigenvalue (or squared singular value) spectrum of one party split into a
/// kernel and blocks of equal nonzero values.
struct SpectrumClustering {
  struct Block {
    double value = 0.0;
    int multiplicity = 0;
  };

  int kernel = 0;             // m_0
  std::vector<Block> blocks;  // descending values, m_1 ... m_K
  double tol = tol::kCluster;

  int total() const;
  /// sum_{n>=1} m_n^2
  int nonzero_square_sum() const;
  /// sum_{n>=0} m_n^2, including the kernel block.
  int square_sum() const;
};

/// Greedy gap clustering of a spectrum that sums to one. Values below
/// tol * max go to the kernel, adjacent values closer than tol * max merge.
/// Throws AmbiguousClustering if any gap lies within a factor 10 of the
/// threshold.
SpectrumClustering cluster_spectrum(std::span<const double> values,
                                    double tol = tol::kCluster);

/// 2N^2 - 2 m_0^2 - sum m_n^2 - 1 for SU(N) x SU(N).
int orbit_dimension_bipartite(const SpectrumClustering& c, const Dims& dims);

/// sum_k (N_k^2 - 1) - (sum_k sum_n m_{k,n}^2 - M)
int coadjoint_dimension(std::span<const SpectrumClustering> clusterings,
                        const Dims& dims);

/// D = sum_{n>=1} m_n^2 - 1 for two parties of equal dimension.
int degeneracy_bipartite(const SpectrumClustering& c, const Dims& dims);

struct DegeneracyInterval {
  int low = 0;
  int high = 0;

  bool contains(int d) const { return low <= d && d <= high; }
  bool operator==(const DegeneracyInterval&) const = default;
};

/// [max_k sum_{n>=1} m_{k,n}^2 - 1, sum_k sum_{n>=1} m_{k,n}^2 - M]
DegeneracyInterval degeneracy_bounds(std::span<const SpectrumClustering> clusterings,
                                     const Dims& dims);

/// Every reduced matrix has exactly one nonzero eigenvalue.
bool separability_test(std::span<const SpectrumClustering> clusterings);

using Degeneracy = std::variant<int, DegeneracyInterval>;

/// Results of the numerical rank oracle attached to a report.
struct OracleSummary {
  int orbit_dim = 0;
  int symplectic_rank = 0;
  int degeneracy = 0;
  bool operator==(const OracleSummary&) const = default;
};

/// Closed-form formulas next to the oracle for one state.
struct ConsistencyRecord {
  bool passed = false;
  std::string kind;  // "exact" or "bounds"
  std::optional<int> formula_orbit_dim;
  int formula_coadjoint_dim = 0;
  Degeneracy formula_degeneracy = 0;
  OracleSummary oracle;
  std::string detail;
  bool operator==(const ConsistencyRecord&) const = default;
};

/// Bosonic nonentanglement under each convention. The symmetric-simple-tensor
/// verdict is only decided for two bosons.
struct BosonSeparability {
  std::optional<bool> symmetric_simple_tensor;
  bool product_of_same_vector = false;
  bool operator==(const BosonSeparability&) const = default;
};

struct DegeneracyReport {
  Dims dims;
  Symmetry symmetry = Symmetry::distinguishable;
  std::string method;  // "closed_form" or "oracle"
  std::optional<int> orbit_dim;
  std::optional<int> coadjoint_dim;
  Degeneracy degeneracy = 0;
  std::optional<bool> separable;
  std::optional<BosonConvention> boson_convention;
  std::optional<BosonSeparability> boson_separability;
  std::vector<SpectrumClustering> clusterings;
  std::optional<OracleSummary> oracle;
  std::optional<ConsistencyRecord> consistency;
};

bool operator==(const SpectrumClustering::Block& a, const SpectrumClustering::Block& b);
bool operator==(const SpectrumClustering& a, const SpectrumClustering& b);

/// Integer fields only; used for invariance checks along an orbit.
bool same_integers(const DegeneracyReport& a, const DegeneracyReport& b);

}  // namespace orbitent

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

#include <vector>

#include "orbitent/orbit_measure.hpp"
#include "orbitent/tensor_states.hpp"
#include "orbitent/types.hpp"

namespace orbitent {

/// Per party k, (C^k)_{nl} = sum over the other indices of conj(C_{..n..}) C_{..l..}.
struct ReducedMatrices {
  std::vector<CMatrix> blocks;

  /// Eigenvalues of each block, descending, clamped at zero.
  std::vector<std::vector<double>> spectra() const;
};

/// mu(psi) as traceless Hermitian one-party matrices X_k = C^k - I/N_k.
struct MomentImage {
  std::vector<CMatrix> blocks;
};

/// Singular value data of a bipartite coefficient matrix.
///
/// left * C * right is diagonal with nonnegative descending entries up to
/// the global phase recorded in `phase`; both unitaries are special
/// unitary, so apply_local(psi, {left, right^T}) == phase * canonical.
struct SchmidtData {
  std::vector<double> singular_values;  // all min(N1, N2) values, descending
  SpectrumClustering clustering;        // of the squared singular values
  CMatrix left;                         // U~
  CMatrix right;                        // V~
  Complex phase{1.0, 0.0};
  StateTensor canonical;                // sum_i p_i e_i (x) e_i
};

struct CanonicalForm {
  StateTensor state;
  LocalUnitaryTuple unitaries;
};

ReducedMatrices reduced_matrices(const StateTensor& state);
MomentImage moment_image(const StateTensor& state);

SchmidtData schmidt(const StateTensor& state, double cluster_tol = tol::kCluster);

/// Local unitaries that make every reduced matrix diagonal with descending
/// entries. For two parties the result is the Schmidt form up to phase.
CanonicalForm canonical_form(const StateTensor& state,
                             double cluster_tol = tol::kCluster);

/// Eigendecomposition h = W diag(values) W^H with descending values. Inside
/// each cluster of equal eigenvalues the basis is rebuilt by pivoted
/// Gram-Schmidt on the cluster's projector, so W depends only on the
/// eigenspaces.
struct DeterministicEigen {
  std::vector<double> values;
  CMatrix vectors;
  SpectrumClustering clustering;
};

DeterministicEigen deterministic_eigen(const CMatrix& hermitian, double cluster_tol);

}  // namespace orbitent

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

#include <span>
#include <vector>

#include "orbitent/lie_structure.hpp"
#include "orbitent/orbit_measure.hpp"
#include "orbitent/tensor_states.hpp"
#include "orbitent/types.hpp"

namespace orbitent {

// Numerical ground truth for the orbit dimension counts: builds the tangent
// space of the K-orbit in projective space from the generator images and
// restricts the Fubini-Study form to it.

/// omega_v(A_x, B_x) = -Im <Av|Bv> at a unit vector v.
double fubini_study_omega(const Dims& dims, const CVector& v,
                          const AlgebraElement& a, const AlgebraElement& b);

/// The same form evaluated as (i/2) <[A,B]v|v>.
double fubini_study_omega_commutator(const Dims& dims, const CVector& v,
                                     const AlgebraElement& a,
                                     const AlgebraElement& b);

inline constexpr std::size_t kMaxOracleHilbertDim = 4096;
inline constexpr std::size_t kMaxOracleAlgebraDim = 256;

struct TangentFrame {
  CVector base;
  CMatrix tangents;            // column a: A_a v - v <v|A_a v>
  RMatrix gram;                // Re <t_a|t_b>
  std::vector<double> gram_spectrum;  // descending
  int rank = 0;                // dim K.x
};

struct SymplecticGram {
  RMatrix omega;               // -Im <t_a|t_b>, exactly antisymmetric
  RMatrix restricted;          // omega in an orthonormal frame of the tangent span
  std::vector<double> singular_values;  // of `restricted`, descending
  int rank = 0;
};

struct OracleResult {
  int orbit_dim = 0;
  int symplectic_rank = 0;
  int degeneracy = 0;
  TangentFrame frame;
  SymplecticGram form;

  OracleSummary summary() const { return {orbit_dim, symplectic_rank, degeneracy}; }
};

TangentFrame tangent_frame(const StateTensor& state, double rank_tol = tol::kRank);

/// (r, s, D = r - s). Throws RankUnstable if a singular value of the Gram
/// matrix or of the restricted form lies within a factor 10 of the cut.
OracleResult degeneracy_rank(const StateTensor& state, double rank_tol = tol::kRank);

/// Compares the closed forms against the oracle. Supported: two parties of
/// equal dimension (exact) and distinguishable M >= 3 (bounds).
ConsistencyRecord verify_against_formula(const StateTensor& state,
                                         double cluster_tol = tol::kCluster,
                                         double rank_tol = tol::kRank);

/// The same comparison for clusterings and oracle values already at hand.
ConsistencyRecord compare_with_formula(const Dims& dims,
                                       std::span<const SpectrumClustering> clusterings,
                                       const OracleSummary& oracle);

/// Whether verify_against_formula accepts states of this shape.
bool has_closed_form(const Dims& dims, Symmetry symmetry);

}  // namespace orbitent

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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitent/tensor_states.hpp"
#include "orbitent/types.hpp"

namespace orbitent {

/// Party index used for the diagonal action of su(N) on Sym^M / Alt^M.
inline constexpr int kDiagonalAction = -1;

struct LieElement {
  int party = 0;  // or kDiagonalAction
  std::string label;
  CMatrix matrix;           // anti-Hermitian, traceless
  AlgebraElement element;   // the same matrix placed on the state's parties
};

/// Real basis of k = (+)_k su(N_k): party-major, Cartan elements i*H_j first,
/// then for each pair i<j the elements E_ij - E_ji and i(E_ij + E_ji).
struct LieBasis {
  Dims dims;
  bool diagonal = false;
  std::vector<LieElement> elements;

  std::size_t size() const { return elements.size(); }
};

LieBasis su_basis(const Dims& dims);

/// The algebra of the local group for a symmetry class: su_basis for
/// distinguishable parties, the diagonal su(N) otherwise.
LieBasis local_algebra(const Dims& dims, Symmetry symmetry);

/// sum_k (I (x) ... (x) A_k (x) ... (x) I) psi. Output is unnormalized.
CVector rep_action(const AlgebraElement& a, const Dims& dims, const CVector& psi);
CVector rep_action(const AlgebraElement& a, const StateTensor& state);
CVector rep_action(int party, const CMatrix& a, const StateTensor& state);

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b);

using IntTensor = std::vector<std::int64_t>;

/// Exact integer version of rep_action; party may be kDiagonalAction.
IntTensor rep_action_exact(int party, const IMatrix& a, const Dims& dims,
                           const IntTensor& v);

/// (E_ij, E_ji, H_ij = [E_ij, E_ji]) for a positive root of one party's
/// sl(N, C). Indices are 0-based with i < j.
struct Sl2Triple {
  int party = 0;
  int i = 0;
  int j = 0;
  IMatrix raiser;
  IMatrix lowerer;
  IMatrix coroot;

  std::string label() const;
};

std::vector<Sl2Triple> sl2_triples(const Dims& dims, Symmetry symmetry);

/// [H,E] = 2E, [H,F] = -2F, [E,F] = H, checked exactly.
bool brackets_hold(const Sl2Triple& t);

/// Cartan generator H_j = diag(0,..,1,-1,..,0) of one party (or the diagonal
/// action).
struct CartanGenerator {
  int party = 0;
  int j = 0;
  IMatrix matrix;
};

std::vector<CartanGenerator> cartan_basis(const Dims& dims, Symmetry symmetry);

/// A basis vector of the (anti)symmetrized tensor space, kept as an unscaled
/// integer tensor, with its weight lambda(H_j) over cartan_basis().
struct WeightVector {
  std::string label;
  std::vector<int> indices;
  Dims dims;
  Symmetry symmetry = Symmetry::distinguishable;
  IntTensor vector;
  std::vector<std::int64_t> weight;

  StateTensor state() const;
};

/// Weights of v if it is a simultaneous eigenvector of every Cartan
/// generator.
std::optional<std::vector<std::int64_t>> weight_of(const IntTensor& v,
                                                   const Dims& dims,
                                                   Symmetry symmetry);

inline constexpr std::size_t kMaxEnumeration = 1'000'000;

std::vector<WeightVector> weight_table(const Dims& dims, Symmetry symmetry);

struct KsVerdict {
  bool symplectic = true;
  std::optional<Sl2Triple> witness;
};

/// The orbit through a weight vector v is symplectic iff E_a v = 0 = E_{-a} v
/// for every positive root a with lambda(H_a) = 0.
KsVerdict kostant_sternberg_check(const WeightVector& w);

WeightVector highest_weight_vector(const Dims& dims, Symmetry symmetry);

}  // namespace orbitent

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

#include "orbitent/lie_structure.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "orbitent/error.hpp"
#include "orbitent/kernels.hpp"

namespace orbitent {

namespace {

const Complex kI{0.0, 1.0};

std::string party_prefix(int party) {
  return party == kDiagonalAction ? std::string("diag:")
                                  : "p" + std::to_string(party + 1) + ":";
}

std::string pair_name(int i, int j) {
  return std::to_string(i + 1) + std::to_string(j + 1);
}

AlgebraElement place(const CMatrix& m, int party, std::size_t parties) {
  AlgebraElement e;
  e.blocks.resize(parties);
  if (party == kDiagonalAction) {
    for (auto& b : e.blocks) b = m;
  } else {
    e.blocks[static_cast<std::size_t>(party)] = m;
  }
  return e;
}

// su(N) basis for one party (or the diagonal action), appended to out.
void append_su(int n, int party, std::size_t parties,
               std::vector<LieElement>& out) {
  const std::string prefix = party_prefix(party);
  for (int j = 0; j + 1 < n; ++j) {
    CMatrix m = CMatrix::Zero(n, n);
    m(j, j) = kI;
    m(j + 1, j + 1) = -kI;
    out.push_back({party, prefix + "iH" + std::to_string(j + 1), m,
                   place(m, party, parties)});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      CMatrix re = CMatrix::Zero(n, n);
      re(i, j) = 1.0;
      re(j, i) = -1.0;
      out.push_back({party, prefix + "E" + pair_name(i, j) + "-E" + pair_name(j, i),
                     re, place(re, party, parties)});
      CMatrix im = CMatrix::Zero(n, n);
      im(i, j) = kI;
      im(j, i) = kI;
      out.push_back({party,
                     prefix + "i(E" + pair_name(i, j) + "+E" + pair_name(j, i) + ")",
                     im, place(im, party, parties)});
    }
  }
}

void check_dims(const Dims& dims) {
  if (dims.empty())
    throw Error(ErrorKind::DimensionMismatch, "need at least one party");
  for (int d : dims)
    if (d < 2)
      throw Error(ErrorKind::DimensionMismatch,
                  "local dimension must be at least 2, got " + std::to_string(d));
}

void check_symmetric_dims(const Dims& dims, Symmetry symmetry) {
  check_dims(dims);
  if (symmetry != Symmetry::distinguishable &&
      std::adjacent_find(dims.begin(), dims.end(), std::not_equal_to<>()) !=
          dims.end())
    throw Error(ErrorKind::DimensionMismatch,
                "indistinguishable particles need equal local dimensions");
}

IMatrix unit(int n, int i, int j) {
  IMatrix m = IMatrix::Zero(n, n);
  m(i, j) = 1;
  return m;
}

bool is_zero(const IntTensor& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

// Ratio lambda with a v = lambda v, if v is an eigenvector.
std::optional<std::int64_t> eigenvalue(const IntTensor& v, const IntTensor& av) {
  const auto it = std::find_if(v.begin(), v.end(),
                               [](std::int64_t x) { return x != 0; });
  if (it == v.end()) return std::nullopt;
  const auto f = static_cast<std::size_t>(it - v.begin());
  if (av[f] % v[f] != 0) return std::nullopt;
  const std::int64_t lambda = av[f] / v[f];
  for (std::size_t k = 0; k < v.size(); ++k)
    if (av[k] != lambda * v[k]) return std::nullopt;
  return lambda;
}

std::string basis_label(const std::vector<int>& idx, Symmetry symmetry) {
  const char* sep = symmetry == Symmetry::distinguishable ? "⊗"
                    : symmetry == Symmetry::bosonic       ? "⊙"
                                                          : "∧";
  std::string s;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) s += sep;
    s += "e" + std::to_string(idx[k] + 1);
  }
  return s;
}

int permutation_sign(const std::vector<int>& values) {
  int inversions = 0;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (values[i] > values[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

// Unscaled (anti)symmetrized basis tensor for a sorted index tuple.
IntTensor basis_vector(const Dims& dims, const std::vector<int>& sorted,
                       Symmetry symmetry) {
  IntTensor v(total_dimension(dims), 0);
  if (symmetry == Symmetry::distinguishable) {
    v[flat_index(dims, sorted)] = 1;
    return v;
  }
  std::vector<int> perm = sorted;
  do {
    const std::int64_t sign =
        symmetry == Symmetry::fermionic ? permutation_sign(perm) : 1;
    v[flat_index(dims, perm)] += sign;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return v;
}

WeightVector make_weight_vector(const Dims& dims, Symmetry symmetry,
                                std::vector<int> indices) {
  WeightVector w;
  w.label = basis_label(indices, symmetry);
  w.vector = basis_vector(dims, indices, symmetry);
  w.indices = std::move(indices);
  w.dims = dims;
  w.symmetry = symmetry;
  auto weight = weight_of(w.vector, dims, symmetry);
  if (!weight)
    throw Error(ErrorKind::NotAWeightVector,
                "basis vector " + w.label + " is not a weight vector");
  w.weight = std::move(*weight);
  return w;
}

// Sorted index tuples of length m over [0, n): nondecreasing (bosons) or
// strictly increasing (fermions).
void enumerate_tuples(int n, int m, bool strict, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == m) {
    out.push_back(cur);
    return;
  }
  const int start = cur.empty() ? 0 : cur.back() + (strict ? 1 : 0);
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    enumerate_tuples(n, m, strict, cur, out);
    cur.pop_back();
  }
}

}  // namespace

LieBasis su_basis(const Dims& dims) {
  check_dims(dims);
  LieBasis basis;
  basis.dims = dims;
  for (std::size_t k = 0; k < dims.size(); ++k)
    append_su(dims[k], static_cast<int>(k), dims.size(), basis.elements);
  return basis;
}

LieBasis local_algebra(const Dims& dims, Symmetry symmetry) {
  if (symmetry == Symmetry::distinguishable) return su_basis(dims);
  check_symmetric_dims(dims, symmetry);
  LieBasis basis;
  basis.dims = dims;
  basis.diagonal = true;
  append_su(dims.front(), kDiagonalAction, dims.size(), basis.elements);
  return basis;
}

CVector rep_action(const AlgebraElement& a, const Dims& dims, const CVector& psi) {
  if (a.blocks.size() != dims.size())
    throw Error(ErrorKind::DimensionMismatch,
                "algebra element has wrong number of party blocks");
  if (static_cast<std::size_t>(psi.size()) != total_dimension(dims))
    throw Error(ErrorKind::DimensionMismatch, "vector does not match dims");
  CVector out = CVector::Zero(psi.size());
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const CMatrix& b = a.blocks[k];
    if (b.size() == 0) continue;
    if (b.rows() != dims[k] || b.cols() != dims[k])
      throw Error(ErrorKind::DimensionMismatch,
                  "algebra block does not match local dimension");
    kernels::parallel::mode_apply_add(kernels::mode_layout(dims, static_cast<int>(k)),
                                      b, psi.data(), out.data());
  }
  return out;
}

CVector rep_action(const AlgebraElement& a, const StateTensor& state) {
  return rep_action(a, state.dims(), state.coeffs());
}

CVector rep_action(int party, const CMatrix& a, const StateTensor& state) {
  if (party == kDiagonalAction)
    return rep_action(place(a, party, state.dims().size()), state);
  if (party < 0 || party >= state.parties())
    throw Error(ErrorKind::DimensionMismatch, "party index out of range");
  return rep_action(place(a, party, state.dims().size()), state);
}

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.blocks.size() != b.blocks.size())
    throw Error(ErrorKind::DimensionMismatch, "commutator of mismatched elements");
  AlgebraElement c;
  c.blocks.resize(a.blocks.size());
  for (std::size_t k = 0; k < a.blocks.size(); ++k) {
    const CMatrix& x = a.blocks[k];
    const CMatrix& y = b.blocks[k];
    if (x.size() == 0 || y.size() == 0) continue;
    c.blocks[k] = x * y - y * x;
  }
  return c;
}

IntTensor rep_action_exact(int party, const IMatrix& a, const Dims& dims,
                           const IntTensor& v) {
  if (v.size() != total_dimension(dims))
    throw Error(ErrorKind::DimensionMismatch, "vector does not match dims");
  IntTensor out(v.size(), 0);
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (party != kDiagonalAction && static_cast<int>(k) != party) continue;
    if (a.rows() != dims[k])
      throw Error(ErrorKind::DimensionMismatch,
                  "generator does not match local dimension");
    kernels::serial::mode_apply_add(kernels::mode_layout(dims, static_cast<int>(k)),
                                    a, v.data(), out.data());
  }
  return out;
}

std::string Sl2Triple::label() const {
  const std::string ij = pair_name(i, j);
  const std::string ji = pair_name(j, i);
  return party_prefix(party) + "(E" + ij + ",E" + ji + ",H" + ij + ")";
}

std::vector<Sl2Triple> sl2_triples(const Dims& dims, Symmetry symmetry) {
  check_symmetric_dims(dims, symmetry);
  std::vector<Sl2Triple> out;
  auto add_party = [&](int n, int party) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        Sl2Triple t;
        t.party = party;
        t.i = i;
        t.j = j;
        t.raiser = unit(n, i, j);
        t.lowerer = unit(n, j, i);
        t.coroot = t.raiser * t.lowerer - t.lowerer * t.raiser;
        out.push_back(std::move(t));
      }
    }
  };
  if (symmetry == Symmetry::distinguishable) {
    for (std::size_t k = 0; k < dims.size(); ++k)
      add_party(dims[k], static_cast<int>(k));
  } else {
    add_party(dims.front(), kDiagonalAction);
  }
  return out;
}

bool brackets_hold(const Sl2Triple& t) {
  const IMatrix& e = t.raiser;
  const IMatrix& f = t.lowerer;
  const IMatrix& h = t.coroot;
  return (h * e - e * h) == 2 * e && (h * f - f * h) == -2 * f &&
         (e * f - f * e) == h;
}

std::vector<CartanGenerator> cartan_basis(const Dims& dims, Symmetry symmetry) {
  check_symmetric_dims(dims, symmetry);
  std::vector<CartanGenerator> out;
  auto add_party = [&](int n, int party) {
    for (int j = 0; j + 1 < n; ++j) {
      IMatrix h = IMatrix::Zero(n, n);
      h(j, j) = 1;
      h(j + 1, j + 1) = -1;
      out.push_back({party, j, std::move(h)});
    }
  };
  if (symmetry == Symmetry::distinguishable) {
    for (std::size_t k = 0; k < dims.size(); ++k)
      add_party(dims[k], static_cast<int>(k));
  } else {
    add_party(dims.front(), kDiagonalAction);
  }
  return out;
}

std::optional<std::vector<std::int64_t>> weight_of(const IntTensor& v,
                                                   const Dims& dims,
                                                   Symmetry symmetry) {
  std::vector<std::int64_t> weight;
  for (const auto& h : cartan_basis(dims, symmetry)) {
    const auto lambda =
        eigenvalue(v, rep_action_exact(h.party, h.matrix, dims, v));
    if (!lambda) return std::nullopt;
    weight.push_back(*lambda);
  }
  return weight;
}

StateTensor WeightVector::state() const {
  RawTensor raw{dims, CVector(static_cast<Eigen::Index>(vector.size()))};
  for (std::size_t k = 0; k < vector.size(); ++k)
    raw.data[static_cast<Eigen::Index>(k)] = static_cast<double>(vector[k]);
  return build_state(raw, symmetry);
}

std::vector<WeightVector> weight_table(const Dims& dims, Symmetry symmetry) {
  check_symmetric_dims(dims, symmetry);
  if (total_dimension(dims) > kMaxEnumeration)
    throw Error(ErrorKind::EnumerationTooLarge,
                "tensor space too large to enumerate");
  std::vector<std::vector<int>> tuples;
  if (symmetry == Symmetry::distinguishable) {
    for (std::size_t f = 0; f < total_dimension(dims); ++f)
      tuples.push_back(multi_index(dims, f));
  } else {
    std::vector<int> cur;
    enumerate_tuples(dims.front(), static_cast<int>(dims.size()),
                     symmetry == Symmetry::fermionic, cur, tuples);
  }
  std::vector<WeightVector> table;
  table.reserve(tuples.size());
  for (auto& t : tuples)
    table.push_back(make_weight_vector(dims, symmetry, std::move(t)));
  return table;
}

KsVerdict kostant_sternberg_check(const WeightVector& w) {
  const auto actual = weight_of(w.vector, w.dims, w.symmetry);
  if (!actual || *actual != w.weight)
    throw Error(ErrorKind::NotAWeightVector,
                w.label + " is not an eigenvector with its stored weight");
  KsVerdict verdict;
  for (const auto& t : sl2_triples(w.dims, w.symmetry)) {
    const auto lambda = eigenvalue(
        w.vector, rep_action_exact(t.party, t.coroot, w.dims, w.vector));
    if (!lambda)
      throw Error(ErrorKind::NotAWeightVector,
                  w.label + " is not an eigenvector of " + t.label());
    if (*lambda != 0) continue;
    const bool raised =
        !is_zero(rep_action_exact(t.party, t.raiser, w.dims, w.vector));
    const bool lowered =
        !is_zero(rep_action_exact(t.party, t.lowerer, w.dims, w.vector));
    if (raised || lowered) {
      verdict.symplectic = false;
      verdict.witness = t;
      return verdict;
    }
  }
  return verdict;
}

WeightVector highest_weight_vector(const Dims& dims, Symmetry symmetry) {
  check_symmetric_dims(dims, symmetry);
  if (total_dimension(dims) > kMaxEnumeration)
    throw Error(ErrorKind::EnumerationTooLarge,
                "tensor space too large to enumerate");
  std::vector<int> indices(dims.size(), 0);
  if (symmetry == Symmetry::fermionic) {
    if (static_cast<int>(dims.size()) > dims.front())
      throw Error(ErrorKind::DimensionMismatch,
                  "more fermions than single-particle states");
    std::iota(indices.begin(), indices.end(), 0);
  }
  WeightVector w = make_weight_vector(dims, symmetry, std::move(indices));
  for (const auto& t : sl2_triples(dims, symmetry))
    if (!is_zero(rep_action_exact(t.party, t.raiser, dims, w.vector)))
      throw Error(ErrorKind::NotAWeightVector,
                  w.label + " is not annihilated by " + t.label());
  return w;
}

}  // namespace orbitent

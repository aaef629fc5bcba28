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

#include "orbitent/moment_map.hpp"

#include <algorithm>
#include <cmath>

#include "orbitent/error.hpp"
#include "orbitent/kernels.hpp"

namespace orbitent {

namespace {

using RowMajorCMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

std::vector<double> descending_eigenvalues(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
  const RVector& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::reverse(out.begin(), out.end());
  for (double& x : out)
    if (x < 0.0 && x > -1e-12) x = 0.0;
  return out;
}

// Orthonormal basis of the range of a projector: repeatedly take the column
// with the largest residual (lowest index among near-ties) and deflate.
CMatrix pivoted_range_basis(CMatrix residual, int rank) {
  CMatrix q(residual.rows(), rank);
  for (int s = 0; s < rank; ++s) {
    const RVector norms = residual.colwise().norm();
    const double best = norms.maxCoeff();
    Eigen::Index pick = 0;
    for (Eigen::Index c = 0; c < norms.size(); ++c) {
      if (norms[c] >= best * (1.0 - 1e-8)) {
        pick = c;
        break;
      }
    }
    if (best <= 0.0)
      throw Error(ErrorKind::RankUnstable, "projector has lower rank than expected");
    const CVector v = residual.col(pick) / norms[pick];
    q.col(s) = v;
    residual -= v * (v.adjoint() * residual);
  }
  return q;
}

}  // namespace

std::vector<std::vector<double>> ReducedMatrices::spectra() const {
  std::vector<std::vector<double>> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) out.push_back(descending_eigenvalues(b));
  return out;
}

DeterministicEigen deterministic_eigen(const CMatrix& hermitian, double cluster_tol) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorKind::InvalidArgument, "eigendecomposition failed");
  const auto n = hermitian.rows();
  DeterministicEigen out;
  out.values.resize(static_cast<std::size_t>(n));
  CMatrix raw(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double x = solver.eigenvalues()[n - 1 - i];
    if (x < 0.0 && x > -1e-12) x = 0.0;
    out.values[static_cast<std::size_t>(i)] = x;
    raw.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  out.clustering = cluster_spectrum(out.values, cluster_tol);

  std::vector<int> sizes;
  for (const auto& b : out.clustering.blocks) sizes.push_back(b.multiplicity);
  if (out.clustering.kernel > 0) sizes.push_back(out.clustering.kernel);

  out.vectors.resize(n, n);
  Eigen::Index start = 0;
  for (int m : sizes) {
    const CMatrix w = raw.middleCols(start, m);
    out.vectors.middleCols(start, m) = pivoted_range_basis(w * w.adjoint(), m);
    start += m;
  }
  return out;
}

ReducedMatrices reduced_matrices(const StateTensor& state) {
  ReducedMatrices r;
  const Dims& dims = state.dims();
  r.blocks.reserve(dims.size());
  for (std::size_t k = 0; k < dims.size(); ++k)
    r.blocks.push_back(kernels::parallel::reduced_matrix(
        kernels::mode_layout(dims, static_cast<int>(k)), state.coeffs().data()));
  return r;
}

MomentImage moment_image(const StateTensor& state) {
  MomentImage mu;
  for (auto& c : reduced_matrices(state).blocks) {
    const auto n = c.rows();
    mu.blocks.push_back(c - CMatrix::Identity(n, n) / static_cast<double>(n));
  }
  return mu;
}

SchmidtData schmidt(const StateTensor& state, double cluster_tol) {
  if (state.parties() != 2)
    throw Error(ErrorKind::NotBipartite, "Schmidt decomposition needs two parties");
  const int n1 = state.dims()[0];
  const int n2 = state.dims()[1];
  const int n = std::min(n1, n2);
  const CMatrix c = Eigen::Map<const RowMajorCMatrix>(state.coeffs().data(), n1, n2);

  const CMatrix c1 = reduced_matrices(state).blocks[0];
  const DeterministicEigen eig = deterministic_eigen(c1, cluster_tol);
  const int rank = eig.clustering.total() - eig.clustering.kernel;

  // U~ C has orthogonal rows; V~ maps row j to nu_j e_j.
  const CMatrix left = eig.vectors.transpose();
  const CMatrix rotated = left * c;
  CMatrix right = CMatrix::Zero(n2, n2);
  std::vector<double> sv(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < rank; ++j) {
    const double nu = rotated.row(j).norm();
    sv[static_cast<std::size_t>(j)] = nu;
    right.col(j) = rotated.row(j).adjoint() / nu;
  }
  if (rank < n2) {
    const CMatrix taken = right.leftCols(rank);
    const CMatrix complement =
        CMatrix::Identity(n2, n2) - taken * taken.adjoint();
    right.rightCols(n2 - rank) = pivoted_range_basis(complement, n2 - rank);
  }

  std::vector<double> squares(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    squares[static_cast<std::size_t>(j)] = sv[static_cast<std::size_t>(j)] *
                                           sv[static_cast<std::size_t>(j)];
  // Squares of the retained values sum to one only up to the discarded
  // kernel rows; renormalize for the clustering contract.
  double total = 0.0;
  for (double x : squares) total += x;
  for (double& x : squares) x /= total;

  RawTensor diag{state.dims(), CVector::Zero(static_cast<Eigen::Index>(n1) * n2)};
  for (int j = 0; j < rank; ++j)
    diag.data[static_cast<Eigen::Index>(j) * n2 + j] = sv[static_cast<std::size_t>(j)];

  const Complex c_left = std::pow(left.determinant(), -1.0 / n1);
  const Complex c_right = std::pow(right.determinant(), -1.0 / n2);

  return SchmidtData{sv,
                     cluster_spectrum(squares, cluster_tol),
                     left * c_left,
                     right * c_right,
                     c_left * c_right,
                     build_state(diag, Symmetry::distinguishable)};
}

CanonicalForm canonical_form(const StateTensor& state, double cluster_tol) {
  if (state.symmetry() != Symmetry::distinguishable)
    throw Error(ErrorKind::SymmetryViolation,
                "canonical form acts with independent local blocks; "
                "state must be distinguishable");
  if (state.parties() == 2) {
    const SchmidtData s = schmidt(state, cluster_tol);
    auto g = LocalUnitaryTuple::make({s.left, s.right.transpose()});
    StateTensor out = apply_local(state, g);
    return {std::move(out), std::move(g)};
  }
  std::vector<CMatrix> blocks;
  for (const auto& c : reduced_matrices(state).blocks)
    blocks.push_back(
        to_special_unitary(deterministic_eigen(c, cluster_tol).vectors.transpose()));
  auto g = LocalUnitaryTuple::make(std::move(blocks));
  StateTensor out = apply_local(state, g);
  return {std::move(out), std::move(g)};
}

}  // namespace orbitent

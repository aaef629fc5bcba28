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

#include "orbitent/symplectic_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "orbitent/error.hpp"
#include "orbitent/kernels.hpp"
#include "orbitent/moment_map.hpp"

namespace orbitent {

namespace {

void require_unit(const CVector& v) {
  if (std::abs(v.norm() - 1.0) > tol::kNormalization)
    throw Error(ErrorKind::NotNormalized, "base vector must have unit norm");
}

// Number of values above rank_tol * reference, refusing values that sit
// within a factor 10 of the cut.
int thresholded_rank(const std::vector<double>& values, double reference,
                     double rank_tol, const char* what) {
  const double cut = rank_tol * reference;
  int rank = 0;
  for (double x : values) {
    const double a = std::abs(x);
    if (a >= cut / 10.0 && a <= cut * 10.0) {
      std::ostringstream msg;
      msg << what << " singular value " << a << " is within a factor 10 of the "
          << "rank cut " << cut;
      throw Error(ErrorKind::RankUnstable, msg.str());
    }
    if (a > cut) ++rank;
  }
  return rank;
}

std::vector<AlgebraElement> generators(const StateTensor& state) {
  const LieBasis basis = local_algebra(state.dims(), state.symmetry());
  std::vector<AlgebraElement> out;
  out.reserve(basis.size());
  for (const auto& e : basis.elements) out.push_back(e.element);
  return out;
}

}  // namespace

double fubini_study_omega(const Dims& dims, const CVector& v,
                          const AlgebraElement& a, const AlgebraElement& b) {
  require_unit(v);
  const CVector av = rep_action(a, dims, v);
  const CVector bv = rep_action(b, dims, v);
  return -av.dot(bv).imag();
}

double fubini_study_omega_commutator(const Dims& dims, const CVector& v,
                                     const AlgebraElement& a,
                                     const AlgebraElement& b) {
  require_unit(v);
  const CVector cv = rep_action(commutator(a, b), dims, v);
  const Complex value = Complex(0.0, 0.5) * cv.dot(v);
  return value.real();
}

TangentFrame tangent_frame(const StateTensor& state, double rank_tol) {
  if (state.size() > kMaxOracleHilbertDim)
    throw Error(ErrorKind::EnumerationTooLarge,
                "Hilbert space dimension exceeds the oracle limit of " +
                    std::to_string(kMaxOracleHilbertDim));
  const auto gens = generators(state);
  if (gens.size() > kMaxOracleAlgebraDim)
    throw Error(ErrorKind::EnumerationTooLarge,
                "local algebra dimension exceeds the oracle limit of " +
                    std::to_string(kMaxOracleAlgebraDim));

  TangentFrame f;
  f.base = state.coeffs();
  f.tangents = kernels::parallel::generator_images(state.dims(), f.base, gens);
  f.gram = kernels::parallel::hermitian_products(f.tangents).real();

  Eigen::SelfAdjointEigenSolver<RMatrix> solver(f.gram, Eigen::EigenvaluesOnly);
  const RVector& ev = solver.eigenvalues();
  f.gram_spectrum.assign(ev.data(), ev.data() + ev.size());
  std::reverse(f.gram_spectrum.begin(), f.gram_spectrum.end());
  const double reference =
      std::max(f.gram_spectrum.empty() ? 0.0 : f.gram_spectrum.front(), 1.0);
  f.rank = thresholded_rank(f.gram_spectrum, reference, rank_tol, "Gram");
  return f;
}

OracleResult degeneracy_rank(const StateTensor& state, double rank_tol) {
  OracleResult out;
  out.frame = tangent_frame(state, rank_tol);
  const TangentFrame& f = out.frame;

  const CMatrix h = kernels::parallel::hermitian_products(f.tangents);
  const auto n = h.rows();
  RMatrix omega = RMatrix::Zero(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = a + 1; b < n; ++b) {
      omega(a, b) = -h(a, b).imag();
      omega(b, a) = -omega(a, b);
    }

  // Orthonormal frame of the tangent span from the Gram eigenvectors above
  // the cut; in that frame omega has operator norm at most one.
  const int r = f.rank;
  RMatrix restricted(r, r);
  if (r > 0) {
    Eigen::SelfAdjointEigenSolver<RMatrix> solver(f.gram);
    RMatrix frame(n, r);
    for (int i = 0; i < r; ++i) {
      const Eigen::Index col = n - 1 - i;
      frame.col(i) = solver.eigenvectors().col(col) /
                     std::sqrt(solver.eigenvalues()[col]);
    }
    restricted = frame.transpose() * omega * frame;
    restricted = 0.5 * (restricted - restricted.transpose()).eval();
  }

  std::vector<double> sv;
  if (r > 0) {
    Eigen::JacobiSVD<RMatrix> svd(restricted);
    sv.assign(svd.singularValues().data(),
              svd.singularValues().data() + svd.singularValues().size());
  }
  const int s = thresholded_rank(sv, 1.0, rank_tol, "symplectic form");
  if (s % 2 != 0)
    throw Error(ErrorKind::RankUnstable,
                "restricted symplectic form has odd numerical rank " +
                    std::to_string(s));

  out.form.omega = std::move(omega);
  out.form.restricted = std::move(restricted);
  out.form.singular_values = std::move(sv);
  out.form.rank = s;
  out.orbit_dim = r;
  out.symplectic_rank = s;
  out.degeneracy = r - s;
  return out;
}

bool has_closed_form(const Dims& dims, Symmetry symmetry) {
  if (symmetry != Symmetry::distinguishable) return false;
  if (dims.size() == 2) return dims[0] == dims[1];
  return dims.size() >= 3;
}

ConsistencyRecord verify_against_formula(const StateTensor& state,
                                         double cluster_tol, double rank_tol) {
  if (!has_closed_form(state.dims(), state.symmetry()))
    throw Error(ErrorKind::InvalidArgument,
                "no closed form for this state class; use the oracle directly");
  std::vector<SpectrumClustering> clusterings;
  for (const auto& spectrum : reduced_matrices(state).spectra())
    clusterings.push_back(cluster_spectrum(spectrum, cluster_tol));
  return compare_with_formula(state.dims(), clusterings,
                              degeneracy_rank(state, rank_tol).summary());
}

ConsistencyRecord compare_with_formula(const Dims& dims,
                                       std::span<const SpectrumClustering> clusterings,
                                       const OracleSummary& oracle) {
  if (!has_closed_form(dims, Symmetry::distinguishable))
    throw Error(ErrorKind::InvalidArgument, "no closed form for these dims");
  ConsistencyRecord rec;
  rec.oracle = oracle;
  rec.formula_coadjoint_dim = coadjoint_dimension(clusterings, dims);
  std::ostringstream detail;
  if (dims.size() == 2) {
    rec.kind = "exact";
    rec.formula_orbit_dim = orbit_dimension_bipartite(clusterings[0], dims);
    const int d = degeneracy_bipartite(clusterings[0], dims);
    rec.formula_degeneracy = d;
    rec.passed = oracle.orbit_dim == *rec.formula_orbit_dim &&
                 oracle.symplectic_rank == rec.formula_coadjoint_dim &&
                 oracle.degeneracy == d;
    detail << "formula (orbit, coadjoint, D) = (" << *rec.formula_orbit_dim << ", "
           << rec.formula_coadjoint_dim << ", " << d << "), oracle (r, s, D) = ("
           << oracle.orbit_dim << ", " << oracle.symplectic_rank << ", "
           << oracle.degeneracy << ")";
  } else {
    rec.kind = "bounds";
    const DegeneracyInterval bounds = degeneracy_bounds(clusterings, dims);
    rec.formula_degeneracy = bounds;
    rec.passed = oracle.symplectic_rank == rec.formula_coadjoint_dim &&
                 bounds.contains(oracle.degeneracy);
    detail << "formula coadjoint " << rec.formula_coadjoint_dim << ", D in ["
           << bounds.low << ", " << bounds.high << "]; oracle (r, s, D) = ("
           << oracle.orbit_dim << ", " << oracle.symplectic_rank << ", "
           << oracle.degeneracy << ")";
  }
  rec.detail = detail.str();
  return rec;
}

}  // namespace orbitent

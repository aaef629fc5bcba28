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

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace orbitent {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using IMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

using Dims = std::vector<int>;

/// Particle statistics of a composite system.
enum class Symmetry { distinguishable, bosonic, fermionic };

std::string_view to_string(Symmetry s);
Symmetry parse_symmetry(std::string_view text);

/// Which bosonic states count as nonentangled.
enum class BosonConvention {
  symmetric_simple_tensor,  // "A": symmetrization of v1 (x) ... (x) vM
  product_of_same_vector,   // "B": v (x) ... (x) v
};

std::string_view to_string(BosonConvention c);
BosonConvention parse_boson_convention(std::string_view text);

namespace tol {
// Relative tolerances shared across modules; values are part of the
// public contract of the reports.
inline constexpr double kNormalization = 1e-6;
inline constexpr double kSymmetry = 1e-10;
inline constexpr double kProjective = 1e-10;
inline constexpr double kSpecialUnitary = 1e-8;
inline constexpr double kCluster = 1e-7;
inline constexpr double kRank = 1e-8;
}  // namespace tol

/// Element of the local Lie algebra acting on an M-party tensor: one block per
/// party, acting as sum_k I (x) ... (x) A_k (x) ... (x) I. An empty block is
/// the zero matrix.
struct AlgebraElement {
  std::vector<CMatrix> blocks;
};

/// Product of the local dimensions.
std::size_t total_dimension(const Dims& dims);

}  // namespace orbitent

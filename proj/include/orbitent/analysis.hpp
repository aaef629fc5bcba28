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
#include <string_view>

#include "orbitent/orbit_measure.hpp"
#include "orbitent/tensor_states.hpp"
#include "orbitent/types.hpp"

namespace orbitent {

enum class OutputFormat { text, json };
enum class OracleMode { off, verify, only };

std::string_view to_string(OracleMode m);
OracleMode parse_oracle_mode(std::string_view text);
OutputFormat parse_output_format(std::string_view text);

struct AnalysisConfig {
  double cluster_tol = tol::kCluster;
  double rank_tol = tol::kRank;
  OutputFormat format = OutputFormat::json;
  OracleMode oracle = OracleMode::off;
  BosonConvention boson_convention = BosonConvention::product_of_same_vector;
  std::uint64_t seed = 0;

  /// Throws InvalidArgument unless both tolerances lie in (0, 1e-2).
  void validate() const;

  /// Defaults, with both tolerances replaced by ORBITENT_DEFAULT_TOL when set.
  static AnalysisConfig from_environment();
};

/// Number of nonzero eigenvalues of the one-particle reduced matrix.
int one_particle_rank(const SpectrumClustering& c);

/// Separability of a bosonic state under both conventions.
BosonSeparability boson_separability(const StateTensor& state,
                                     const SpectrumClustering& one_particle);

/// Reduced matrices, clustering, closed forms where they exist and the oracle
/// as requested. Distinguishable states with two parties of unequal
/// dimension and all indistinguishable states are always sent to the oracle.
DegeneracyReport analyze(const StateTensor& state, const AnalysisConfig& config);

/// Human-readable report naming the formula behind every number.
std::string render_text(const DegeneracyReport& report);

}  // namespace orbitent

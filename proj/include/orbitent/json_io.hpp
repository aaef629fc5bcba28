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

#include <filesystem>
#include <string>

#include <json.hpp>

#include "orbitent/moment_map.hpp"
#include "orbitent/orbit_measure.hpp"
#include "orbitent/tensor_states.hpp"

namespace orbitent {

using nlohmann::json;

// State document:
//   { "symmetry": "distinguishable" | "bosonic" | "fermionic",
//     "dims": [N1, ..., NM],
//     "coeffs": nested arrays of depth M with complex scalars as [re, im] }
// A flat row-major list under "coeffs_flat" may replace "coeffs".

/// Parses the coefficient payload without normalizing it.
RawTensor raw_tensor_from_json(const json& doc);
StateTensor state_from_json(const json& doc);
StateTensor load_state(const std::filesystem::path& path);

json state_to_json(const StateTensor& state);

json complex_to_json(Complex z);
Complex complex_from_json(const json& j);
json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j);

json to_json(const SpectrumClustering& c);
SpectrumClustering clustering_from_json(const json& j);

json to_json(const OracleSummary& o);
OracleSummary oracle_from_json(const json& j);

json to_json(const ConsistencyRecord& r);
ConsistencyRecord consistency_from_json(const json& j);

json to_json(const DegeneracyReport& r);
DegeneracyReport report_from_json(const json& j);

json to_json(const SchmidtData& s);

/// State document of the canonical state plus "local_unitaries".
json to_json(const CanonicalForm& c);

}  // namespace orbitent

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

#include "orbitent/error.hpp"

namespace orbitent {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroState: return "ZeroState";
    case ErrorKind::SymmetryViolation: return "SymmetryViolation";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSpecialUnitary: return "NotSpecialUnitary";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::UnequalDims: return "UnequalDims";
    case ErrorKind::NotAWeightVector: return "NotAWeightVector";
    case ErrorKind::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::AmbiguousClustering: return "AmbiguousClustering";
    case ErrorKind::RankUnstable: return "RankUnstable";
    case ErrorKind::Inconsistency: return "Inconsistency";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace orbitent

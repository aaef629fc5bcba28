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

#include "orbitent/types.hpp"

#include "orbitent/error.hpp"

namespace orbitent {

std::string_view to_string(Symmetry s) {
  switch (s) {
    case Symmetry::distinguishable: return "distinguishable";
    case Symmetry::bosonic: return "bosonic";
    case Symmetry::fermionic: return "fermionic";
  }
  return "distinguishable";
}

Symmetry parse_symmetry(std::string_view text) {
  if (text == "distinguishable") return Symmetry::distinguishable;
  if (text == "bosonic") return Symmetry::bosonic;
  if (text == "fermionic") return Symmetry::fermionic;
  throw Error(ErrorKind::ParseError,
              "unknown symmetry '" + std::string(text) + "'");
}

std::string_view to_string(BosonConvention c) {
  switch (c) {
    case BosonConvention::symmetric_simple_tensor:
      return "symmetric-simple-tensor";
    case BosonConvention::product_of_same_vector:
      return "product-of-same-vector";
  }
  return "product-of-same-vector";
}

BosonConvention parse_boson_convention(std::string_view text) {
  if (text == "A" || text == "symmetric-simple-tensor")
    return BosonConvention::symmetric_simple_tensor;
  if (text == "B" || text == "product-of-same-vector")
    return BosonConvention::product_of_same_vector;
  throw Error(ErrorKind::ParseError,
              "unknown boson convention '" + std::string(text) + "'");
}

std::size_t total_dimension(const Dims& dims) {
  std::size_t n = 1;
  for (int d : dims) n *= static_cast<std::size_t>(d);
  return n;
}

}  // namespace orbitent

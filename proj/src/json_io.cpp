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

#include "orbitent/json_io.hpp"

#include <fstream>
#include <sstream>

#include "orbitent/error.hpp"

namespace orbitent {

namespace {

[[noreturn]] void parse_error(const std::string& msg) {
  throw Error(ErrorKind::ParseError, msg);
}

void read_nested(const json& node, const Dims& dims, std::size_t depth,
                 std::vector<Complex>& out) {
  if (depth == dims.size()) {
    out.push_back(complex_from_json(node));
    return;
  }
  if (!node.is_array() || node.size() != static_cast<std::size_t>(dims[depth]))
    throw Error(ErrorKind::DimensionMismatch,
                "\"coeffs\" level " + std::to_string(depth) + " must have " +
                    std::to_string(dims[depth]) + " entries");
  for (const auto& child : node) read_nested(child, dims, depth + 1, out);
}

json write_nested(const CVector& c, const Dims& dims, std::size_t depth,
                  std::size_t& cursor) {
  if (depth == dims.size())
    return complex_to_json(c[static_cast<Eigen::Index>(cursor++)]);
  json level = json::array();
  for (int i = 0; i < dims[depth]; ++i)
    level.push_back(write_nested(c, dims, depth + 1, cursor));
  return level;
}

json degeneracy_to_json(const Degeneracy& d) {
  if (const int* exact = std::get_if<int>(&d)) return *exact;
  const auto& iv = std::get<DegeneracyInterval>(d);
  return json{{"low", iv.low}, {"high", iv.high}};
}

Degeneracy degeneracy_from_json(const json& j) {
  if (j.is_number_integer()) return j.get<int>();
  if (j.is_object())
    return DegeneracyInterval{j.at("low").get<int>(), j.at("high").get<int>()};
  parse_error("\"degeneracy\" must be an integer or {low, high}");
}

template <class T>
json optional_to_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from_json(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  parse_error("complex scalar must be [re, im] or a number, got " + j.dump());
}

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    parse_error("matrix must be a nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      parse_error("matrix rows must have equal length");
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

RawTensor raw_tensor_from_json(const json& doc) {
  if (!doc.is_object()) parse_error("state document must be a JSON object");
  if (!doc.contains("dims") || !doc.at("dims").is_array())
    parse_error("state document needs a \"dims\" array");
  RawTensor raw;
  for (const auto& d : doc.at("dims")) {
    if (!d.is_number_integer()) parse_error("\"dims\" entries must be integers");
    raw.dims.push_back(d.get<int>());
  }
  if (raw.dims.empty()) throw Error(ErrorKind::DimensionMismatch, "\"dims\" is empty");
  for (int d : raw.dims)
    if (d < 2)
      throw Error(ErrorKind::DimensionMismatch, "local dimensions must be at least 2");

  std::vector<Complex> values;
  if (doc.contains("coeffs")) {
    read_nested(doc.at("coeffs"), raw.dims, 0, values);
  } else if (doc.contains("coeffs_flat")) {
    const json& flat = doc.at("coeffs_flat");
    if (!flat.is_array()) parse_error("\"coeffs_flat\" must be an array");
    for (const auto& z : flat) values.push_back(complex_from_json(z));
    if (values.size() != total_dimension(raw.dims))
      throw Error(ErrorKind::DimensionMismatch,
                  "\"coeffs_flat\" has " + std::to_string(values.size()) +
                      " entries, dims need " +
                      std::to_string(total_dimension(raw.dims)));
  } else {
    parse_error("state document needs \"coeffs\" or \"coeffs_flat\"");
  }
  raw.data = Eigen::Map<const CVector>(values.data(), static_cast<Eigen::Index>(values.size()));
  return raw;
}

StateTensor state_from_json(const json& doc) {
  const RawTensor raw = raw_tensor_from_json(doc);
  Symmetry symmetry = Symmetry::distinguishable;
  if (doc.contains("symmetry")) {
    if (!doc.at("symmetry").is_string()) parse_error("\"symmetry\" must be a string");
    symmetry = parse_symmetry(doc.at("symmetry").get<std::string>());
  }
  return build_state(raw, symmetry);
}

StateTensor load_state(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open state file " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    parse_error("invalid JSON in " + path.string() + ": " + e.what());
  }
  return state_from_json(doc);
}

json state_to_json(const StateTensor& state) {
  std::size_t cursor = 0;
  return json{{"symmetry", std::string(to_string(state.symmetry()))},
              {"dims", state.dims()},
              {"coeffs", write_nested(state.coeffs(), state.dims(), 0, cursor)}};
}

json to_json(const SpectrumClustering& c) {
  json blocks = json::array();
  for (const auto& b : c.blocks)
    blocks.push_back(json{{"value", b.value}, {"multiplicity", b.multiplicity}});
  return json{{"kernel", c.kernel}, {"blocks", blocks}, {"tol", c.tol}};
}

SpectrumClustering clustering_from_json(const json& j) {
  SpectrumClustering c;
  c.kernel = j.at("kernel").get<int>();
  c.tol = j.at("tol").get<double>();
  for (const auto& b : j.at("blocks"))
    c.blocks.push_back({b.at("value").get<double>(), b.at("multiplicity").get<int>()});
  return c;
}

json to_json(const OracleSummary& o) {
  return json{{"orbit_dim", o.orbit_dim},
              {"symplectic_rank", o.symplectic_rank},
              {"degeneracy", o.degeneracy}};
}

OracleSummary oracle_from_json(const json& j) {
  return {j.at("orbit_dim").get<int>(), j.at("symplectic_rank").get<int>(),
          j.at("degeneracy").get<int>()};
}

json to_json(const ConsistencyRecord& r) {
  return json{{"passed", r.passed},
              {"kind", r.kind},
              {"formula",
               {{"orbit_dim", optional_to_json(r.formula_orbit_dim)},
                {"coadjoint_dim", r.formula_coadjoint_dim},
                {"degeneracy", degeneracy_to_json(r.formula_degeneracy)}}},
              {"oracle", to_json(r.oracle)},
              {"detail", r.detail}};
}

ConsistencyRecord consistency_from_json(const json& j) {
  ConsistencyRecord r;
  r.passed = j.at("passed").get<bool>();
  r.kind = j.at("kind").get<std::string>();
  const json& f = j.at("formula");
  r.formula_orbit_dim = optional_from_json<int>(f, "orbit_dim");
  r.formula_coadjoint_dim = f.at("coadjoint_dim").get<int>();
  r.formula_degeneracy = degeneracy_from_json(f.at("degeneracy"));
  r.oracle = oracle_from_json(j.at("oracle"));
  r.detail = j.at("detail").get<std::string>();
  return r;
}

json to_json(const DegeneracyReport& r) {
  json clusterings = json::array();
  for (const auto& c : r.clusterings) clusterings.push_back(to_json(c));
  json out{{"dims", r.dims},
           {"symmetry", std::string(to_string(r.symmetry))},
           {"method", r.method},
           {"orbit_dim", optional_to_json(r.orbit_dim)},
           {"coadjoint_dim", optional_to_json(r.coadjoint_dim)},
           {"degeneracy", degeneracy_to_json(r.degeneracy)},
           {"separable", optional_to_json(r.separable)},
           {"clusterings", clusterings},
           {"oracle", nullptr}};
  if (r.oracle) {
    out["oracle"] = to_json(*r.oracle);
    if (r.consistency) out["oracle"]["consistency"] = to_json(*r.consistency);
  }
  if (r.boson_convention)
    out["boson_convention"] = std::string(to_string(*r.boson_convention));
  if (r.boson_separability)
    out["boson_separability"] = {
        {"symmetric-simple-tensor",
         optional_to_json(r.boson_separability->symmetric_simple_tensor)},
        {"product-of-same-vector", r.boson_separability->product_of_same_vector}};
  return out;
}

DegeneracyReport report_from_json(const json& j) {
  DegeneracyReport r;
  try {
    r.dims = j.at("dims").get<Dims>();
    r.symmetry = parse_symmetry(j.at("symmetry").get<std::string>());
    r.method = j.at("method").get<std::string>();
    r.orbit_dim = optional_from_json<int>(j, "orbit_dim");
    r.coadjoint_dim = optional_from_json<int>(j, "coadjoint_dim");
    r.degeneracy = degeneracy_from_json(j.at("degeneracy"));
    r.separable = optional_from_json<bool>(j, "separable");
    for (const auto& c : j.at("clusterings")) r.clusterings.push_back(clustering_from_json(c));
    if (j.contains("oracle") && !j.at("oracle").is_null()) {
      r.oracle = oracle_from_json(j.at("oracle"));
      if (j.at("oracle").contains("consistency"))
        r.consistency = consistency_from_json(j.at("oracle").at("consistency"));
    }
    if (j.contains("boson_convention"))
      r.boson_convention =
          parse_boson_convention(j.at("boson_convention").get<std::string>());
    if (j.contains("boson_separability")) {
      const json& b = j.at("boson_separability");
      BosonSeparability s;
      s.symmetric_simple_tensor = optional_from_json<bool>(b, "symmetric-simple-tensor");
      s.product_of_same_vector = b.at("product-of-same-vector").get<bool>();
      r.boson_separability = s;
    }
  } catch (const json::exception& e) {
    parse_error(std::string("malformed report: ") + e.what());
  }
  return r;
}

json to_json(const SchmidtData& s) {
  return json{{"singular_values", s.singular_values},
              {"kernel_dim", s.clustering.kernel},
              {"multiplicities",
               [&] {
                 json m = json::array();
                 for (const auto& b : s.clustering.blocks) m.push_back(b.multiplicity);
                 return m;
               }()},
              {"clustering", to_json(s.clustering)},
              {"left_unitary", matrix_to_json(s.left)},
              {"right_unitary", matrix_to_json(s.right)},
              {"phase", complex_to_json(s.phase)},
              {"canonical_state", state_to_json(s.canonical)}};
}

json to_json(const CanonicalForm& c) {
  json doc = state_to_json(c.state);
  json unitaries = json::array();
  for (const auto& u : c.unitaries.blocks()) unitaries.push_back(matrix_to_json(u));
  doc["local_unitaries"] = std::move(unitaries);
  return doc;
}

}  // namespace orbitent

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

#include "orbitent/analysis.hpp"

#include <cstdlib>
#include <sstream>

#include "orbitent/error.hpp"
#include "orbitent/moment_map.hpp"
#include "orbitent/symplectic_oracle.hpp"

namespace orbitent {

std::string_view to_string(OracleMode m) {
  switch (m) {
    case OracleMode::off: return "off";
    case OracleMode::verify: return "verify";
    case OracleMode::only: return "only";
  }
  return "off";
}

OracleMode parse_oracle_mode(std::string_view text) {
  if (text == "off") return OracleMode::off;
  if (text == "verify") return OracleMode::verify;
  if (text == "only") return OracleMode::only;
  throw Error(ErrorKind::InvalidArgument,
              "oracle mode must be off, verify or only, got " + std::string(text));
}

OutputFormat parse_output_format(std::string_view text) {
  if (text == "text") return OutputFormat::text;
  if (text == "json") return OutputFormat::json;
  throw Error(ErrorKind::InvalidArgument,
              "format must be text or json, got " + std::string(text));
}

void AnalysisConfig::validate() const {
  auto check = [](double t, const char* name) {
    if (!(t > 0.0 && t < 1e-2))
      throw Error(ErrorKind::InvalidArgument,
                  std::string(name) + " must lie in (0, 1e-2)");
  };
  check(cluster_tol, "cluster tolerance");
  check(rank_tol, "rank tolerance");
}

AnalysisConfig AnalysisConfig::from_environment() {
  AnalysisConfig config;
  if (const char* env = std::getenv("ORBITENT_DEFAULT_TOL")) {
    char* end = nullptr;
    const double t = std::strtod(env, &end);
    if (end == env || *end != '\0')
      throw Error(ErrorKind::InvalidArgument,
                  "ORBITENT_DEFAULT_TOL is not a number: " + std::string(env));
    config.cluster_tol = t;
    config.rank_tol = t;
  }
  return config;
}

int one_particle_rank(const SpectrumClustering& c) { return c.total() - c.kernel; }

BosonSeparability boson_separability(const StateTensor& state,
                                     const SpectrumClustering& one_particle) {
  if (state.symmetry() != Symmetry::bosonic)
    throw Error(ErrorKind::InvalidArgument, "boson separability needs a bosonic state");
  const int rank = one_particle_rank(one_particle);
  BosonSeparability out;
  out.product_of_same_vector = rank == 1;
  if (state.parties() == 2) out.symmetric_simple_tensor = rank <= 2;
  return out;
}

namespace {

void attach_oracle(DegeneracyReport& report, const StateTensor& state,
                   const AnalysisConfig& config) {
  report.oracle = degeneracy_rank(state, config.rank_tol).summary();
}

void fill_from_oracle(DegeneracyReport& report) {
  report.method = "oracle";
  report.orbit_dim = report.oracle->orbit_dim;
  report.coadjoint_dim = report.oracle->symplectic_rank;
  report.degeneracy = report.oracle->degeneracy;
}

}  // namespace

DegeneracyReport analyze(const StateTensor& state, const AnalysisConfig& config) {
  config.validate();
  DegeneracyReport report;
  report.dims = state.dims();
  report.symmetry = state.symmetry();
  for (const auto& spectrum : reduced_matrices(state).spectra())
    report.clusterings.push_back(cluster_spectrum(spectrum, config.cluster_tol));

  if (state.symmetry() != Symmetry::distinguishable) {
    attach_oracle(report, state, config);
    fill_from_oracle(report);
    if (state.symmetry() == Symmetry::fermionic) {
      report.separable = report.oracle->degeneracy == 0;
    } else {
      report.boson_convention = config.boson_convention;
      report.boson_separability = boson_separability(state, report.clusterings.front());
      report.separable =
          config.boson_convention == BosonConvention::product_of_same_vector
              ? std::optional<bool>(report.boson_separability->product_of_same_vector)
              : report.boson_separability->symmetric_simple_tensor;
    }
    return report;
  }

  const Dims& dims = report.dims;
  report.separable = separability_test(report.clusterings);
  const bool closed = has_closed_form(dims, Symmetry::distinguishable) || dims.size() == 1;

  if (!closed || config.oracle == OracleMode::only) {
    attach_oracle(report, state, config);
    fill_from_oracle(report);
    return report;
  }

  report.method = "closed_form";
  report.coadjoint_dim = coadjoint_dimension(report.clusterings, dims);
  if (dims.size() == 2) {
    report.orbit_dim = orbit_dimension_bipartite(report.clusterings[0], dims);
    report.degeneracy = degeneracy_bipartite(report.clusterings[0], dims);
  } else {
    report.degeneracy = degeneracy_bounds(report.clusterings, dims);
  }

  if (config.oracle == OracleMode::verify) {
    attach_oracle(report, state, config);
    if (has_closed_form(dims, Symmetry::distinguishable))
      report.consistency = compare_with_formula(dims, report.clusterings, *report.oracle);
  }
  return report;
}

namespace {

std::string multiplicities(const SpectrumClustering& c) {
  std::ostringstream os;
  os << "m0=" << c.kernel << " blocks=[";
  for (std::size_t n = 0; n < c.blocks.size(); ++n) {
    if (n) os << ", ";
    os << c.blocks[n].value << " x" << c.blocks[n].multiplicity;
  }
  os << "]";
  return os.str();
}

std::string optional_bool(const std::optional<bool>& b) {
  return b ? (*b ? "true" : "false") : "undecided";
}

}  // namespace

std::string render_text(const DegeneracyReport& r) {
  std::ostringstream os;
  os << "state: " << to_string(r.symmetry) << " dims [";
  for (std::size_t k = 0; k < r.dims.size(); ++k) os << (k ? ", " : "") << r.dims[k];
  os << "]\nmethod: " << r.method << "\n";
  for (std::size_t k = 0; k < r.clusterings.size(); ++k)
    os << "party " << k + 1 << " spectrum: " << multiplicities(r.clusterings[k]) << "\n";

  const bool closed = r.method == "closed_form";
  if (r.orbit_dim)
    os << "orbit dimension: " << *r.orbit_dim
       << (closed ? "   (dim O = 2N^2 - 2 m0^2 - sum m_n^2 - 1)" : "   (oracle rank of Re h)")
       << "\n";
  if (r.coadjoint_dim)
    os << "coadjoint dimension: " << *r.coadjoint_dim
       << (closed ? "   (dim mu(O) = sum_k (N_k^2 - 1) - (sum_k sum_n m_{k,n}^2 - M))"
                  : "   (oracle rank of omega)")
       << "\n";
  if (const int* d = std::get_if<int>(&r.degeneracy)) {
    os << "degeneracy: " << *d
       << (closed ? "   (D = sum m_n^2 - 1)" : "   (D = r - s)") << "\n";
  } else {
    const auto& iv = std::get<DegeneracyInterval>(r.degeneracy);
    os << "degeneracy: [" << iv.low << ", " << iv.high << "]"
       << "   (max_k sum_n m_{k,n}^2 - 1 <= D <= sum_k sum_n m_{k,n}^2 - M)\n";
  }
  os << "separable: " << optional_bool(r.separable);
  if (r.symmetry == Symmetry::distinguishable)
    os << "   (sum_{n>=1} m_{k,n}^2 = 1 for every k)";
  os << "\n";
  if (r.boson_separability) {
    os << "boson convention: " << to_string(*r.boson_convention) << "\n"
       << "  symmetric-simple-tensor: "
       << optional_bool(r.boson_separability->symmetric_simple_tensor) << "\n"
       << "  product-of-same-vector: "
       << (r.boson_separability->product_of_same_vector ? "true" : "false") << "\n";
  }
  if (r.oracle)
    os << "oracle (r, s, D): (" << r.oracle->orbit_dim << ", " << r.oracle->symplectic_rank
       << ", " << r.oracle->degeneracy << ")\n";
  if (r.consistency)
    os << "consistency (" << r.consistency->kind
       << "): " << (r.consistency->passed ? "pass" : "FAIL") << "   "
       << r.consistency->detail << "\n";
  return os.str();
}

}  // namespace orbitent

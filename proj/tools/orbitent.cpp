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

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orbitent/analysis.hpp"
#include "orbitent/error.hpp"
#include "orbitent/json_io.hpp"
#include "orbitent/lie_structure.hpp"
#include "orbitent/moment_map.hpp"
#include "orbitent/sampling.hpp"
#include "orbitent/symplectic_oracle.hpp"

using namespace orbitent;

namespace {

enum ExitCode : int { kOk = 0, kInputError = 1, kUnstable = 2, kInconsistent = 3 };

struct Options {
  std::string input;
  std::string format = "json";
  std::optional<double> cluster_tol;
  std::optional<double> rank_tol;
  std::string oracle = "off";
  std::string boson_convention = "B";
  std::uint64_t seed = 0;
  int count = 100;
  std::string dims;
  std::string symmetry = "distinguishable";
  int particles = 2;
};

AnalysisConfig make_config(const Options& o) {
  AnalysisConfig c = AnalysisConfig::from_environment();
  if (o.cluster_tol) c.cluster_tol = *o.cluster_tol;
  if (o.rank_tol) c.rank_tol = *o.rank_tol;
  c.format = parse_output_format(o.format);
  c.oracle = parse_oracle_mode(o.oracle);
  c.boson_convention = parse_boson_convention(o.boson_convention);
  c.seed = o.seed;
  c.validate();
  return c;
}

// "2,2,2" or "[2, 2, 2]"
Dims parse_dims(const std::string& text) {
  std::string cleaned;
  for (char ch : text)
    if (ch != '[' && ch != ']' && ch != ' ') cleaned += ch;
  Dims dims;
  std::stringstream ss(cleaned);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int d = 0;
    try {
      d = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw Error(ErrorKind::InvalidArgument, "bad --dims entry '" + item + "'");
    dims.push_back(d);
  }
  if (dims.empty()) throw Error(ErrorKind::InvalidArgument, "--dims is required");
  return dims;
}

// A single dimension for identical particles means that many particles of
// one mode space.
Dims expand_dims(Dims dims, Symmetry symmetry, int particles) {
  if (symmetry != Symmetry::distinguishable && dims.size() == 1)
    dims.assign(static_cast<std::size_t>(particles), dims.front());
  return dims;
}

StateTensor input_state(const Options& o) {
  if (o.input.empty()) throw Error(ErrorKind::InvalidArgument, "--input is required");
  return load_state(o.input);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_analyze(const Options& o) {
  const AnalysisConfig config = make_config(o);
  const DegeneracyReport report = analyze(input_state(o), config);
  if (config.format == OutputFormat::json)
    emit(to_json(report));
  else
    std::cout << render_text(report);
  return report.consistency && !report.consistency->passed ? kInconsistent : kOk;
}

int cmd_schmidt(const Options& o) {
  const AnalysisConfig config = make_config(o);
  const SchmidtData data = schmidt(input_state(o), config.cluster_tol);
  if (config.format == OutputFormat::json) {
    emit(to_json(data));
  } else {
    std::cout << "singular values:";
    for (double s : data.singular_values) std::cout << " " << s;
    std::cout << "\nkernel: " << data.clustering.kernel << "\nmultiplicities:";
    for (const auto& b : data.clustering.blocks) std::cout << " " << b.multiplicity;
    std::cout << "\nphase: " << data.phase << "\n";
  }
  return kOk;
}

int cmd_canonical(const Options& o) {
  const AnalysisConfig config = make_config(o);
  const CanonicalForm form = canonical_form(input_state(o), config.cluster_tol);
  if (config.format == OutputFormat::json) {
    emit(to_json(form));
  } else {
    const auto& c = form.state.coeffs();
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      if (std::abs(c[i]) < 1e-12) continue;
      const auto idx = multi_index(form.state.dims(), static_cast<std::size_t>(i));
      std::cout << "(";
      for (std::size_t k = 0; k < idx.size(); ++k) std::cout << (k ? "," : "") << idx[k] + 1;
      std::cout << ") " << c[i] << "\n";
    }
  }
  return kOk;
}

int cmd_ks_check(const Options& o) {
  const AnalysisConfig config = make_config(o);
  const Symmetry symmetry = parse_symmetry(o.symmetry);
  const Dims dims = expand_dims(parse_dims(o.dims), symmetry, o.particles);
  const auto table = weight_table(dims, symmetry);
  json rows = json::array();
  bool concordant = true;
  for (const auto& w : table) {
    const KsVerdict v = kostant_sternberg_check(w);
    json row{{"vector", w.label},
             {"weight", w.weight},
             {"symplectic", v.symplectic},
             {"witness", v.witness ? json(v.witness->label()) : json(nullptr)}};
    if (config.oracle != OracleMode::off) {
      const OracleResult r = degeneracy_rank(w.state(), config.rank_tol);
      row["oracle"] = to_json(r.summary());
      const bool agree = v.symplectic == (r.degeneracy == 0);
      row["agrees"] = agree;
      concordant = concordant && agree;
    }
    rows.push_back(std::move(row));
  }
  if (config.format == OutputFormat::json) {
    emit(json{{"dims", dims},
              {"symmetry", std::string(to_string(symmetry))},
              {"rows", rows}});
  } else {
    for (const auto& row : rows) {
      std::cout << row["vector"].get<std::string>() << "  "
                << (row["symplectic"].get<bool>() ? "symplectic" : "not symplectic");
      if (!row["witness"].is_null()) std::cout << "  witness " << row["witness"].get<std::string>();
      if (row.contains("oracle"))
        std::cout << "  oracle D=" << row["oracle"]["degeneracy"].get<int>();
      std::cout << "\n";
    }
  }
  return concordant ? kOk : kInconsistent;
}

int cmd_verify(const Options& o) {
  const AnalysisConfig config = make_config(o);
  const Symmetry symmetry = parse_symmetry(o.symmetry);
  const Dims dims = expand_dims(parse_dims(o.dims), symmetry, o.particles);
  if (!has_closed_form(dims, symmetry))
    throw Error(ErrorKind::InvalidArgument,
                "verify needs two parties of equal dimension or at least three "
                "distinguishable parties");
  if (o.count < 1) throw Error(ErrorKind::InvalidArgument, "--count must be positive");

  Rng rng(config.seed);
  int passed = 0;
  std::string kind;
  json failures = json::array();
  for (int i = 0; i < o.count; ++i) {
    const StateTensor state = random_state(dims, symmetry, rng);
    const ConsistencyRecord rec =
        verify_against_formula(state, config.cluster_tol, config.rank_tol);
    kind = rec.kind;
    if (rec.passed)
      ++passed;
    else
      failures.push_back(json{{"trial", i}, {"record", to_json(rec)}, {"state", state_to_json(state)}});
  }
  const json summary{{"dims", dims},
                     {"symmetry", std::string(to_string(symmetry))},
                     {"seed", config.seed},
                     {"count", o.count},
                     {"kind", kind},
                     {"passed", passed},
                     {"failed", o.count - passed},
                     {"failures", failures}};
  if (config.format == OutputFormat::json)
    emit(summary);
  else
    std::cout << passed << "/" << o.count << " " << kind << " checks passed\n";
  if (!failures.empty()) {
    std::cerr << json{{"error", std::string(to_string(ErrorKind::Inconsistency))},
                      {"message", "closed form and oracle disagree"},
                      {"counterexample", failures.front()}}
                     .dump()
              << "\n";
    return kInconsistent;
  }
  return kOk;
}

int report_error(ErrorKind kind, const std::string& message) {
  std::cerr << json{{"error", std::string(to_string(kind))}, {"message", message}}.dump()
            << "\n";
  if (is_instability(kind)) return kUnstable;
  if (kind == ErrorKind::Inconsistency) return kInconsistent;
  return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local-unitary orbit geometry of pure multipartite states"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "text or json")->capture_default_str();
    cmd->add_option("--cluster-tol", o.cluster_tol, "relative spectrum clustering tolerance");
    cmd->add_option("--rank-tol", o.rank_tol, "relative rank tolerance");
    cmd->add_option("--oracle", o.oracle, "off, verify or only")->capture_default_str();
    cmd->add_option("--boson-convention", o.boson_convention,
                    "A (symmetric simple tensor) or B (product of the same vector)")
        ->capture_default_str();
  };

  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> commands;
  for (auto [name, help, fn] :
       {std::tuple{"analyze", "degeneracy report for a state file", &cmd_analyze},
        std::tuple{"schmidt", "singular value data of a bipartite state", &cmd_schmidt},
        std::tuple{"canonical", "locally diagonalized state and its unitaries", &cmd_canonical}}) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option("--input", o.input, "state document (JSON)")->required();
    add_common(cmd);
    commands.emplace_back(cmd, fn);
  }

  CLI::App* ks = app.add_subcommand("ks-check", "symplectic test on every weight vector");
  ks->add_option("--dims", o.dims, "local dimensions, e.g. 2,2")->required();
  ks->add_option("--symmetry", o.symmetry)->capture_default_str();
  ks->add_option("--particles", o.particles, "particle count when --dims has one entry")
      ->capture_default_str();
  add_common(ks);
  commands.emplace_back(ks, &cmd_ks_check);

  CLI::App* verify = app.add_subcommand("verify", "closed forms against the oracle on random states");
  verify->add_option("--dims", o.dims, "local dimensions, e.g. 3,3")->required();
  verify->add_option("--symmetry", o.symmetry)->capture_default_str();
  verify->add_option("--particles", o.particles)->capture_default_str();
  verify->add_option("--count", o.count)->capture_default_str();
  verify->add_option("--seed", o.seed)->capture_default_str();
  add_common(verify);
  commands.emplace_back(verify, &cmd_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error(ErrorKind::InvalidArgument, e.what());
  }

  try {
    for (auto& [cmd, fn] : commands)
      if (cmd->parsed()) return fn(o);
  } catch (const Error& e) {
    return report_error(e.kind(), e.what());
  } catch (const std::exception& e) {
    return report_error(ErrorKind::InvalidArgument, e.what());
  }
  return kInputError;
}

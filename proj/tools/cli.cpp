// Copyright 2026 The skewrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "skewrank/certificate.hpp"
#include "skewrank/formulas.hpp"
#include "skewrank/graph_io.hpp"
#include "skewrank/oracle.hpp"
#include "skewrank/powers.hpp"
#include "skewrank/skew_matrix.hpp"
#include "skewrank/verify.hpp"
#include "skewrank/witness.hpp"

namespace skewrank::cli {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SKEWRANK_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("SKEWRANK_SEED must be a nonnegative integer");
  }
  return kDefaultSeed;
}

namespace {

struct RunConfig {
  int n = 2;
  int r = 1;
  bool strict = false;
  int max_n = 20;
  std::string format = "json";
  std::string only = "both";
  std::optional<std::uint64_t> seed;
  int restarts = kOracleRestarts;
  int target = 0;
  std::string graph_path;
  std::string out_path;
  std::string verify_id;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << text;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot read " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

int cmd_power(const RunConfig& cfg, bool strict, std::ostream& out) {
  const Graph g = path_power({cfg.n, cfg.r, strict});
  if (cfg.format == "dot")
    out << graph_to_dot(g);
  else
    out << graph_to_json(g) << '\n';
  return 0;
}

int cmd_mrs(const RunConfig& cfg, std::ostream& out) {
  const FormulaVerdict verdict = mrs({cfg.n, cfg.r, cfg.strict});
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["n"] = cfg.n;
  doc["r"] = cfg.r;
  doc["strict"] = cfg.strict;
  doc["value"] = verdict.value;
  doc["case_tag"] = std::string(to_string(verdict.case_tag));
  out << doc.dump() << '\n';
  return 0;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  const TableKind kind = cfg.only == "plain"    ? TableKind::kPlain
                         : cfg.only == "strict" ? TableKind::kStrict
                                                : TableKind::kBoth;
  emit(run_table(cfg.max_n, kind), cfg.out_path, out);
  return 0;
}

int cmd_witness(const RunConfig& cfg, std::ostream& out) {
  const SkewMatrixQ a = cfg.strict ? witness_path_strict(cfg.n, cfg.r) : witness_path_power(cfg.n, cfg.r);
  emit(matrix_to_json(a) + "\n", cfg.out_path, out);
  return 0;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["n"] = cfg.n;
  doc["r"] = cfg.r;
  doc["strict"] = cfg.strict;
  bool ok = true;
  try {
    const RankCertificate cert = certify({cfg.n, cfg.r, cfg.strict});
    doc["value"] = cert.value;
    doc["lower_bound"] = cert.lower_bound;
    doc["lower_kind"] = std::string(to_string(cert.lower_kind));
    if (cert.triangular_witness) {
      const auto& b = *cert.triangular_witness;
      doc["triangular_block"] = {{"rows", {b.row_first, b.row_last}}, {"cols", {b.col_first, b.col_last}}};
    }
    doc["formula"] = cert.formula.value;
    doc["case_tag"] = std::string(to_string(cert.formula.case_tag));
    ok = cert.tight();
  } catch (const std::logic_error& err) {
    doc["error"] = err.what();
    ok = false;
  }
  doc["ok"] = ok;
  out << doc.dump() << '\n';
  return ok ? 0 : 1;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  const Graph g = graph_from_json(read_file(cfg.graph_path));
  const std::uint64_t seed = cfg.seed.value_or(default_seed());
  const OracleResult result = oracle_search(g, cfg.target, cfg.restarts, seed);
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["target"] = cfg.target;
  doc["seed"] = seed;
  doc["found"] = result.found();
  doc["exact"] = result.exact;
  doc["evidence_only"] = !result.exact;
  doc["method"] = std::string(to_string(result.method));
  doc["restart"] = result.restart;
  doc["restarts_tried"] = result.restarts_tried;
  if (result.witness) {
    doc["rank"] = rank_exact(*result.witness);
    doc["matrix"] = nlohmann::ordered_json::parse(matrix_to_json(*result.witness));
  } else {
    doc["matrix"] = nullptr;
  }
  out << doc.dump() << '\n';
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const std::uint64_t seed = cfg.seed.value_or(default_seed());
  std::vector<std::string_view> ids;
  if (cfg.verify_id == "all")
    ids = verify_ids();
  else
    ids.push_back(cfg.verify_id);
  bool ok = true;
  for (auto id : ids) {
    const VerifyReport report = run_verify(id, cfg.max_n, seed);
    out << report.to_text();
    ok = ok && report.all_passed();
  }
  return ok ? 0 : 1;
}

void add_spec_options(CLI::App* cmd, RunConfig& cfg, bool with_strict, int min_n) {
  cmd->add_option("--n", cfg.n, "path order")->required()->check(CLI::Range(min_n, kMaxOrder));
  cmd->add_option("--r", cfg.r, "power")->required()->check(CLI::Range(1, 4 * kMaxOrder));
  if (with_strict) cmd->add_flag("--strict", cfg.strict, "use the strict power");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum skew rank of powers and strict powers of paths", "skewrank"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* power_cmd = app.add_subcommand("power", "emit P_n^r or P_n^(r)");
  add_spec_options(power_cmd, cfg, true, 1);
  power_cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "dot"}));

  auto* strict_cmd = app.add_subcommand("strict-power", "emit P_n^(r)");
  add_spec_options(strict_cmd, cfg, false, 1);
  strict_cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "dot"}));

  auto* mrs_cmd = app.add_subcommand("mrs", "closed-form minimum skew rank");
  add_spec_options(mrs_cmd, cfg, true, 2);
  mrs_cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"json"}));

  auto* table_cmd = app.add_subcommand("table", "CSV of values, bounds and witness ranks");
  table_cmd->add_option("--max-n", cfg.max_n)->required()->check(CLI::Range(2, kMaxOrder));
  table_cmd->add_option("--only", cfg.only, "plain, strict or both")
      ->check(CLI::IsMember({"both", "plain", "strict"}));
  table_cmd->add_option("--out", cfg.out_path);

  auto* witness_cmd = app.add_subcommand("witness", "realizing matrix as JSON");
  add_spec_options(witness_cmd, cfg, true, 1);
  witness_cmd->add_option("--out", cfg.out_path);

  auto* certify_cmd = app.add_subcommand("certify", "value with lower-bound certificate");
  add_spec_options(certify_cmd, cfg, true, 2);

  auto* oracle_cmd = app.add_subcommand("oracle", "search for a realization of bounded rank");
  oracle_cmd->add_option("--graph", cfg.graph_path, "graph JSON file")->required();
  oracle_cmd->add_option("--target", cfg.target, "even rank bound")->required();
  oracle_cmd->add_option("--restarts", cfg.restarts)->check(CLI::NonNegativeNumber);
  oracle_cmd->add_option("--seed", cfg.seed);

  auto* verify_cmd = app.add_subcommand("verify", "run a verification sweep");
  std::vector<std::string> choices{"all"};
  for (auto id : verify_ids()) choices.emplace_back(id);
  verify_cmd->add_option("id", cfg.verify_id, "sweep id or 'all'")->required()->check(CLI::IsMember(choices));
  verify_cmd->add_option("--max-n", cfg.max_n)->check(CLI::Range(2, kMaxOrder));
  verify_cmd->add_option("--seed", cfg.seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*power_cmd) return cmd_power(cfg, cfg.strict, out);
    if (*strict_cmd) return cmd_power(cfg, true, out);
    if (*mrs_cmd) return cmd_mrs(cfg, out);
    if (*table_cmd) return cmd_table(cfg, out);
    if (*witness_cmd) return cmd_witness(cfg, out);
    if (*certify_cmd) return cmd_certify(cfg, out);
    if (*oracle_cmd) return cmd_oracle(cfg, out);
    if (*verify_cmd) return cmd_verify(cfg, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace skewrank::cli

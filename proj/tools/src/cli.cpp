// Copyright 2026 The quegraph Authors
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

#include "quegraph/cli.hpp"

#include <chrono>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "quegraph/eigenbasis.hpp"
#include "quegraph/error.hpp"
#include "quegraph/group.hpp"
#include "quegraph/numkit.hpp"
#include "quegraph/que.hpp"
#include "quegraph/repdec.hpp"
#include "quegraph/serialize.hpp"
#include "quegraph/tails.hpp"

namespace quegraph {

namespace {

namespace fs = std::filesystem;

class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string out = "quegraph-out";
  std::uint64_t seed = 0;
  unsigned threads = 0;

  std::string spec;
  std::string gens;
  std::string model = "real";
  std::string oracle = "split";
  bool matrices = false;

  std::string functions = "indicator:0.5";
  std::size_t m = 1;
  std::optional<double> t;
  std::optional<double> target;
  double epsilon = 1.0;
  std::size_t resamples = 1;
  bool eigen_table = false;

  std::string lemma;
  std::string n_list;
  std::string weights;
  std::string df_list = "1,2";
  std::string kind;
  std::string coeff = "random";
  int k = 0;
  std::string t_grid;
  std::size_t trials = 100000;
  std::string group;
  std::optional<std::size_t> irrep;
};

std::string trim_copy(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(trim_copy(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_double(const std::string& s, std::string_view what) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ConfigError(fmt::format("invalid number '{}' in {}", s, what));
  return value;
}

std::vector<double> parse_doubles(std::string_view text, std::string_view what) {
  std::vector<double> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_double(part, what));
  return out;
}

std::vector<int> parse_ints(std::string_view text, std::string_view what) {
  std::vector<int> out;
  for (const auto& part : split(text, ',')) {
    const double x = parse_double(part, what);
    if (x != std::floor(x)) throw ConfigError(fmt::format("'{}' in {} is not an integer", part, what));
    out.push_back(static_cast<int>(x));
  }
  return out;
}

BasisModel parse_model(const std::string& s) {
  if (s == "real") return BasisModel::real;
  if (s == "complex") return BasisModel::complex;
  throw ConfigError(fmt::format("unknown basis model '{}' (expected real or complex)", s));
}

void write_file(const fs::path& dir, const std::string& name, const std::string& content) {
  std::ofstream file(dir / name, std::ios::binary);
  if (!file) throw ConfigError(fmt::format("cannot write {}", (dir / name).string()));
  file << content;
}

fs::path prepare_out(const Options& o, const std::vector<std::string>& args) {
  fs::path dir(o.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError(fmt::format("cannot create output directory {}: {}", o.out, ec.message()));
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::ostringstream log;
  log << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ") << " quegraph " << version();
  for (const auto& a : args) log << ' ' << a;
  log << '\n';
  std::ofstream file(dir / "run.log", std::ios::app);
  file << log.str();
  return dir;
}

ConfigEcho echo_common(const Options& o, std::string_view command) {
  return {{"command", std::string(command)}, {"seed", std::to_string(o.seed)}};
}

GroupTable load_group(const std::string& spec) { return build_group(parse_group_spec(spec)); }

// ---- group info -------------------------------------------------------------

int cmd_group_info(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  const GroupTable group = load_group(o.spec);
  ConfigEcho cfg = echo_common(o, "group info");
  cfg.emplace_back("spec", o.spec);
  const std::string json = group_info_json(group, cfg);
  write_file(prepare_out(o, args), "report.json", json);
  out << json;
  return kExitOk;
}

// ---- irreps -----------------------------------------------------------------

int cmd_irreps(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  const GroupTable group = load_group(o.spec);
  const RandomSource root(o.seed);
  UnitaryDual dual;
  if (o.oracle == "young") {
    dual = young_orthogonal_irreps(group);
  } else if (o.oracle == "split") {
    RandomSource rng = root;
    dual = build_unitary_dual(group, rng);
  } else {
    throw ConfigError(fmt::format("unknown oracle '{}' (expected split or young)", o.oracle));
  }
  RandomSource check_rng = root.substream("check");
  const DualDiagnostics diag = check_dual(dual, group, check_rng);
  ConfigEcho cfg = echo_common(o, "irreps");
  cfg.emplace_back("spec", o.spec);
  cfg.emplace_back("oracle", o.oracle);
  cfg.emplace_back("matrices", o.matrices ? "true" : "false");
  write_file(prepare_out(o, args), "report.json", dual_json(dual, group, diag, o.matrices, cfg));
  out << fmt::format("{}: {} irreps, dims [{}], sum of squares {}\n", group.spec().to_string(), dual.irreps.size(),
                     fmt::join(dual.dims(), ","), diag.sum_dim_squared);
  if (!diag.ok(group.order())) {
    throw CheckFailure(fmt::format("dual diagnostics failed (sum dim^2 = {}, max errors: hom {:.3e}, unitary {:.3e}, "
                                   "orthogonality {:.3e}, J {:.3e})",
                                   diag.sum_dim_squared, diag.max_homomorphism_error, diag.max_unitarity_error,
                                   diag.max_orthogonality_error, diag.max_j_error));
  }
  return kExitOk;
}

// ---- basis sample -------------------------------------------------------------

int cmd_basis(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  const GroupTable group = load_group(o.spec);
  const BasisModel model = parse_model(o.model);
  const RandomSource root(o.seed);
  RandomSource dual_rng = root;
  const UnitaryDual dual = build_unitary_dual(group, dual_rng);
  RandomSource gens_rng = root.substream("gens");
  const SymmetricSet gens = parse_generators(group, o.gens, gens_rng);
  const RandomSource basis_rng = root.substream("basis");
  const RandomEigenbasis basis = model == BasisModel::real ? sample_eigenbasis(group, dual, gens, basis_rng)
                                                           : sample_complex_eigenbasis(group, dual, gens, basis_rng);
  const CayleyGraph cayley = build_cayley_adjacency(group, gens);
  const BasisVerification verification = verify_basis(basis, cayley);

  ConfigEcho cfg = echo_common(o, "basis sample");
  cfg.emplace_back("spec", o.spec);
  cfg.emplace_back("gens", o.gens);
  cfg.emplace_back("model", o.model);
  const fs::path dir = prepare_out(o, args);
  write_file(dir, "basis_meta.json", basis_meta_json(basis, group, gens, verification, cfg));
  write_file(dir, "basis_values.csv", basis_values_csv(basis));
  if (model == BasisModel::complex) write_file(dir, "basis_values_imag.csv", basis_values_csv(basis, true));
  write_file(dir, "report.json", basis_summary_json(basis, group, verification, cfg));
  out << fmt::format("{} functions, gram {:.3e}, residual {:.3e}, spectrum {:.3e}, completeness {:.3e}\n",
                     basis.functions.size(), verification.max_gram_error, verification.max_residual,
                     verification.spectrum_distance, verification.completeness_error);
  if (!verification.ok()) throw CheckFailure("basis verification failed");
  return kExitOk;
}

// ---- que run ----------------------------------------------------------------

int cmd_que(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  QueConfig config;
  config.group = o.spec;
  config.gens = o.gens;
  config.seed = o.seed;
  config.model = parse_model(o.model);
  if (o.functions == "pm1") {
    config.functions = TestKind::random_pm1;
  } else if (o.functions.rfind("indicator", 0) == 0) {
    config.functions = TestKind::indicator;
    const std::string rest = o.functions.substr(9);
    if (!rest.empty()) {
      if (rest.front() != ':') throw ConfigError(fmt::format("malformed function kind '{}'", o.functions));
      config.density = parse_double(rest.substr(1), "--functions");
    }
  } else {
    throw ConfigError(fmt::format("unknown function kind '{}' (expected indicator:P or pm1)", o.functions));
  }
  config.m = o.m;
  config.t = o.t;
  config.target = o.target;
  config.epsilon = o.epsilon;
  config.resamples = o.resamples;
  const QueReport report = run_que_experiment(config);

  ConfigEcho cfg = echo_common(o, "que run");
  cfg.emplace_back("spec", o.spec);
  cfg.emplace_back("gens", o.gens);
  cfg.emplace_back("model", o.model);
  cfg.emplace_back("functions", o.functions);
  cfg.emplace_back("m", std::to_string(o.m));
  cfg.emplace_back("t", o.t ? format_double(*o.t) : "");
  cfg.emplace_back("target", o.target ? format_double(*o.target) : "");
  cfg.emplace_back("epsilon", format_double(o.epsilon));
  cfg.emplace_back("resamples", std::to_string(o.resamples));
  const fs::path dir = prepare_out(o, args);
  write_file(dir, "report.json", que_report_json(report, cfg));
  write_file(dir, "records.csv", que_records_csv(report));
  if (o.eigen_table) write_file(dir, "eigen_table.csv", que_eigen_table_csv(report));
  out << fmt::format("t = {:.6g} ({}), bound {:.6g}{}, max discrepancy {:.3e}, failure frequency {:.4f}\n",
                     report.t, report.t_source, report.failure_bound, report.vacuous ? " (vacuous)" : "",
                     report.max_discrepancy, report.empirical_failure_frequency);
  if (report.deterministic_failures > 0) {
    for (const auto& r : report.records) {
      if (!r.det_ok) {
        throw CheckFailure(fmt::format("deterministic bound failed: resample {}, function {}, test {} "
                                       "(lhs {:.17g} > rhs {:.17g})",
                                       r.resample, r.function, r.test, r.det_lhs, r.det_rhs));
      }
    }
  }
  if (!report.frequency_ok) {
    throw CheckFailure(fmt::format("empirical failure frequency {:.6g} exceeds the bound {:.6g} beyond slack",
                                   report.empirical_failure_frequency, report.failure_bound));
  }
  return kExitOk;
}

// ---- tails check --------------------------------------------------------------

std::string canonical_lemma(const std::string& s) {
  static const std::vector<std::pair<std::string, std::string>> aliases = {
      {"5.1", "5.1"}, {"chi2", "5.1"},          {"5.2", "5.2"},           {"weighted", "5.2"},
      {"5.3", "5.3"}, {"unitary", "5.3"},       {"5.4", "5.4"},           {"orthogonal", "5.4"},
      {"6.2", "6.2"}, {"prop-unitary", "6.2"},  {"6.3", "6.3"},           {"prop-orthogonal", "6.3"}};
  for (const auto& [alias, canon] : aliases) {
    if (s == alias) return canon;
  }
  throw ConfigError(fmt::format("unknown lemma '{}'", s));
}

CMatrix parse_coefficients(const std::string& text, int n, CoeffKind kind, RandomSource& rng) {
  CMatrix c = CMatrix::Zero(n, n);
  if (text == "random") {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        c(i, j) = kind == CoeffKind::orthogonal ? Complex(rng.normal(), 0.0) : rng.complex_normal();
      }
    }
    if (kind != CoeffKind::unitary_sym) {
      const Complex shift = c.trace() / static_cast<double>(n);
      for (int i = 0; i < n; ++i) c(i, i) -= shift;
      // Exact zero trace after rounding: fold the residual into the last entry.
      c(n - 1, n - 1) -= c.trace();
    }
    return c;
  }
  if (text.rfind("diag:", 0) == 0) {
    const auto values = parse_doubles(text.substr(5), "--coeff");
    if (static_cast<int>(values.size()) != n) {
      throw ConfigError(fmt::format("--coeff diag has {} entries, expected {}", values.size(), n));
    }
    for (int i = 0; i < n; ++i) c(i, i) = values[static_cast<std::size_t>(i)];
    return c;
  }
  const auto rows = split(text, ';');
  if (static_cast<int>(rows.size()) != n) throw ConfigError(fmt::format("--coeff has {} rows, expected {}", rows.size(), n));
  for (int i = 0; i < n; ++i) {
    const auto values = parse_doubles(rows[static_cast<std::size_t>(i)], "--coeff");
    if (static_cast<int>(values.size()) != n) throw ConfigError("--coeff rows must have n entries");
    for (int j = 0; j < n; ++j) c(i, j) = values[static_cast<std::size_t>(j)];
  }
  return c;
}

int cmd_tails(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  const std::string lemma = canonical_lemma(o.lemma);
  const RandomSource root(o.seed);
  const RandomSource tails_rng = root.substream("tails");
  TailCheckConfig base;
  base.trials = o.trials;
  std::vector<TailCheckResult> results;
  auto next_cfg = [&](std::vector<double> grid) {
    TailCheckConfig cfg = base;
    cfg.grid = std::move(grid);
    cfg.rng = tails_rng.substream(results.size());
    return cfg;
  };
  auto grid_or = [&](const char* fallback) {
    return parse_doubles(o.t_grid.empty() ? std::string(fallback) : o.t_grid, "--t-grid");
  };

  if (lemma == "5.1") {
    for (int n : parse_ints(o.n_list.empty() ? "1,12,50,200" : o.n_list, "--n")) {
      results.push_back(chi2_lower_tail_check(n, next_cfg({})));
    }
  } else if (lemma == "5.2") {
    std::vector<WeightVector> weights;
    if (!o.weights.empty()) {
      const auto a = parse_doubles(o.weights, "--weights");
      weights.push_back(make_weight_vector(Eigen::Map<const RVector>(a.data(), static_cast<Eigen::Index>(a.size()))));
    } else {
      RandomSource wrng = root.substream("weights");
      for (int v = 0; v < 5; ++v) {
        RVector a(6);
        for (auto& x : a) x = wrng.normal();
        a.array() -= a.mean();
        a[5] = -a.head(5).sum();
        weights.push_back(make_weight_vector(a));
      }
    }
    const auto grid = grid_or("1,2,5,10,20");
    for (const auto& w : weights) {
      for (int df : parse_ints(o.df_list, "--df")) results.push_back(weighted_chi2_tail_check(w, df, next_cfg(grid)));
    }
  } else if (lemma == "5.3" || lemma == "5.4") {
    std::vector<CoeffKind> kinds;
    if (lemma == "5.4") {
      if (!o.kind.empty() && o.kind != "orthogonal") throw ConfigError("lemma 5.4 uses the orthogonal kind");
      kinds = {CoeffKind::orthogonal};
    } else if (o.kind.empty()) {
      kinds = {CoeffKind::unitary_mixed, CoeffKind::unitary_sym};
    } else {
      kinds = {parse_coeff_kind(o.kind)};
      if (kinds.front() == CoeffKind::orthogonal) throw ConfigError("lemma 5.3 uses the unitary kinds");
    }
    RandomSource crng = root.substream("coefficients");
    const auto grid = grid_or("0.5,1,1.5");
    for (int n : parse_ints(o.n_list.empty() ? "2,5,10" : o.n_list, "--n")) {
      for (CoeffKind kind : kinds) {
        const CMatrix coeff = parse_coefficients(o.coeff, n, kind, crng);
        results.push_back(matrix_coeff_tail_check(n, coeff, kind, next_cfg(grid), o.k));
      }
    }
  } else {
    if (o.group.empty()) throw ConfigError(fmt::format("lemma {} needs --group", lemma));
    const GroupTable group = load_group(o.group);
    RandomSource dual_rng = root;
    const UnitaryDual dual = build_unitary_dual(group, dual_rng);
    const bool orthogonal = lemma == "6.3";
    std::size_t index = 0;
    if (o.irrep) {
      index = *o.irrep;
      if (index >= dual.irreps.size()) throw ConfigError(fmt::format("irrep index {} out of range", index));
    } else {
      bool found = false;
      for (std::size_t i = 0; i < dual.irreps.size(); ++i) {
        if (i == dual.trivial_index || (orthogonal && dual.irreps[i].fs_type != FsType::real)) continue;
        if (!found || dual.irreps[i].dim > dual.irreps[index].dim) index = i;
        found = true;
      }
      if (!found) throw ConfigError("no suitable irrep in this group");
    }
    const Irrep& irrep = dual.irreps[index];
    if (orthogonal && irrep.fs_type != FsType::real) {
      throw ConfigError(fmt::format("irrep {} is {}, the orthogonal case needs a real irrep", index,
                                    fs_type_name(irrep.fs_type)));
    }
    RandomSource frng = root.substream("functions");
    const TestFunction f = zero_mean_shift(random_pm1(group.order(), frng));
    CVector v(irrep.dim);
    if (orthogonal) {
      RVector a(irrep.dim);
      for (auto& x : a) x = frng.normal();
      v = *irrep.real_basis * a.normalized().cast<Complex>();
    } else {
      for (auto& x : v) x = frng.complex_normal();
      v.normalize();
    }
    results.push_back(prop_tail_check(irrep, f, v, orthogonal ? PropCase::orthogonal : PropCase::unitary,
                                      next_cfg(grid_or("8,16,32")), o.k));
  }

  ConfigEcho cfg = echo_common(o, "tails check");
  cfg.emplace_back("lemma", lemma);
  cfg.emplace_back("trials", std::to_string(o.trials));
  cfg.emplace_back("n", o.n_list);
  cfg.emplace_back("weights", o.weights);
  cfg.emplace_back("df", o.df_list);
  cfg.emplace_back("kind", o.kind);
  cfg.emplace_back("coeff", o.coeff);
  cfg.emplace_back("k", std::to_string(o.k));
  cfg.emplace_back("t_grid", o.t_grid);
  cfg.emplace_back("group", o.group);
  cfg.emplace_back("irrep", o.irrep ? std::to_string(*o.irrep) : "");
  const fs::path dir = prepare_out(o, args);
  write_file(dir, "report.json", tails_json(results, cfg));
  write_file(dir, "tails.csv", tails_csv(results));
  std::optional<std::string> failure;
  for (const auto& r : results) {
    for (const auto& row : r.rows) {
      out << fmt::format("lemma {} [{}] {}{}: empirical {:.6g} bound {:.6g} slack {:.3g} -> {}\n", r.lemma,
                         r.parameters, row.series.empty() ? "" : row.series + " ", format_double(row.threshold),
                         row.empirical, row.bound, row.slack,
                         row.vacuous ? "vacuous-pass" : (row.pass ? "pass" : "FAIL"));
      if (!row.pass && !failure) {
        failure = fmt::format("lemma {} [{}] at threshold {} (empirical {:.6g} > bound {:.6g} + slack {:.3g})",
                              r.lemma, r.parameters, format_double(row.threshold), row.empirical, row.bound,
                              row.slack);
      }
    }
  }
  if (failure) throw CheckFailure(*failure);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app("Quantum ergodicity experiments on Cayley graphs of finite groups", "quegraph");
  app.set_version_flag("--version", version());
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out, "Output directory");
  app.add_option("--seed", o.seed, "Master seed");
  app.add_option("--threads", o.threads, "Worker threads (0 = all cores)");

  auto* group_cmd = app.add_subcommand("group", "Group tables");
  group_cmd->require_subcommand(1);
  auto* info = group_cmd->add_subcommand("info", "Order and conjugacy classes");
  info->add_option("spec", o.spec, "Group spec, e.g. sym:4")->required();

  auto* irreps = app.add_subcommand("irreps", "Unitary dual");
  irreps->add_option("spec", o.spec, "Group spec")->required();
  irreps->add_option("--oracle", o.oracle, "split (default) or young");
  irreps->add_flag("--matrices", o.matrices, "Include representation matrices in the report");

  auto* basis_cmd = app.add_subcommand("basis", "Random eigenbases");
  basis_cmd->require_subcommand(1);
  auto* sample_cmd = basis_cmd->add_subcommand("sample", "Sample one eigenbasis");
  sample_cmd->add_option("spec", o.spec, "Group spec")->required();
  sample_cmd->add_option("--gens", o.gens, "Generators")->required();
  sample_cmd->add_option("--model", o.model, "real (default) or complex");

  auto* que_cmd = app.add_subcommand("que", "Quantum ergodicity experiments");
  que_cmd->require_subcommand(1);
  auto* run_cmd = que_cmd->add_subcommand("run", "Run an experiment");
  run_cmd->add_option("spec", o.spec, "Group spec")->required();
  run_cmd->add_option("--gens", o.gens, "Generators")->required();
  run_cmd->add_option("--model", o.model, "real (default) or complex");
  run_cmd->add_option("--functions", o.functions, "indicator:P or pm1");
  run_cmd->add_option("--m", o.m, "Number of test functions")->required();
  auto* t_opt = run_cmd->add_option("--t", o.t, "Explicit t");
  auto* target_opt = run_cmd->add_option("--target", o.target, "Failure probability target for choose_t");
  t_opt->excludes(target_opt);
  run_cmd->add_option("--epsilon", o.epsilon, "epsilon of the closed-form t comparison");
  run_cmd->add_option("--resamples", o.resamples, "Number of basis resamples");
  run_cmd->add_flag("--eigen-table", o.eigen_table, "Also write eigen_table.csv");

  auto* tails_cmd = app.add_subcommand("tails", "Monte Carlo tail checks");
  tails_cmd->require_subcommand(1);
  auto* check = tails_cmd->add_subcommand("check", "Check one family of tail bounds");
  check->add_option("--lemma", o.lemma, "5.1, 5.2, 5.3, 5.4, 6.2 or 6.3")->required();
  check->add_option("--n", o.n_list, "Comma-separated N (5.1) or dimensions (5.3/5.4)");
  check->add_option("--weights", o.weights, "Comma-separated zero-sum weights (5.2)");
  check->add_option("--df", o.df_list, "Degrees of freedom, 1 and/or 2 (5.2)");
  check->add_option("--kind", o.kind, "unitary_mixed, unitary_sym or orthogonal");
  check->add_option("--coeff", o.coeff, "random, diag:a,b,... or rows a,b;c,d");
  check->add_option("--k", o.k, "Column index (0-based)");
  check->add_option("--t-grid", o.t_grid, "Comma-separated thresholds");
  check->add_option("--trials", o.trials, "Monte Carlo trials");
  check->add_option("--group", o.group, "Group spec (6.2/6.3)");
  check->add_option("--irrep", o.irrep, "Irrep index (6.2/6.3)");

  for (auto* sub : {group_cmd, info, irreps, basis_cmd, sample_cmd, que_cmd, run_cmd, tails_cmd, check}) {
    sub->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion&) {
    out << version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }

  try {
    set_thread_count(o.threads);
    if (info->parsed()) return cmd_group_info(o, args, out);
    if (irreps->parsed()) return cmd_irreps(o, args, out);
    if (sample_cmd->parsed()) return cmd_basis(o, args, out);
    if (run_cmd->parsed()) return cmd_que(o, args, out);
    if (check->parsed()) return cmd_tails(o, args, out);
    err << app.help();
    return kExitConfigError;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const CheckFailure& e) {
    err << "check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace quegraph

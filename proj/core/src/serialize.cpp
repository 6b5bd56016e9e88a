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

#include "quegraph/serialize.hpp"

#include <cstdio>
#include <map>
#include <tuple>

#include <fmt/format.h>
#include <json.hpp>

namespace quegraph {

namespace {

using Json = nlohmann::ordered_json;

Json header(std::string_view kind, const ConfigEcho& config) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  j["tool"] = {{"name", "quegraph"}, {"version", version()}};
  Json cfg = Json::object();
  for (const auto& [key, value] : config) cfg[key] = value;
  j["config"] = cfg;
  return j;
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json complex_vector(const CVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v[i]));
  return out;
}

Json complex_matrix(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json real_vector(const RVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json provenance_json(const Provenance& p) {
  return {{"irrep", p.irrep}, {"type", basis_kind_name(p.kind)}, {"k", p.k}, {"j", p.j}};
}

}  // namespace

std::string version() { return QUEGRAPH_VERSION; }

std::string format_double(double x) { return fmt::format("{:.17g}", x); }

std::string group_info_json(const GroupTable& group, const ConfigEcho& config) {
  Json j = header("group_info", config);
  j["spec"] = group.spec().to_string();
  j["family"] = family_name(group.spec().family);
  j["order"] = group.order();
  j["num_classes"] = group.num_classes();
  bool abelian = true;
  for (Element a = 0; a < group.order() && abelian; ++a) {
    for (Element b = 0; b < group.order(); ++b) {
      if (group.mul(a, b) != group.mul(b, a)) {
        abelian = false;
        break;
      }
    }
  }
  j["abelian"] = abelian;
  Json classes = Json::array();
  for (std::size_t c = 0; c < group.num_classes(); ++c) {
    const Element rep = group.class_representative(c);
    classes.push_back({{"representative", rep},
                       {"name", group.name(rep)},
                       {"size", group.classes()[c].size()},
                       {"element_order", group.element_order(rep)}});
  }
  j["classes"] = std::move(classes);
  Json elements = Json::array();
  for (Element g = 0; g < group.order(); ++g) elements.push_back(group.name(g));
  j["elements"] = std::move(elements);
  return dump(j);
}

std::string dual_json(const UnitaryDual& dual, const GroupTable& group, const DualDiagnostics& diagnostics,
                      bool include_matrices, const ConfigEcho& config) {
  Json j = header("unitary_dual", config);
  j["group"] = group.spec().to_string();
  j["order"] = group.order();
  j["num_irreps"] = dual.irreps.size();
  j["sum_dim_squared"] = diagnostics.sum_dim_squared;
  j["quasirandomness"] = quasirandomness(dual);
  j["trivial_index"] = dual.trivial_index;
  Json irreps = Json::array();
  for (std::size_t i = 0; i < dual.irreps.size(); ++i) {
    const Irrep& irrep = dual.irreps[i];
    Json entry = {{"index", i},
                  {"label", irrep.label},
                  {"dim", irrep.dim},
                  {"fs_type", fs_type_name(irrep.fs_type)},
                  {"fs_indicator", static_cast<int>(irrep.fs_type)},
                  {"dual", i < dual.dual_pairing.size() ? dual.dual_pairing[i] : i},
                  {"character", complex_vector(irrep.character)}};
    if (include_matrices) {
      Json mats = Json::array();
      for (const auto& m : irrep.matrices) mats.push_back(complex_matrix(m));
      entry["matrices"] = std::move(mats);
      if (irrep.j_matrix) entry["j_matrix"] = complex_matrix(*irrep.j_matrix);
    }
    irreps.push_back(std::move(entry));
  }
  j["irreps"] = std::move(irreps);
  j["diagnostics"] = {{"max_homomorphism_error", diagnostics.max_homomorphism_error},
                      {"max_unitarity_error", diagnostics.max_unitarity_error},
                      {"max_class_function_error", diagnostics.max_class_function_error},
                      {"max_orthogonality_error", diagnostics.max_orthogonality_error},
                      {"max_pairing_error", diagnostics.max_pairing_error},
                      {"max_j_error", diagnostics.max_j_error},
                      {"trivial_count", diagnostics.trivial_count},
                      {"ok", diagnostics.ok(group.order())}};
  return dump(j);
}

std::string basis_meta_json(const RandomEigenbasis& basis, const GroupTable& group, const SymmetricSet& gens,
                            const BasisVerification& verification, const ConfigEcho& config) {
  Json j = header("basis_meta", config);
  j["group"] = group.spec().to_string();
  j["order"] = group.order();
  j["model"] = basis_model_name(basis.model);
  j["seed"] = {{"seed", basis.seed}, {"stream", basis.stream}};
  j["generators"] = gens.elements;
  j["degree"] = gens.degree();
  Json draws = Json::array();
  for (const auto& d : basis.draws) {
    Json entry = {{"irrep", d.irrep},
                  {"partner", d.partner},
                  {"scheme", d.scheme},
                  {"matrix", d.matrix},
                  {"eigenvalues", real_vector(d.eigenvalues)}};
    if (d.draw.size() > 0) entry["draw"] = complex_matrix(d.draw);
    draws.push_back(std::move(entry));
  }
  j["draws"] = std::move(draws);
  Json functions = Json::array();
  for (const auto& f : basis.functions) {
    functions.push_back({{"eigenvalue", f.eigenvalue}, {"provenance", provenance_json(f.provenance)}});
  }
  j["functions"] = std::move(functions);
  j["verification"] = {{"count", verification.count},
                       {"max_gram_error", verification.max_gram_error},
                       {"max_residual", verification.max_residual},
                       {"spectrum_distance", verification.spectrum_distance},
                       {"completeness_error", verification.completeness_error},
                       {"has_constant", verification.has_constant},
                       {"ok", verification.ok()}};
  return dump(j);
}

std::string basis_summary_json(const RandomEigenbasis& basis, const GroupTable& group,
                               const BasisVerification& verification, const ConfigEcho& config) {
  Json j = header("basis_summary", config);
  j["group"] = group.spec().to_string();
  j["model"] = basis_model_name(basis.model);
  j["functions"] = basis.functions.size();
  j["verification"] = {{"max_gram_error", verification.max_gram_error},
                       {"max_residual", verification.max_residual},
                       {"spectrum_distance", verification.spectrum_distance},
                       {"completeness_error", verification.completeness_error},
                       {"gram_ok", verification.gram_ok},
                       {"residual_ok", verification.residual_ok},
                       {"spectrum_ok", verification.spectrum_ok},
                       {"completeness_ok", verification.completeness_ok},
                       {"count_ok", verification.count_ok},
                       {"has_constant", verification.has_constant},
                       {"ok", verification.ok()}};
  return dump(j);
}

std::string basis_values_csv(const RandomEigenbasis& basis, bool imaginary) {
  std::string out = "function";
  const Eigen::Index n = basis.functions.empty() ? 0 : basis.functions.front().values.size();
  for (Eigen::Index g = 0; g < n; ++g) out += fmt::format(",g{}", g);
  out += '\n';
  for (std::size_t i = 0; i < basis.functions.size(); ++i) {
    out += std::to_string(i);
    const CVector& v = basis.functions[i].values;
    for (Eigen::Index g = 0; g < n; ++g) {
      out += ',';
      out += format_double(imaginary ? v[g].imag() : v[g].real());
    }
    out += '\n';
  }
  return out;
}

std::string que_report_json(const QueReport& report, const ConfigEcho& config) {
  Json j = header("que_report", config);
  const QueConfig& c = report.config;
  j["experiment"] = {{"group", c.group},
                     {"gens", c.gens},
                     {"seed", c.seed},
                     {"model", basis_model_name(c.model)},
                     {"functions", test_kind_name(c.functions)},
                     {"density", c.density},
                     {"m", c.m},
                     {"resamples", c.resamples},
                     {"epsilon", c.epsilon}};
  j["order"] = report.order;
  j["generators"] = report.gens.elements;
  j["dims"] = report.dims;
  j["test_functions"] = Json::array();
  for (std::size_t a = 0; a < report.test_norms.size(); ++a) {
    j["test_functions"].push_back({{"l2_norm", report.test_norms[a]}, {"support", report.test_sizes[a]}});
  }
  const ChooseTResult& ti = report.t_info;
  j["t"] = {{"value", report.t},
            {"source", report.t_source},
            {"target", ti.target},
            {"achievable", ti.achievable},
            {"floor", ti.floor},
            {"closed_form_epsilon", {{"epsilon", ti.epsilon}, {"t", ti.t_closed_epsilon}, {"bound", ti.bound_closed_epsilon}}},
            {"closed_form_128", {{"t", ti.t_closed_128}, {"bound", ti.bound_closed_128}}}};
  j["aggregates"] = {{"records", report.records.size()},
                     {"max_discrepancy", report.max_discrepancy},
                     {"failed_resamples", report.failed_resamples},
                     {"empirical_failure_frequency", report.empirical_failure_frequency},
                     {"failure_probability_bound", report.failure_bound},
                     {"guarantee", report.vacuous ? "vacuous at this size" : "non-vacuous"},
                     {"frequency_ok", report.frequency_ok},
                     {"deterministic_failures", report.deterministic_failures},
                     {"ok", report.ok()}};
  return dump(j);
}

std::string que_records_csv(const QueReport& report) {
  std::string out =
      "resample,function,test,irrep,type,k,j,eigenvalue,measure,discrepancy,l2_rhs,l2_ok,det_lhs,det_rhs,det_ok\n";
  for (const auto& r : report.records) {
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", r.resample, r.function, r.test,
                       r.provenance.irrep, basis_kind_name(r.provenance.kind), r.provenance.k, r.provenance.j,
                       format_double(r.eigenvalue), format_double(r.measure), format_double(r.discrepancy),
                       format_double(r.l2_rhs), r.l2_ok ? 1 : 0, format_double(r.det_lhs),
                       format_double(r.det_rhs), r.det_ok ? 1 : 0);
  }
  return out;
}

std::string que_eigen_table_csv(const QueReport& report) {
  // Eigenvalues are grouped after rounding to 1e-9 so that numerically equal values share a row.
  std::map<std::tuple<std::size_t, std::size_t, long long>, std::pair<double, std::size_t>> table;
  for (const auto& r : report.records) {
    const auto key = std::make_tuple(r.resample, r.test, std::llround(r.eigenvalue * 1e9));
    auto& [worst, count] = table[key];
    worst = std::max(worst, r.discrepancy);
    ++count;
  }
  std::string out = "resample,test,eigenvalue,multiplicity,max_discrepancy\n";
  for (const auto& [key, value] : table) {
    out += fmt::format("{},{},{},{},{}\n", std::get<0>(key), std::get<1>(key),
                       format_double(static_cast<double>(std::get<2>(key)) * 1e-9), value.second,
                       format_double(value.first));
  }
  return out;
}

std::string tails_json(const std::vector<TailCheckResult>& results, const ConfigEcho& config) {
  Json j = header("tails", config);
  Json checks = Json::array();
  bool all = true;
  for (const auto& r : results) {
    std::size_t vacuous = 0, passed = 0;
    for (const auto& row : r.rows) {
      vacuous += row.vacuous ? 1 : 0;
      passed += row.pass ? 1 : 0;
    }
    all = all && r.passed();
    checks.push_back({{"lemma", r.lemma},
                      {"parameters", r.parameters},
                      {"trials", r.trials},
                      {"rows", r.rows.size()},
                      {"passed_rows", passed},
                      {"vacuous_rows", vacuous},
                      {"pass", r.passed()}});
  }
  j["checks"] = std::move(checks);
  j["pass"] = all;
  return dump(j);
}

std::string tails_csv(const std::vector<TailCheckResult>& results) {
  std::string out = "lemma,parameters,series,threshold,event,empirical,bound,slack,verdict\n";
  for (const auto& r : results) {
    for (const auto& row : r.rows) {
      const char* verdict = row.vacuous ? "vacuous-pass" : (row.pass ? "pass" : "fail");
      out += fmt::format("{},\"{}\",{},{},{},{},{},{},{}\n", r.lemma, r.parameters, row.series,
                         format_double(row.threshold), format_double(row.event), format_double(row.empirical),
                         format_double(row.bound), format_double(row.slack), verdict);
    }
  }
  return out;
}

}  // namespace quegraph

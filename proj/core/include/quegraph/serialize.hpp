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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quegraph/eigenbasis.hpp"
#include "quegraph/group.hpp"
#include "quegraph/que.hpp"
#include "quegraph/repdec.hpp"
#include "quegraph/tails.hpp"

namespace quegraph {

inline constexpr int kSchemaVersion = 1;

std::string version();

// Resolved invocation settings, embedded verbatim in every report.
using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

// Shortest text that reads back as the same double.
std::string format_double(double x);

std::string group_info_json(const GroupTable& group, const ConfigEcho& config);
std::string dual_json(const UnitaryDual& dual, const GroupTable& group, const DualDiagnostics& diagnostics,
                      bool include_matrices, const ConfigEcho& config);
std::string basis_meta_json(const RandomEigenbasis& basis, const GroupTable& group, const SymmetricSet& gens,
                            const BasisVerification& verification, const ConfigEcho& config);
// Compact verification summary of a sampled basis.
std::string basis_summary_json(const RandomEigenbasis& basis, const GroupTable& group,
                               const BasisVerification& verification, const ConfigEcho& config);
// One row per function, one column per group element; real or imaginary parts.
std::string basis_values_csv(const RandomEigenbasis& basis, bool imaginary = false);
std::string que_report_json(const QueReport& report, const ConfigEcho& config);
std::string que_records_csv(const QueReport& report);
// Per (resample, test, eigenvalue) maximum discrepancy, for plotting.
std::string que_eigen_table_csv(const QueReport& report);
std::string tails_json(const std::vector<TailCheckResult>& results, const ConfigEcho& config);
std::string tails_csv(const std::vector<TailCheckResult>& results);

}  // namespace quegraph

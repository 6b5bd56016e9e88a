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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quegraph/eigenbasis.hpp"
#include "quegraph/group.hpp"
#include "quegraph/repdec.hpp"

namespace quegraph {

enum class TestKind { indicator, random_pm1, user };
std::string_view test_kind_name(TestKind kind);

struct TestFunction {
  RVector values;
  double mean = 0;
  TestKind kind = TestKind::user;

  double l2_norm() const { return values.norm(); }
};

TestFunction make_test_function(RVector values, TestKind kind = TestKind::user);
// Indicator of a uniformly random subset with round(density * n) elements.
TestFunction random_indicator(std::size_t n, double density, RandomSource& rng);
TestFunction random_pm1(std::size_t n, RandomSource& rng);

// sum_g f(g) |phi(g)|^2. Throws ConfigError on length mismatch.
double quantum_measure(const BasisFunction& phi, const TestFunction& f);
// |mu_phi[f] - mean(f)|.
double discrepancy(const BasisFunction& phi, const TestFunction& f);
TestFunction zero_mean_shift(const TestFunction& f);

// Coefficient matrices of x in V (x) V-check and y in V (x) V:
//   X = (d/|G|) sum_g f(g) p_g p_g^*,  Y = (d/|G|) sum_g f(g) p_g p_g^T,  p_g = pi(g) v,
// so <x, w (x) w-check> = w^* X w and <y, w (x) w> = w^* Y conj(w).
struct XYMatrices {
  CMatrix x;
  CMatrix y;
};

// Throws ConfigError unless f has zero mean within 1e-10 (relative to max |f|).
XYMatrices xy_vectors(const Irrep& irrep, const TestFunction& f_zero_mean, const CVector& v);

struct DeterministicCheck {
  double lhs = 0;  // |sum_g f0(g) |phi(g)|^2|
  double rhs = 0;
  bool ok = false;
  bool identity = false;  // true when the bound is an equality (type 3, complex model)
};

// Deterministic bound on |mu_phi[f] - mean f| for a basis function with
// provenance. `xy` may carry a precomputed xy_vectors(irrep, f0, phi.v).
DeterministicCheck deterministic_bound_check(const BasisFunction& phi, const TestFunction& f,
                                             const UnitaryDual& dual,
                                             const XYMatrices* xy = nullptr);

// max_g | |phi(g)|^2 - (d/|G|)(|z|^2 +- Re z^2) |, z = w^* pi(g) v, for types 1/2.
double splitting_identity_error(const BasisFunction& phi, const UnitaryDual& dual);

// 2M sum over nontrivial, non-excluded irreps of d^2 (6 e^{-t sqrt(d)/64} + 2 e^{-d/12}).
double failure_probability_bound(const std::vector<int>& dims, std::size_t trivial_index,
                                 double m, double t, const std::vector<std::size_t>& exclude = {});
double failure_probability_bound(const UnitaryDual& dual, double m, double t);
// Variant over G-hat minus {trivial, sign}; throws ConfigError if there is no sign irrep.
double failure_probability_bound_without_sign(const UnitaryDual& dual, const GroupTable& group,
                                              double m, double t);
// Index of the nontrivial real 1-dimensional irrep of a symmetric group.
std::optional<std::size_t> sign_irrep(const UnitaryDual& dual, const GroupTable& group);

// Limit of failure_probability_bound as t -> infinity.
double failure_probability_floor(const std::vector<int>& dims, std::size_t trivial_index, double m);

struct ChooseTResult {
  bool achievable = false;
  double t = 0;         // minimal t with bound < target (when achievable)
  double bound_at_t = 0;
  double floor = 0;
  double target = 0;
  double epsilon = 1;
  double t_closed_epsilon = 0;  // 64 (eps + 1) log|G| / sqrt(D)
  double t_closed_128 = 0;      // 128 log|G| / sqrt(D)
  double bound_closed_epsilon = 0;
  double bound_closed_128 = 0;
};

// Throws ConfigError unless 0 < target < 1 and m >= 1.
ChooseTResult choose_t(const UnitaryDual& dual, std::size_t group_order, double m, double target,
                       double epsilon = 1.0);
// Closed forms only (no inversion).
ChooseTResult closed_form_t(const UnitaryDual& dual, std::size_t group_order, double m,
                            double epsilon = 1.0);

// Smallest dimension of a nontrivial irrep.
int quasirandomness(const UnitaryDual& dual);

double witten_zeta_partial(const std::vector<int>& dims, double s,
                           const std::vector<std::size_t>& exclude = {});
double witten_zeta(const std::vector<int>& dims, double s);

struct QueConfig {
  std::string group;
  std::string gens;
  std::uint64_t seed = 0;
  BasisModel model = BasisModel::real;
  TestKind functions = TestKind::indicator;
  double density = 0.5;
  std::size_t m = 1;
  std::optional<double> t;
  std::optional<double> target;
  double epsilon = 1.0;
  std::size_t resamples = 1;
};

// Throws ConfigError on inconsistent settings.
void validate(const QueConfig& config);

struct QueRecord {
  std::size_t resample = 0;
  std::size_t function = 0;  // index into the basis
  std::size_t test = 0;      // index into the test functions
  Provenance provenance;
  double eigenvalue = 0;
  double measure = 0;
  double discrepancy = 0;
  double l2_rhs = 0;
  double det_lhs = 0;
  double det_rhs = 0;
  bool l2_ok = false;
  bool det_ok = false;
};

struct QueReport {
  QueConfig config;
  std::size_t order = 0;
  SymmetricSet gens;
  std::vector<int> dims;
  std::vector<double> test_norms;
  std::vector<std::size_t> test_sizes;  // |A| for indicators, 0 otherwise
  double t = 0;
  std::string t_source;  // "explicit" or "target"
  ChooseTResult t_info;
  double failure_bound = 0;
  bool vacuous = false;
  std::vector<QueRecord> records;
  double max_discrepancy = 0;
  std::size_t failed_resamples = 0;
  double empirical_failure_frequency = 0;
  std::size_t deterministic_failures = 0;
  bool frequency_ok = true;  // empirical <= bound + slack when the bound is below 1

  bool ok() const { return deterministic_failures == 0 && frequency_ok; }
};

QueReport run_que_experiment(const QueConfig& config);

}  // namespace quegraph

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

#include "quegraph/que.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <fmt/format.h>

#include "quegraph/error.hpp"

namespace quegraph {

namespace {

void require_length(const BasisFunction& phi, const TestFunction& f) {
  if (phi.values.size() != f.values.size()) {
    throw ConfigError(fmt::format("test function has {} values, basis function has {}", f.values.size(),
                                  phi.values.size()));
  }
}

bool excluded(const std::vector<std::size_t>& exclude, std::size_t i) {
  return std::find(exclude.begin(), exclude.end(), i) != exclude.end();
}

const Irrep& irrep_of(const BasisFunction& phi, const UnitaryDual& dual) {
  if (phi.provenance.irrep >= dual.irreps.size()) {
    throw ConfigError(fmt::format("basis function refers to irrep {} outside the dual", phi.provenance.irrep));
  }
  return dual.irreps[phi.provenance.irrep];
}

}  // namespace

std::string_view test_kind_name(TestKind kind) {
  switch (kind) {
    case TestKind::indicator: return "indicator";
    case TestKind::random_pm1: return "pm1";
    case TestKind::user: return "user";
  }
  return "?";
}

TestFunction make_test_function(RVector values, TestKind kind) {
  TestFunction f;
  f.mean = values.size() == 0 ? 0.0 : values.sum() / static_cast<double>(values.size());
  f.values = std::move(values);
  f.kind = kind;
  return f;
}

TestFunction random_indicator(std::size_t n, double density, RandomSource& rng) {
  if (!(density > 0.0 && density <= 1.0)) throw ConfigError("indicator density must lie in (0, 1]");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Fisher-Yates on our own generator keeps the draw portable across standard libraries.
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.index(i)]);
  const auto size = static_cast<std::size_t>(std::llround(density * static_cast<double>(n)));
  RVector values = RVector::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < size; ++i) values[static_cast<Eigen::Index>(order[i])] = 1.0;
  return make_test_function(std::move(values), TestKind::indicator);
}

TestFunction random_pm1(std::size_t n, RandomSource& rng) {
  RVector values(static_cast<Eigen::Index>(n));
  for (auto& x : values) x = (rng.bits() >> 63) != 0 ? 1.0 : -1.0;
  return make_test_function(std::move(values), TestKind::random_pm1);
}

double quantum_measure(const BasisFunction& phi, const TestFunction& f) {
  require_length(phi, f);
  return (f.values.array() * phi.values.cwiseAbs2().array()).sum();
}

double discrepancy(const BasisFunction& phi, const TestFunction& f) {
  return std::abs(quantum_measure(phi, f) - f.mean);
}

TestFunction zero_mean_shift(const TestFunction& f) {
  TestFunction out;
  out.values = f.values.array() - f.mean;
  out.mean = out.values.size() == 0 ? 0.0 : out.values.sum() / static_cast<double>(out.values.size());
  out.kind = TestKind::user;
  return out;
}

XYMatrices xy_vectors(const Irrep& irrep, const TestFunction& f, const CVector& v) {
  const std::size_t n = irrep.matrices.size();
  if (static_cast<std::size_t>(f.values.size()) != n) {
    throw ConfigError("test function length differs from the group order");
  }
  const double scale = f.values.size() == 0 ? 1.0 : std::max(1.0, f.values.cwiseAbs().maxCoeff());
  if (std::abs(f.values.mean()) > 1e-10 * scale) {
    throw ConfigError(fmt::format("xy_vectors needs a zero-mean function (mean {:.3e})", f.values.mean()));
  }
  const int d = irrep.dim;
  CMatrix p(d, static_cast<Eigen::Index>(n));
  for (std::size_t g = 0; g < n; ++g) p.col(static_cast<Eigen::Index>(g)) = irrep.matrices[g] * v;
  const double c = static_cast<double>(d) / static_cast<double>(n);
  CMatrix pf = p * f.values.cast<Complex>().asDiagonal();
  XYMatrices out;
  out.x = c * pf * p.adjoint();
  out.y = c * pf * p.transpose();
  return out;
}

DeterministicCheck deterministic_bound_check(const BasisFunction& phi, const TestFunction& f,
                                             const UnitaryDual& dual, const XYMatrices* xy) {
  require_length(phi, f);
  const TestFunction f0 = zero_mean_shift(f);
  DeterministicCheck check;
  check.lhs = std::abs((f0.values.array() * phi.values.cwiseAbs2().array()).sum());
  const BasisKind kind = phi.provenance.kind;
  if (kind == BasisKind::trivial) {
    check.rhs = 0;
    check.identity = true;
    check.ok = check.lhs <= 1e-8;
    return check;
  }
  const Irrep& irrep = irrep_of(phi, dual);
  XYMatrices local;
  if (xy == nullptr) {
    local = xy_vectors(irrep, f0, phi.v);
    xy = &local;
  }
  const CVector& w = phi.w;
  const double xw = (w.adjoint() * xy->x * w)(0, 0).real();
  switch (kind) {
    case BasisKind::type1:
    case BasisKind::type2: {
      const double yw = (w.adjoint() * xy->y * w.conjugate())(0, 0).real();
      check.rhs = std::abs(xw) + std::abs(yw);
      check.ok = check.lhs <= check.rhs + 1e-8;
      break;
    }
    case BasisKind::type3:
    case BasisKind::complex:
      check.rhs = std::abs(xw);
      check.identity = true;
      check.ok = check.lhs <= check.rhs + 1e-8 && std::abs(check.lhs - check.rhs) <= 1e-8;
      break;
    default: throw ConfigError("unknown basis function type");
  }
  return check;
}

double splitting_identity_error(const BasisFunction& phi, const UnitaryDual& dual) {
  const auto n = phi.values.size();
  if (phi.provenance.kind == BasisKind::trivial) {
    return (phi.values.cwiseAbs2().array() - 1.0 / static_cast<double>(n)).abs().maxCoeff();
  }
  const Irrep& irrep = irrep_of(phi, dual);
  const double c = static_cast<double>(irrep.dim) / static_cast<double>(n);
  double err = 0;
  for (Eigen::Index g = 0; g < n; ++g) {
    const Complex z = (phi.w.adjoint() * irrep.matrices[static_cast<std::size_t>(g)] * phi.v)(0, 0);
    double expected = c * std::norm(z);
    if (phi.provenance.kind == BasisKind::type1) expected += c * (z * z).real();
    if (phi.provenance.kind == BasisKind::type2) expected -= c * (z * z).real();
    err = std::max(err, std::abs(std::norm(phi.values[g]) - expected));
  }
  return err;
}

double failure_probability_bound(const std::vector<int>& dims, std::size_t trivial_index, double m,
                                 double t, const std::vector<std::size_t>& exclude) {
  double sum = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i == trivial_index || excluded(exclude, i)) continue;
    const double d = dims[i];
    sum += d * d * (6.0 * std::exp(-t * std::sqrt(d) / 64.0) + 2.0 * std::exp(-d / 12.0));
  }
  return 2.0 * m * sum;
}

double failure_probability_bound(const UnitaryDual& dual, double m, double t) {
  return failure_probability_bound(dual.dims(), dual.trivial_index, m, t);
}

std::optional<std::size_t> sign_irrep(const UnitaryDual& dual, const GroupTable& group) {
  if (group.spec().family != Family::sym || group.spec().parameter < 2) return std::nullopt;
  for (std::size_t i = 0; i < dual.irreps.size(); ++i) {
    const Irrep& irrep = dual.irreps[i];
    if (i == dual.trivial_index || irrep.dim != 1) continue;
    if (irrep.character.imag().cwiseAbs().maxCoeff() <= 1e-8) return i;
  }
  return std::nullopt;
}

double failure_probability_bound_without_sign(const UnitaryDual& dual, const GroupTable& group, double m,
                                              double t) {
  const auto sign = sign_irrep(dual, group);
  if (!sign) throw ConfigError("the sign-excluded bound needs a symmetric group sym:n with n >= 2");
  return failure_probability_bound(dual.dims(), dual.trivial_index, m, t, {*sign});
}

double failure_probability_floor(const std::vector<int>& dims, std::size_t trivial_index, double m) {
  double sum = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i == trivial_index) continue;
    const double d = dims[i];
    sum += d * d * 2.0 * std::exp(-d / 12.0);
  }
  return 2.0 * m * sum;
}

ChooseTResult closed_form_t(const UnitaryDual& dual, std::size_t group_order, double m, double epsilon) {
  ChooseTResult r;
  r.epsilon = epsilon;
  r.floor = failure_probability_floor(dual.dims(), dual.trivial_index, m);
  const double qr = quasirandomness(dual);
  const double log_g = std::log(static_cast<double>(group_order));
  r.t_closed_epsilon = 64.0 * (epsilon + 1.0) * log_g / std::sqrt(qr);
  r.t_closed_128 = 128.0 * log_g / std::sqrt(qr);
  r.bound_closed_epsilon = failure_probability_bound(dual, m, r.t_closed_epsilon);
  r.bound_closed_128 = failure_probability_bound(dual, m, r.t_closed_128);
  return r;
}

ChooseTResult choose_t(const UnitaryDual& dual, std::size_t group_order, double m, double target,
                       double epsilon) {
  if (!(target > 0.0 && target < 1.0)) throw ConfigError("target probability must lie in (0, 1)");
  if (!(m >= 1.0)) throw ConfigError("M must be at least 1");
  ChooseTResult r = closed_form_t(dual, group_order, m, epsilon);
  r.target = target;
  if (r.floor >= target) return r;  // achievable stays false
  auto bound = [&](double t) { return failure_probability_bound(dual, m, t); };
  double lo = 0.0, hi = 1.0;
  while (bound(hi) >= target) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > 1e-6 * hi) {
    const double mid = 0.5 * (lo + hi);
    (bound(mid) < target ? hi : lo) = mid;
  }
  r.achievable = true;
  r.t = hi;
  r.bound_at_t = bound(hi);
  return r;
}

int quasirandomness(const UnitaryDual& dual) {
  int best = 0;
  for (std::size_t i = 0; i < dual.irreps.size(); ++i) {
    if (i == dual.trivial_index) continue;
    if (best == 0 || dual.irreps[i].dim < best) best = dual.irreps[i].dim;
  }
  return best;
}

double witten_zeta_partial(const std::vector<int>& dims, double s, const std::vector<std::size_t>& exclude) {
  double sum = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (!excluded(exclude, i)) sum += std::pow(static_cast<double>(dims[i]), -s);
  }
  return sum;
}

double witten_zeta(const std::vector<int>& dims, double s) { return witten_zeta_partial(dims, s); }

void validate(const QueConfig& config) {
  if (config.group.empty()) throw ConfigError("missing group spec");
  if (config.gens.empty()) throw ConfigError("missing generators");
  if (config.m < 1) throw ConfigError("--m must be at least 1");
  if (config.resamples < 1) throw ConfigError("--resamples must be at least 1");
  if (config.t && config.target) throw ConfigError("--t and --target are mutually exclusive");
  if (!config.t && !config.target) throw ConfigError("one of --t or --target is required");
  if (config.t && !(*config.t > 0.0 && std::isfinite(*config.t))) throw ConfigError("--t must be positive");
  if (config.functions == TestKind::indicator && !(config.density > 0.0 && config.density <= 1.0)) {
    throw ConfigError("indicator density must lie in (0, 1]");
  }
  if (config.functions == TestKind::user) throw ConfigError("user test functions are not available here");
  if (!(config.epsilon > 0.0)) throw ConfigError("epsilon must be positive");
}

QueReport run_que_experiment(const QueConfig& config) {
  validate(config);
  const GroupTable group = build_group(parse_group_spec(config.group));
  const RandomSource root(config.seed);
  RandomSource dual_rng = root;
  const UnitaryDual dual = build_unitary_dual(group, dual_rng);

  QueReport report;
  report.config = config;
  report.order = group.order();
  report.dims = dual.dims();
  RandomSource gens_rng = root.substream("gens");
  report.gens = parse_generators(group, config.gens, gens_rng);

  const std::size_t n = group.order();
  RandomSource fn_rng = root.substream("functions");
  std::vector<TestFunction> tests;
  for (std::size_t a = 0; a < config.m; ++a) {
    tests.push_back(config.functions == TestKind::indicator ? random_indicator(n, config.density, fn_rng)
                                                            : random_pm1(n, fn_rng));
    report.test_norms.push_back(tests.back().l2_norm());
    report.test_sizes.push_back(config.functions == TestKind::indicator
                                    ? static_cast<std::size_t>(tests.back().values.sum())
                                    : 0);
  }

  const double m = static_cast<double>(config.m);
  if (config.t) {
    report.t = *config.t;
    report.t_source = "explicit";
    report.t_info = closed_form_t(dual, n, m, config.epsilon);
  } else {
    report.t_info = choose_t(dual, n, m, *config.target, config.epsilon);
    if (!report.t_info.achievable) {
      throw ConfigError(fmt::format("target {} is unachievable: the t-independent floor of the bound is {:.6g}",
                                    *config.target, report.t_info.floor));
    }
    report.t = report.t_info.t;
    report.t_source = "target";
  }
  report.failure_bound = failure_probability_bound(dual, m, report.t);
  report.vacuous = report.failure_bound >= 1.0;

  std::vector<TestFunction> shifted;
  for (const auto& f : tests) shifted.push_back(zero_mean_shift(f));
  const double sqrt_n = std::sqrt(static_cast<double>(n));

  std::vector<std::vector<QueRecord>> per_resample(config.resamples);
  const RandomSource basis_root = root.substream("basis");
  parallel_for(config.resamples, [&](std::size_t r) {
    const RandomEigenbasis basis = config.model == BasisModel::real
                                       ? sample_eigenbasis(group, dual, report.gens, basis_root.substream(r))
                                       : sample_complex_eigenbasis(group, dual, report.gens,
                                                                   basis_root.substream(r));
    auto& out = per_resample[r];
    out.reserve(basis.functions.size() * tests.size());
    for (std::size_t a = 0; a < tests.size(); ++a) {
      std::map<std::pair<std::size_t, int>, XYMatrices> cache;
      const double l2_rhs = report.t * report.test_norms[a] / sqrt_n;
      for (std::size_t b = 0; b < basis.functions.size(); ++b) {
        const BasisFunction& phi = basis.functions[b];
        const XYMatrices* xy = nullptr;
        if (phi.provenance.kind != BasisKind::trivial) {
          const auto key = std::make_pair(phi.provenance.irrep, phi.provenance.k);
          auto it = cache.find(key);
          if (it == cache.end()) {
            it = cache.emplace(key, xy_vectors(dual.irreps[phi.provenance.irrep], shifted[a], phi.v)).first;
          }
          xy = &it->second;
        }
        QueRecord rec;
        rec.resample = r;
        rec.function = b;
        rec.test = a;
        rec.provenance = phi.provenance;
        rec.eigenvalue = phi.eigenvalue;
        rec.measure = quantum_measure(phi, tests[a]);
        rec.discrepancy = std::abs(rec.measure - tests[a].mean);
        rec.l2_rhs = l2_rhs;
        rec.l2_ok = rec.discrepancy <= l2_rhs;
        const DeterministicCheck det = deterministic_bound_check(phi, tests[a], dual, xy);
        rec.det_lhs = det.lhs;
        rec.det_rhs = det.rhs;
        rec.det_ok = det.ok;
        out.push_back(rec);
      }
    }
  });

  for (auto& block : per_resample) {
    bool failed = false;
    for (const auto& rec : block) {
      report.max_discrepancy = std::max(report.max_discrepancy, rec.discrepancy);
      if (!rec.l2_ok) failed = true;
      if (!rec.det_ok) ++report.deterministic_failures;
    }
    if (failed) ++report.failed_resamples;
    report.records.insert(report.records.end(), block.begin(), block.end());
  }
  const double trials = static_cast<double>(config.resamples);
  const double p = static_cast<double>(report.failed_resamples) / trials;
  report.empirical_failure_frequency = p;
  if (!report.vacuous) {
    report.frequency_ok = p <= report.failure_bound + 3.0 * std::sqrt(p * (1.0 - p) / trials) + 1.0 / trials;
  }
  return report;
}

}  // namespace quegraph

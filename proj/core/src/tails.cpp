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

#include "quegraph/tails.hpp"

#include <cmath>
#include <functional>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "quegraph/error.hpp"

namespace quegraph {

namespace {

using Draw = std::function<void(RandomSource&, double*)>;

// Trial-major samples: out[i * series + s].
std::vector<double> sample(std::size_t trials, std::size_t series, const RandomSource& rng, const Draw& draw) {
  std::vector<double> out(trials * series);
  const std::size_t blocks = (trials + kTailBlock - 1) / kTailBlock;
  parallel_for(blocks, [&](std::size_t b) {
    RandomSource local = rng.substream(b);
    const std::size_t end = std::min(trials, (b + 1) * kTailBlock);
    for (std::size_t i = b * kTailBlock; i < end; ++i) draw(local, &out[i * series]);
  });
  return out;
}

double upper_tail(const std::vector<double>& values, std::size_t series, std::size_t s, double cut) {
  const std::size_t trials = values.size() / series;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    const double x = values[i * series + s];
    if (x >= cut && x > 0.0) ++hits;  // a form that vanishes identically has no tail
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

void validate(const TailCheckConfig& cfg, bool needs_grid) {
  if (cfg.trials < 1000) throw ConfigError(fmt::format("tail checks need at least 1000 trials, got {}", cfg.trials));
  if (needs_grid && cfg.grid.empty()) throw ConfigError("tail check grid is empty");
  for (double t : cfg.grid) {
    if (!(t > 0.0) || !std::isfinite(t)) throw ConfigError(fmt::format("grid value {} is not positive", t));
  }
}

Complex sesquilinear(const CVector& x, const CMatrix& m) { return (x.adjoint() * m * x)(0, 0); }
Complex bilinear_conj(const CVector& x, const CMatrix& m) { return (x.adjoint() * m * x.conjugate())(0, 0); }

}  // namespace

bool TailCheckResult::passed() const {
  for (const auto& row : rows) {
    if (!row.pass) return false;
  }
  return !rows.empty();
}

double tail_slack(double p, std::size_t trials) {
  const double n = static_cast<double>(trials);
  return 3.0 * std::sqrt(p * (1.0 - p) / n) + 1.0 / n;
}

void judge(TailRow& row, std::size_t trials) {
  row.slack = tail_slack(row.empirical, trials);
  row.vacuous = row.bound >= 1.0;
  row.pass = row.empirical <= row.bound + row.slack || row.vacuous;
}

WeightVector make_weight_vector(RVector a) {
  WeightVector w;
  w.sum_sq = a.squaredNorm();
  if (!(w.sum_sq > 0.0)) throw ConfigError("weight vector must be nonzero (C = 0)");
  if (std::abs(a.sum()) > 1e-12 * std::max(1.0, a.cwiseAbs().sum())) {
    throw ConfigError(fmt::format("weights must sum to zero (sum = {:.3e})", a.sum()));
  }
  w.max_abs = a.cwiseAbs().maxCoeff();
  w.a = std::move(a);
  return w;
}

double chi2_lower_tail_bound(int n) { return std::exp(-static_cast<double>(n) / 12.0); }

double weighted_chi2_bound(const WeightVector& w, int df, double t) {
  const double a = w.max_abs, c = w.sum_sq;
  if (df == 1) return 2.0 * std::pow(a * t / c + 1.0, c / (2.0 * a * a)) * std::exp(-t / (2.0 * a));
  if (df == 2) return 2.0 * std::pow(a * t / (2.0 * c) + 1.0, c / (a * a)) * std::exp(-t / (2.0 * a));
  throw ConfigError(fmt::format("df must be 1 or 2, got {}", df));
}

double matrix_coeff_bound(int n, double c, double t, bool orthogonal) {
  const double nn = n;
  return 6.0 * std::exp(-nn * t / (32.0 * std::sqrt(c))) + 2.0 * std::exp(-nn / (orthogonal ? 12.0 : 6.0));
}

double prop_bound(int dim, double t, bool orthogonal) {
  const double d = dim;
  return 6.0 * std::exp(-t * std::sqrt(d) / 64.0) + 2.0 * std::exp(-d / (orthogonal ? 12.0 : 6.0));
}

TailCheckResult chi2_lower_tail_check(int n, const TailCheckConfig& cfg) {
  if (n < 1) throw ConfigError("N must be at least 1");
  validate(cfg, false);
  const auto values = sample(cfg.trials, 1, cfg.rng, [n](RandomSource& rng, double* out) {
    double sum = 0;
    for (int i = 0; i < n; ++i) {
      const double z = rng.normal();
      sum += z * z;
    }
    out[0] = sum;
  });
  TailCheckResult result;
  result.lemma = "5.1";
  result.parameters = fmt::format("N={}", n);
  result.trials = cfg.trials;
  TailRow row;
  row.threshold = row.event = n / 2.0;
  std::size_t hits = 0;
  for (double x : values) {
    if (x <= row.event) ++hits;
  }
  row.empirical = static_cast<double>(hits) / static_cast<double>(cfg.trials);
  row.bound = chi2_lower_tail_bound(n);
  judge(row, cfg.trials);
  result.rows.push_back(row);
  return result;
}

std::vector<double> sample_weighted_chi2(const RVector& a, int df, std::size_t trials, const RandomSource& rng) {
  if (df != 1 && df != 2) throw ConfigError(fmt::format("df must be 1 or 2, got {}", df));
  return sample(trials, 1, rng, [&a, df](RandomSource& r, double* out) {
    double sum = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      double x = 0;
      for (int k = 0; k < df; ++k) {
        const double z = r.normal();
        x += z * z;
      }
      sum += a[i] * x;
    }
    out[0] = std::abs(sum);
  });
}

std::vector<double> sample_complex_square_form(const RVector& lambda, std::size_t trials,
                                               const RandomSource& rng) {
  return sample(trials, 1, rng, [&lambda](RandomSource& r, double* out) {
    double sum = 0;
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
      const Complex zeta(r.normal(), r.normal());
      sum += lambda[i] * (zeta * zeta).real();
    }
    out[0] = std::abs(sum);
  });
}

TailCheckResult weighted_chi2_tail_check(const WeightVector& w, int df, const TailCheckConfig& cfg) {
  validate(cfg, true);
  const auto values = sample_weighted_chi2(w.a, df, cfg.trials, cfg.rng);
  TailCheckResult result;
  result.lemma = "5.2";
  result.parameters = fmt::format("df={};a=[{}]", df, fmt::join(w.a, " "));
  result.trials = cfg.trials;
  for (double t : cfg.grid) {
    TailRow row;
    row.threshold = row.event = t;
    row.empirical = upper_tail(values, 1, 0, t);
    row.bound = weighted_chi2_bound(w, df, t);
    judge(row, cfg.trials);
    result.rows.push_back(row);
  }
  return result;
}

std::string_view coeff_kind_name(CoeffKind kind) {
  switch (kind) {
    case CoeffKind::unitary_mixed: return "unitary_mixed";
    case CoeffKind::unitary_sym: return "unitary_sym";
    case CoeffKind::orthogonal: return "orthogonal";
  }
  return "?";
}

CoeffKind parse_coeff_kind(std::string_view text) {
  if (text == "unitary_mixed") return CoeffKind::unitary_mixed;
  if (text == "unitary_sym") return CoeffKind::unitary_sym;
  if (text == "orthogonal") return CoeffKind::orthogonal;
  throw ConfigError(fmt::format("unknown coefficient kind '{}'", text));
}

double validate_coefficients(int n, const CMatrix& coeff, CoeffKind kind) {
  if (n < 1 || coeff.rows() != n || coeff.cols() != n) {
    throw ConfigError(fmt::format("coefficient matrix must be {0} x {0}", n));
  }
  if (kind != CoeffKind::unitary_sym && std::abs(coeff.trace()) > 1e-10) {
    throw ConfigError(fmt::format("coefficients of kind {} need zero trace", coeff_kind_name(kind)));
  }
  if (kind == CoeffKind::orthogonal && coeff.imag().cwiseAbs().maxCoeff() > 1e-12) {
    throw ConfigError("orthogonal kind needs real coefficients");
  }
  return coeff.squaredNorm();
}

std::vector<double> sample_matrix_coeff(int n, const CMatrix& coeff, CoeffKind kind, int k, std::size_t trials,
                                        const RandomSource& rng) {
  validate_coefficients(n, coeff, kind);
  if (k < 0 || k >= n) throw ConfigError(fmt::format("column index {} outside 0..{}", k, n - 1));
  return sample(trials, 1, rng, [&, n, k, kind](RandomSource& r, double* out) {
    if (kind == CoeffKind::orthogonal) {
      const RMatrix o = haar_orthogonal(n, r);
      const CVector x = o.col(k).cast<Complex>();
      out[0] = std::abs(sesquilinear(x, coeff));
    } else {
      const CMatrix u = haar_unitary(n, r);
      const CVector x = u.col(k);
      out[0] = kind == CoeffKind::unitary_mixed ? std::abs(sesquilinear(x, coeff))
                                                : std::abs(bilinear_conj(x, coeff).real());
    }
  });
}

TailCheckResult matrix_coeff_tail_check(int n, const CMatrix& coeff, CoeffKind kind, const TailCheckConfig& cfg,
                                        int k) {
  validate(cfg, true);
  const double c = validate_coefficients(n, coeff, kind);
  const auto values = sample_matrix_coeff(n, coeff, kind, k, cfg.trials, cfg.rng);
  TailCheckResult result;
  result.lemma = kind == CoeffKind::orthogonal ? "5.4" : "5.3";
  result.parameters = fmt::format("n={};kind={};k={};C={:.17g}", n, coeff_kind_name(kind), k, c);
  result.trials = cfg.trials;
  for (double t : cfg.grid) {
    TailRow row;
    row.threshold = row.event = t;
    row.empirical = upper_tail(values, 1, 0, t);
    // C = 0 makes the form vanish identically; the bound degenerates to its constant term.
    row.bound = c > 0 ? matrix_coeff_bound(n, c, t, kind == CoeffKind::orthogonal)
                      : 2.0 * std::exp(-static_cast<double>(n) / (kind == CoeffKind::orthogonal ? 12.0 : 6.0));
    judge(row, cfg.trials);
    result.rows.push_back(row);
  }
  return result;
}

TailCheckResult prop_tail_check(const Irrep& irrep, const TestFunction& f, const CVector& v, PropCase c,
                                const TailCheckConfig& cfg, int j) {
  validate(cfg, true);
  const int d = irrep.dim;
  if (v.size() != d || std::abs(v.norm() - 1.0) > 1e-10) throw ConfigError("v must be a unit vector in V");
  if (j < 0 || j >= d) throw ConfigError(fmt::format("column index {} outside 0..{}", j, d - 1));
  const bool orthogonal = c == PropCase::orthogonal;
  CMatrix basis;
  if (orthogonal) {
    if (irrep.fs_type != FsType::real || !irrep.real_basis || !irrep.j_matrix) {
      throw ConfigError("orthogonal case needs a real irrep with its real structure");
    }
    if ((*irrep.j_matrix * v.conjugate() - v).norm() > 1e-8) throw ConfigError("orthogonal case needs v in V_J");
    basis = *irrep.real_basis;
  }
  const XYMatrices xy = xy_vectors(irrep, f, v);
  const std::size_t n = irrep.matrices.size();
  const double scale = f.l2_norm() / (2.0 * std::sqrt(static_cast<double>(n)));
  const std::size_t series = orthogonal ? 1 : 2;
  const auto values = sample(cfg.trials, series, cfg.rng, [&](RandomSource& r, double* out) {
    if (orthogonal) {
      const RMatrix o = haar_orthogonal(d, r);
      const CVector w = basis * o.col(j).cast<Complex>();
      out[0] = std::abs(sesquilinear(w, xy.x).real());
    } else {
      const CMatrix u = haar_unitary(d, r);
      const CVector w = u.col(j);
      out[0] = std::abs(sesquilinear(w, xy.x).real());
      out[1] = std::abs(bilinear_conj(w, xy.y).real());
    }
  });
  TailCheckResult result;
  result.lemma = orthogonal ? "6.3" : "6.2";
  result.parameters = fmt::format("dim={};fs={};case={};j={};norm_f={:.17g}", d, fs_type_name(irrep.fs_type),
                                  orthogonal ? "orthogonal" : "unitary", j, f.l2_norm());
  result.trials = cfg.trials;
  for (double t : cfg.grid) {
    for (std::size_t s = 0; s < series; ++s) {
      TailRow row;
      row.series = s == 0 ? "x" : "y";
      row.threshold = t;
      row.event = t * scale;
      row.empirical = upper_tail(values, series, s, row.event);
      row.bound = prop_bound(d, t, orthogonal);
      judge(row, cfg.trials);
      result.rows.push_back(row);
    }
  }
  return result;
}

}  // namespace quegraph

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

#include <cstddef>
#include <string>
#include <vector>

#include "quegraph/numkit.hpp"
#include "quegraph/que.hpp"
#include "quegraph/repdec.hpp"

namespace quegraph {

// Trials run in blocks of this many draws, block b drawing from
// rng.substream(b); counts are therefore independent of the thread count.
inline constexpr std::size_t kTailBlock = 1000;

struct TailCheckConfig {
  std::size_t trials = 100000;
  std::vector<double> grid;  // t or T values
  RandomSource rng{0};
};

struct TailRow {
  std::string series;  // "", or "x" / "y" for the propositions
  double threshold = 0;  // grid value (t or T)
  double event = 0;      // actual cut-off compared against
  double empirical = 0;
  double bound = 0;
  double slack = 0;
  bool pass = false;
  bool vacuous = false;  // bound >= 1
};

struct TailCheckResult {
  std::string lemma;
  std::string parameters;
  std::size_t trials = 0;
  std::vector<TailRow> rows;

  bool passed() const;
};

// 3 sqrt(p(1-p)/trials) + 1/trials.
double tail_slack(double p, std::size_t trials);
// Fills slack, pass and vacuous from empirical and bound.
void judge(TailRow& row, std::size_t trials);

struct WeightVector {
  RVector a;
  double max_abs = 0;  // A
  double sum_sq = 0;   // C
};

// Throws ConfigError if C = 0 or the weights do not sum to zero within 1e-12.
WeightVector make_weight_vector(RVector a);

double chi2_lower_tail_bound(int n);
double weighted_chi2_bound(const WeightVector& w, int df, double t);
double matrix_coeff_bound(int n, double c, double t, bool orthogonal);
double prop_bound(int dim, double t, bool orthogonal);

TailCheckResult chi2_lower_tail_check(int n, const TailCheckConfig& cfg);
TailCheckResult weighted_chi2_tail_check(const WeightVector& w, int df, const TailCheckConfig& cfg);

enum class CoeffKind { unitary_mixed, unitary_sym, orthogonal };
std::string_view coeff_kind_name(CoeffKind kind);
CoeffKind parse_coeff_kind(std::string_view text);

// Checks the coefficient constraints (square n x n, zero trace for the mixed
// and orthogonal kinds, real entries for the orthogonal kind) and returns C.
double validate_coefficients(int n, const CMatrix& coeff, CoeffKind kind);

TailCheckResult matrix_coeff_tail_check(int n, const CMatrix& coeff, CoeffKind kind,
                                        const TailCheckConfig& cfg, int k = 0);

enum class PropCase { unitary, orthogonal };

// Thresholds t ||f|| / (2 sqrt|G|). The unitary case reports x and y rows;
// the orthogonal case needs a real irrep and draws o in O(V_J) with v in V_J.
TailCheckResult prop_tail_check(const Irrep& irrep, const TestFunction& f, const CVector& v, PropCase c,
                                const TailCheckConfig& cfg, int j = 0);

// Raw samplers used by the distributional cross-checks.
std::vector<double> sample_weighted_chi2(const RVector& a, int df, std::size_t trials, const RandomSource& rng);
// |sum_i lambda_i Re(zeta_i^2)| with zeta_i having independent N(0,1) real and imaginary parts.
std::vector<double> sample_complex_square_form(const RVector& lambda, std::size_t trials,
                                               const RandomSource& rng);
std::vector<double> sample_matrix_coeff(int n, const CMatrix& coeff, CoeffKind kind, int k,
                                        std::size_t trials, const RandomSource& rng);

}  // namespace quegraph

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

#include <gtest/gtest.h>

#include <atomic>
#include <cmath>

#include "oracles.hpp"
#include "quegraph/error.hpp"
#include "quegraph/numkit.hpp"

using namespace quegraph;

namespace {

CMatrix random_hermitian(int n, RandomSource& rng) {
  CMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) m(i, j) = rng.complex_normal();
  }
  return 0.5 * (m + m.adjoint());
}

}  // namespace

TEST(RandomSource, Reproducible) {
  RandomSource a(42, 3), b(42, 3), c(42, 4);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.bits();
    EXPECT_EQ(x, b.bits());
    differs = differs || x != c.bits();
  }
  EXPECT_TRUE(differs);
  EXPECT_EQ(RandomSource(1).substream("gens").bits(), RandomSource(1).substream("gens").bits());
  EXPECT_NE(RandomSource(1).substream("gens").bits(), RandomSource(1).substream("basis").bits());
  EXPECT_NE(RandomSource(1).substream(0).bits(), RandomSource(1).substream(1).bits());
}

TEST(RandomSource, ComplexNormalHasUnitVariance) {
  RandomSource rng(7);
  double sum = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) sum += std::norm(rng.complex_normal());
  EXPECT_NEAR(sum / n, 1.0, 0.02);
}

TEST(HermitianEig, SmallClosedForms) {
  CMatrix d = CMatrix::Zero(3, 3);
  d(0, 0) = 3;
  d(1, 1) = 1;
  d(2, 2) = 2;
  const auto e = hermitian_eig(d);
  EXPECT_NEAR(e.eigenvalues[0], 1, 1e-14);
  EXPECT_NEAR(e.eigenvalues[1], 2, 1e-14);
  EXPECT_NEAR(e.eigenvalues[2], 3, 1e-14);
  EXPECT_NEAR(std::abs(e.eigenvectors(1, 0)), 1, 1e-14);
  EXPECT_NEAR(std::abs(e.eigenvectors(2, 1)), 1, 1e-14);
  EXPECT_NEAR(std::abs(e.eigenvectors(0, 2)), 1, 1e-14);
  CMatrix x(2, 2);
  x << 0, 1, 1, 0;
  const auto f = hermitian_eig(x);
  EXPECT_NEAR(f.eigenvalues[0], -1, 1e-14);
  EXPECT_NEAR(f.eigenvalues[1], 1, 1e-14);
}

TEST(HermitianEig, RejectsBadInput) {
  EXPECT_THROW(hermitian_eig(CMatrix(2, 3)), ConfigError);
  CMatrix m(2, 2);
  m << 0, 1, 0, 0;
  EXPECT_THROW(hermitian_eig(m), ConfigError);
}

TEST(HermitianEig, ResidualsAndJacobiOracle) {
  RandomSource rng(3);
  for (int n : {5, 50}) {
    const CMatrix m = random_hermitian(n, rng);
    const auto e = hermitian_eig(m);
    const double fro = m.norm();
    for (int i = 0; i < n; ++i) {
      EXPECT_LE((m * e.eigenvectors.col(i) - e.eigenvalues[i] * e.eigenvectors.col(i)).norm(), 1e-10 * fro);
      if (i > 0) EXPECT_LE(e.eigenvalues[i - 1], e.eigenvalues[i]);
    }
    EXPECT_LE((e.eigenvectors.adjoint() * e.eigenvectors - CMatrix::Identity(n, n)).norm(), 1e-10);
    const auto ref = oracle::jacobi_eigenvalues(m);
    for (int i = 0; i < n; ++i) EXPECT_NEAR(e.eigenvalues[i], ref[static_cast<std::size_t>(i)], 1e-10 * fro);
  }
}

TEST(HermitianEig, Reconstruction) {
  RandomSource rng(4);
  for (int n : {20, 200}) {
    const CMatrix m = random_hermitian(n, rng);
    const auto e = hermitian_eig(m);
    const CMatrix back = e.eigenvectors * e.eigenvalues.cast<Complex>().asDiagonal() * e.eigenvectors.adjoint();
    EXPECT_LE((back - m).norm(), 1e-9 * m.norm());
  }
}

TEST(HermitianEig, Deterministic) {
  RandomSource rng(5);
  const CMatrix m = random_hermitian(30, rng);
  const auto a = hermitian_eig(m), b = hermitian_eig(m);
  EXPECT_EQ(a.eigenvalues, b.eigenvalues);
  EXPECT_EQ(a.eigenvectors, b.eigenvectors);
}

TEST(SymmetricEig, MatchesJacobi) {
  RandomSource rng(6);
  RMatrix m(40, 40);
  for (auto& x : m.reshaped()) x = rng.normal();
  m = 0.5 * (m + m.transpose()).eval();
  const auto e = symmetric_eig(m);
  const auto ref = oracle::jacobi_eigenvalues(Eigen::MatrixXd(m));
  for (int i = 0; i < 40; ++i) EXPECT_NEAR(e.eigenvalues[i], ref[static_cast<std::size_t>(i)], 1e-10 * m.norm());
}

TEST(Haar, UnitaryAndOrthogonal) {
  RandomSource rng(8);
  for (int n : {1, 2, 5, 12}) {
    const CMatrix u = haar_unitary(n, rng);
    EXPECT_LE((u.adjoint() * u - CMatrix::Identity(n, n)).norm(), 1e-12 * n);
    const RMatrix o = haar_orthogonal(n, rng);
    EXPECT_LE((o.transpose() * o - RMatrix::Identity(n, n)).norm(), 1e-12 * n);
  }
  RandomSource a(1), b(1);
  EXPECT_EQ(haar_unitary(4, a), haar_unitary(4, b));
}

TEST(Haar, PhaseAndSignStatistics) {
  RandomSource rng(9);
  const int draws = 100000;
  Complex mean = 0;
  int plus = 0;
  double u11 = 0, o11 = 0;
  for (int i = 0; i < draws; ++i) mean += haar_unitary(1, rng)(0, 0);
  for (int i = 0; i < draws; ++i) plus += haar_orthogonal(1, rng)(0, 0) > 0 ? 1 : 0;
  std::vector<double> a, b;
  for (int i = 0; i < draws; ++i) u11 += std::norm(haar_unitary(8, rng)(0, 0));
  for (int i = 0; i < draws; ++i) o11 += std::pow(haar_orthogonal(6, rng)(0, 0), 2);
  EXPECT_LE(std::abs(mean / static_cast<double>(draws)), 0.02);
  EXPECT_NEAR(plus / static_cast<double>(draws), 0.5, 0.01);
  // |U11|^2 ~ Beta(1, 7): variance 7 / (64 * 9). O11^2 ~ Beta(1/2, 5/2): variance 2 * 5 / (36 * 8).
  EXPECT_NEAR(u11 / draws, 1.0 / 8.0, 3.0 * std::sqrt(7.0 / (64.0 * 9.0) / draws));
  EXPECT_NEAR(o11 / draws, 1.0 / 6.0, 3.0 * std::sqrt(10.0 / (36.0 * 8.0) / draws));
}

TEST(Haar, LeftInvarianceKs) {
  RandomSource rng(10);
  RandomSource wrng(99);
  const CMatrix w = haar_unitary(4, wrng);
  std::vector<double> plain, rotated;
  for (int i = 0; i < 10000; ++i) plain.push_back(std::norm(haar_unitary(4, rng)(0, 0)));
  for (int i = 0; i < 10000; ++i) rotated.push_back(std::norm((w * haar_unitary(4, rng))(0, 0)));
  EXPECT_LT(ks_statistic(plain, rotated), ks_critical_value(10000, 10000, 0.01));
}

TEST(Ks, Basics) {
  EXPECT_DOUBLE_EQ(ks_statistic({1, 2, 3}, {1, 2, 3}), 0.0);
  EXPECT_DOUBLE_EQ(ks_statistic({0, 0}, {1, 1}), 1.0);
  EXPECT_NEAR(ks_critical_value(100, 100, 0.05), 1.358 * std::sqrt(0.02), 1e-3);
  RVector a(3), b(3);
  a << 3, 1, 2;
  b << 1, 2, 3.5;
  EXPECT_DOUBLE_EQ(sorted_max_distance(a, b), 0.5);
  EXPECT_TRUE(std::isinf(sorted_max_distance(a, RVector(2))));
}

TEST(ParallelFor, CoversRangeAndPropagates) {
  set_thread_count(4);
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) EXPECT_EQ(h, 1);
  EXPECT_THROW(parallel_for(10, [](std::size_t i) {
                 if (i == 3) throw NumericalError("boom");
               }),
               NumericalError);
  set_thread_count(0);
}

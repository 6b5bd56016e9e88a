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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string_view>

#include <Eigen/Dense>

namespace quegraph {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

// Seeded pseudo-random stream. Identical (seed, stream) pairs replay
// identical draw sequences; substreams are derived by hashing, so a child
// stream never depends on how many draws the parent has made.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  RandomSource substream(std::uint64_t index) const;
  RandomSource substream(std::string_view label) const;

  std::uint64_t bits() { return engine_(); }
  double uniform();                 // [0, 1)
  std::size_t index(std::size_t n); // uniform in [0, n)
  double normal();                  // N(0, 1)
  Complex complex_normal();         // E|z|^2 = 1, independent real/imag parts

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

struct SelfAdjointEigen {
  RVector eigenvalues;   // ascending
  CMatrix eigenvectors;  // columns, unitary
};

struct SymmetricEigen {
  RVector eigenvalues;   // ascending
  RMatrix eigenvectors;  // columns, orthogonal
};

// Eigendecomposition of a self-adjoint matrix. Throws ConfigError if `m` is
// not square or deviates from self-adjointness by more than tol * ||m||_F.
SelfAdjointEigen hermitian_eig(const CMatrix& m, double tol = 1e-10);
SymmetricEigen symmetric_eig(const RMatrix& m, double tol = 1e-10);

// Haar-distributed samples obtained from Gaussian matrices by Householder QR
// with the diagonal of R rotated onto the positive reals.
CMatrix haar_unitary(int n, RandomSource& rng);
RMatrix haar_orthogonal(int n, RandomSource& rng);

// Deterministic undirected matching distance between two multisets of reals:
// both are sorted and compared index by index (infinity if sizes differ).
double sorted_max_distance(RVector a, RVector b);

// Two-sample Kolmogorov-Smirnov statistic.
double ks_statistic(std::vector<double> a, std::vector<double> b);
// Asymptotic two-sample critical value at significance `alpha`.
double ks_critical_value(std::size_t n, std::size_t m, double alpha);

// Number of worker threads used by parallel loops (0 = hardware concurrency).
void set_thread_count(unsigned threads);
unsigned thread_count();

// Runs body(i) for i in [0, n) across worker threads. Callers must make each
// iteration independent of scheduling; results land in caller-owned slots.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace quegraph

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

#include "quegraph/numkit.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include <fmt/format.h>

#include "quegraph/error.hpp"

namespace quegraph {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

std::atomic<unsigned> g_threads{0};

// Eigen's tridiagonal QR occasionally stalls on exactly degenerate spectra
// (typical for group-structured matrices). Retrying on a rescaled copy, then
// on the index-reversed copy, is deterministic and has always converged.
template <typename Matrix, typename Result>
Result robust_eig(const Matrix& sym, const char* what) {
  using Solver = Eigen::SelfAdjointEigenSolver<Matrix>;
  Solver solver(sym);
  if (solver.info() == Eigen::Success) return {solver.eigenvalues(), solver.eigenvectors()};
  const double scale = sym.norm();
  if (scale > 0) {
    solver.compute(sym / scale);
    if (solver.info() == Eigen::Success) return {solver.eigenvalues() * scale, solver.eigenvectors()};
  }
  const Matrix reversed = sym.reverse();
  solver.compute(reversed);
  if (solver.info() == Eigen::Success) {
    Matrix vectors = solver.eigenvectors().colwise().reverse();
    return {solver.eigenvalues(), std::move(vectors)};
  }
  throw NumericalError(fmt::format("{} eigensolver did not converge", what));
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(make_engine(seed, stream)) {}

RandomSource RandomSource::substream(std::uint64_t index) const {
  return RandomSource(seed_, splitmix64(stream_ ^ splitmix64(index ^ 0x6a09e667f3bcc909ULL)));
}

RandomSource RandomSource::substream(std::string_view label) const {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return substream(h);
}

double RandomSource::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t RandomSource::index(std::size_t n) {
  std::uniform_int_distribution<std::size_t> dist(0, n - 1);
  return dist(engine_);
}

double RandomSource::normal() { return normal_(engine_); }

Complex RandomSource::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * M_SQRT1_2, im * M_SQRT1_2};
}

SelfAdjointEigen hermitian_eig(const CMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ConfigError(fmt::format("hermitian_eig needs a square matrix, got {}x{}", m.rows(), m.cols()));
  }
  const double norm = m.norm();
  const double asym = (m - m.adjoint()).norm();
  if (asym > tol * std::max(norm, 1.0)) {
    throw ConfigError(fmt::format("matrix is not self-adjoint: ||M - M*||_F = {:.3e}, ||M||_F = {:.3e}",
                                  asym, norm));
  }
  const CMatrix sym = 0.5 * (m + m.adjoint());
  return robust_eig<CMatrix, SelfAdjointEigen>(sym, "self-adjoint");
}

SymmetricEigen symmetric_eig(const RMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ConfigError(fmt::format("symmetric_eig needs a square matrix, got {}x{}", m.rows(), m.cols()));
  }
  const double norm = m.norm();
  const double asym = (m - m.transpose()).norm();
  if (asym > tol * std::max(norm, 1.0)) {
    throw ConfigError(fmt::format("matrix is not symmetric: ||M - M^T||_F = {:.3e}", asym));
  }
  const RMatrix sym = 0.5 * (m + m.transpose());
  return robust_eig<RMatrix, SymmetricEigen>(sym, "symmetric");
}

CMatrix haar_unitary(int n, RandomSource& rng) {
  if (n < 1) throw ConfigError("haar_unitary needs n >= 1");
  CMatrix z(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) z(i, j) = rng.complex_normal();
  }
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const auto& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0) q.col(j) *= d / mag;
  }
  return q;
}

RMatrix haar_orthogonal(int n, RandomSource& rng) {
  if (n < 1) throw ConfigError("haar_orthogonal needs n >= 1");
  RMatrix z(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) z(i, j) = rng.normal();
  }
  Eigen::HouseholderQR<RMatrix> qr(z);
  RMatrix q = qr.householderQ() * RMatrix::Identity(n, n);
  const auto& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    if (r(j, j) < 0) q.col(j) *= -1.0;
  }
  return q;
}

double sorted_max_distance(RVector a, RVector b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

double ks_statistic(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

double ks_critical_value(std::size_t n, std::size_t m, double alpha) {
  const double c = std::sqrt(-0.5 * std::log(alpha / 2.0));
  const double nn = static_cast<double>(n), mm = static_cast<double>(m);
  return c * std::sqrt((nn + mm) / (nn * mm));
}

void set_thread_count(unsigned threads) { g_threads.store(threads); }

unsigned thread_count() {
  const unsigned t = g_threads.load();
  if (t != 0) return t;
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(thread_count(), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        if (failed.load()) return;
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace quegraph

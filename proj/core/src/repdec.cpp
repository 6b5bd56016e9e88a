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

#include "quegraph/repdec.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "quegraph/error.hpp"

namespace quegraph {

namespace {

// Rows of `basis` permuted so that row x holds the values at x*g: the matrix
// of R_g applied to each column.
CMatrix right_translate(const CMatrix& basis, const GroupTable& group, Element g) {
  const auto n = basis.rows();
  CMatrix out(n, basis.cols());
  for (Eigen::Index x = 0; x < n; ++x) {
    out.row(x) = basis.row(group.mul(static_cast<Element>(x), g));
  }
  return out;
}

double max_abs(const CVector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

// Sort key: dimension first, then characters with larger real parts first.
bool irrep_less(const Irrep& a, const Irrep& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  auto rounded = [](double x) { return std::llround(x * 1e6); };
  for (Eigen::Index c = 0; c < a.character.size(); ++c) {
    const auto ra = rounded(a.character[c].real()), rb = rounded(b.character[c].real());
    if (ra != rb) return ra > rb;
  }
  for (Eigen::Index c = 0; c < a.character.size(); ++c) {
    const auto ia = rounded(a.character[c].imag()), ib = rounded(b.character[c].imag());
    if (ia != ib) return ia > ib;
  }
  return false;
}

bool is_trivial(const Irrep& irrep) {
  if (irrep.dim != 1) return false;
  return (irrep.character.array() - Complex(1.0, 0.0)).abs().maxCoeff() < 1e-8;
}

// Phase rotation making the largest entry of w real and positive. Any
// e^{i theta} W defines an equally valid conjugate-linear intertwiner.
CMatrix normalise_phase(const CMatrix& w) {
  Eigen::Index bi = 0, bj = 0;
  double best = -1.0;
  for (Eigen::Index j = 0; j < w.cols(); ++j) {
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
      const double mag = std::abs(w(i, j));
      if (mag > best * (1.0 + 1e-9) + 1e-12) {
        best = mag;
        bi = i;
        bj = j;
      }
    }
  }
  const Complex phase = std::conj(w(bi, bj)) / std::abs(w(bi, bj));
  return w * phase;
}

}  // namespace

std::string_view fs_type_name(FsType type) {
  switch (type) {
    case FsType::complex: return "complex";
    case FsType::real: return "real";
    case FsType::quaternionic: return "quaternionic";
  }
  return "?";
}

std::vector<int> UnitaryDual::dims() const {
  std::vector<int> out;
  out.reserve(irreps.size());
  for (const auto& irrep : irreps) out.push_back(irrep.dim);
  return out;
}

CVector class_character(const std::vector<CMatrix>& matrices, const GroupTable& group) {
  CVector chi(static_cast<Eigen::Index>(group.num_classes()));
  for (std::size_t c = 0; c < group.num_classes(); ++c) {
    chi[static_cast<Eigen::Index>(c)] = matrices[group.class_representative(c)].trace();
  }
  return chi;
}

UnitaryDual split_regular_representation(const GroupTable& group, RandomSource& rng,
                                         const SplitOptions& options) {
  const std::size_t n = group.order();
  const auto ni = static_cast<Eigen::Index>(n);
  const std::size_t num_classes = group.num_classes();
  std::string last_failure = "no attempt made";

  for (int attempt = 0; attempt <= options.max_retries; ++attempt) {
    // Self-adjoint element sum_g c_g L_g of the commutant: c_{g^-1} = conj(c_g).
    std::vector<Complex> coeff(n);
    for (Element g = 0; g < n; ++g) {
      const Element gi = group.inv(g);
      if (gi == g) {
        coeff[g] = rng.normal();
      } else if (g < gi) {
        coeff[g] = rng.complex_normal();
        coeff[gi] = std::conj(coeff[g]);
      }
    }
    CMatrix h(ni, ni);
    for (Eigen::Index x = 0; x < ni; ++x) {
      for (Eigen::Index y = 0; y < ni; ++y) {
        h(x, y) = coeff[group.mul(static_cast<Element>(x), group.inv(static_cast<Element>(y)))];
      }
    }
    const SelfAdjointEigen eig = hermitian_eig(h);
    const double hnorm = std::max(std::abs(eig.eigenvalues[0]), std::abs(eig.eigenvalues[ni - 1]));
    const double gap = options.cluster_gap * hnorm;

    std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters;  // (start, size)
    Eigen::Index start = 0;
    for (Eigen::Index i = 1; i <= ni; ++i) {
      if (i == ni || eig.eigenvalues[i] - eig.eigenvalues[i - 1] >= gap) {
        clusters.emplace_back(start, i - start);
        start = i;
      }
    }

    struct Candidate {
      CMatrix basis;
      CVector character;
    };
    std::vector<Candidate> candidates;
    bool failed = false;
    for (const auto& [s, m] : clusters) {
      Eigen::HouseholderQR<CMatrix> qr(eig.eigenvectors.middleCols(s, m));
      CMatrix basis = qr.householderQ() * CMatrix::Identity(ni, m);
      CVector chi(static_cast<Eigen::Index>(num_classes));
      for (std::size_t c = 0; c < num_classes; ++c) {
        const CMatrix moved = right_translate(basis, group, group.class_representative(c));
        chi[static_cast<Eigen::Index>(c)] = (basis.adjoint() * moved).trace();
      }
      double norm2 = 0;
      for (std::size_t c = 0; c < num_classes; ++c) {
        norm2 += static_cast<double>(group.classes()[c].size()) *
                 std::norm(chi[static_cast<Eigen::Index>(c)]);
      }
      norm2 /= static_cast<double>(n);
      if (std::abs(norm2 - 1.0) > 1e-6) {
        last_failure = fmt::format("eigenspace of size {} is reducible (<chi,chi> = {:.6f})", m, norm2);
        failed = true;
        break;
      }
      candidates.push_back({std::move(basis), std::move(chi)});
    }
    if (failed) continue;

    // Equivalence classes of candidate eigenspaces by character.
    std::vector<std::vector<std::size_t>> classes_of_reps;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      bool placed = false;
      for (auto& cls : classes_of_reps) {
        if (max_abs(candidates[cls.front()].character - candidates[i].character) <
            options.character_threshold) {
          cls.push_back(i);
          placed = true;
          break;
        }
      }
      if (!placed) classes_of_reps.push_back({i});
    }

    UnitaryDual dual;
    std::size_t dim_sq = 0;
    for (const auto& cls : classes_of_reps) {
      const Candidate& rep = candidates[cls.front()];
      const auto d = rep.basis.cols();
      if (static_cast<Eigen::Index>(cls.size()) != d) {
        last_failure = fmt::format("irrep of dimension {} appeared {} times", d, cls.size());
        failed = true;
        break;
      }
      Irrep irrep;
      irrep.dim = static_cast<int>(d);
      irrep.matrices.resize(n);
      double unitarity = 0;
      for (Element g = 0; g < n; ++g) {
        const CMatrix moved = right_translate(rep.basis, group, g);
        irrep.matrices[g] = rep.basis.adjoint() * moved;
        unitarity = std::max(unitarity,
                             (irrep.matrices[g].adjoint() * irrep.matrices[g] -
                              CMatrix::Identity(d, d)).cwiseAbs().maxCoeff());
      }
      if (unitarity > options.tol) {
        last_failure = fmt::format("eigenspace not right-invariant (unitarity error {:.3e})", unitarity);
        failed = true;
        break;
      }
      irrep.character = class_character(irrep.matrices, group);
      dim_sq += static_cast<std::size_t>(d * d);
      dual.irreps.push_back(std::move(irrep));
    }
    if (failed) continue;
    if (dim_sq != n) {
      last_failure = fmt::format("sum of squared dimensions {} != |G| = {}", dim_sq, n);
      continue;
    }

    std::stable_sort(dual.irreps.begin(), dual.irreps.end(), irrep_less);
    std::size_t trivial_count = 0;
    for (std::size_t i = 0; i < dual.irreps.size(); ++i) {
      if (is_trivial(dual.irreps[i])) {
        dual.trivial_index = i;
        ++trivial_count;
      }
    }
    if (trivial_count != 1) {
      last_failure = fmt::format("found {} trivial irreps", trivial_count);
      continue;
    }
    return pair_duals(std::move(dual));
  }
  throw NumericalError(fmt::format("could not split the regular representation of {} after {} attempts: {}",
                                   group.spec().to_string(), options.max_retries + 1, last_failure));
}

int frobenius_schur(const Irrep& irrep, const GroupTable& group) {
  Complex sum = 0;
  for (Element g = 0; g < group.order(); ++g) {
    sum += irrep.character[static_cast<Eigen::Index>(group.class_of(group.mul(g, g)))];
  }
  const Complex raw = sum / static_cast<double>(group.order());
  for (int candidate : {0, 1, -1}) {
    if (std::abs(raw - Complex(candidate, 0.0)) < 1e-6) return candidate;
  }
  throw NumericalError(fmt::format("Frobenius-Schur average {:.8f}{:+.8f}i is not in {{0, 1, -1}}",
                                   raw.real(), raw.imag()));
}

CMatrix compute_J(const Irrep& irrep, const GroupTable& group, RandomSource& rng) {
  const int indicator = frobenius_schur(irrep, group);
  if (indicator == 0) {
    throw ConfigError("compute_J needs a self-dual irrep (Frobenius-Schur indicator 0)");
  }
  const int d = irrep.dim;
  const double n = static_cast<double>(group.order());
  for (int attempt = 0; attempt < 5; ++attempt) {
    CMatrix x(d, d);
    for (int j = 0; j < d; ++j) {
      for (int i = 0; i < d; ++i) x(i, j) = rng.complex_normal();
    }
    CMatrix w0 = CMatrix::Zero(d, d);
    for (const auto& p : irrep.matrices) w0 += p * x * p.transpose();
    w0 /= n;
    if (w0.norm() < 1e-10 * x.norm()) continue;
    const CMatrix square = w0 * w0.conjugate();
    const Complex lambda = square.trace() / static_cast<double>(d);
    if ((square - lambda * CMatrix::Identity(d, d)).norm() > 1e-8 * std::abs(lambda) ||
        std::abs(lambda.imag()) > 1e-8 * std::abs(lambda)) {
      throw NumericalError("averaged intertwiner is not a scalar multiple of a unitary");
    }
    const int sign = lambda.real() > 0 ? 1 : -1;
    if (sign != indicator) {
      throw NumericalError(fmt::format("J sign {} disagrees with Frobenius-Schur indicator {}", sign,
                                       indicator));
    }
    CMatrix w = normalise_phase(w0 / std::sqrt(std::abs(lambda)));
    double intertwine = 0;
    for (const auto& p : irrep.matrices) {
      intertwine = std::max(intertwine, (p * w - w * p.conjugate()).cwiseAbs().maxCoeff());
    }
    if (intertwine > 1e-8) {
      throw NumericalError(fmt::format("J fails to intertwine (error {:.3e})", intertwine));
    }
    return w;
  }
  throw NumericalError("averaged intertwiner vanished in 5 attempts");
}

CMatrix real_points_basis(const Irrep& irrep) {
  if (irrep.fs_type != FsType::real || !irrep.j_matrix) {
    throw ConfigError("real_points_basis needs a real irrep with its J matrix");
  }
  const CMatrix& w = *irrep.j_matrix;
  const int d = irrep.dim;
  // v = a + ib  ->  W conj(v) = (P a + Q b) + i (Q a - P b)  with W = P + iQ.
  const RMatrix p = w.real(), q = w.imag();
  RMatrix k(2 * d, 2 * d);
  k << p, q, q, -p;
  k = 0.5 * (k + k.transpose()).eval();
  const SymmetricEigen eig = symmetric_eig(k, 1e-6);
  int fixed = 0;
  for (int i = 0; i < 2 * d; ++i) {
    if (std::abs(eig.eigenvalues[i] - 1.0) < 1e-6) ++fixed;
  }
  if (fixed != d) {
    throw NumericalError(fmt::format("fixed space of J has dimension {}, expected {}", fixed, d));
  }
  CMatrix basis(d, d);
  for (int c = 0; c < d; ++c) {
    const auto col = eig.eigenvectors.col(d + c);  // eigenvalue +1 half (ascending order)
    for (int i = 0; i < d; ++i) basis(i, c) = Complex(col[i], col[d + i]);
  }
  double imag = 0;
  for (const auto& m : irrep.matrices) {
    imag = std::max(imag, (basis.adjoint() * m * basis).imag().cwiseAbs().maxCoeff());
  }
  if (imag > 1e-8) {
    throw NumericalError(fmt::format("representation is not real on V_J (imaginary part {:.3e})", imag));
  }
  return basis;
}

UnitaryDual pair_duals(UnitaryDual dual) {
  const std::size_t k = dual.irreps.size();
  dual.dual_pairing.assign(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    const CVector& chi = dual.irreps[i].character;
    if (chi.imag().cwiseAbs().maxCoeff() <= 1e-8) {
      dual.dual_pairing[i] = i;
      continue;
    }
    std::vector<std::size_t> partners;
    for (std::size_t j = 0; j < k; ++j) {
      if (j != i && max_abs(dual.irreps[j].character - chi.conjugate()) < 1e-4) partners.push_back(j);
    }
    if (partners.size() != 1) {
      throw NumericalError(fmt::format("irrep {} has {} conjugate partners, expected exactly one", i,
                                       partners.size()));
    }
    dual.dual_pairing[i] = partners.front();
  }
  return dual;
}

UnitaryDual complete_dual(UnitaryDual dual, const GroupTable& group, RandomSource& rng) {
  const std::size_t k = dual.irreps.size();
  std::vector<RandomSource> streams;
  streams.reserve(k);
  for (std::size_t i = 0; i < k; ++i) streams.push_back(rng.substream(i));
  parallel_for(k, [&](std::size_t i) {
    Irrep& irrep = dual.irreps[i];
    const int indicator = frobenius_schur(irrep, group);
    const bool real_character = irrep.character.imag().cwiseAbs().maxCoeff() <= 1e-8;
    if ((indicator == 0) == real_character) {
      throw NumericalError(fmt::format("irrep {}: indicator {} inconsistent with its character", i,
                                       indicator));
    }
    irrep.fs_type = static_cast<FsType>(indicator);
    if (indicator != 0 && !irrep.j_matrix) irrep.j_matrix = compute_J(irrep, group, streams[i]);
    if (indicator == 1 && !irrep.real_basis) irrep.real_basis = real_points_basis(irrep);
  });
  return pair_duals(std::move(dual));
}

UnitaryDual build_unitary_dual(const GroupTable& group, RandomSource& rng, const SplitOptions& options) {
  RandomSource split_rng = rng.substream("split");
  RandomSource post_rng = rng.substream("structure");
  return complete_dual(split_regular_representation(group, split_rng, options), group, post_rng);
}

bool DualDiagnostics::ok(std::size_t order, double tol) const {
  return sum_dim_squared == order && trivial_count == 1 && max_homomorphism_error <= tol &&
         max_unitarity_error <= tol && max_class_function_error <= tol &&
         max_orthogonality_error <= tol && max_pairing_error <= tol && max_j_error <= tol;
}

DualDiagnostics check_dual(const UnitaryDual& dual, const GroupTable& group, RandomSource& rng) {
  DualDiagnostics diag;
  const std::size_t n = group.order();
  std::vector<double> class_sizes;
  for (const auto& cls : group.classes()) class_sizes.push_back(static_cast<double>(cls.size()));

  for (std::size_t i = 0; i < dual.irreps.size(); ++i) {
    const Irrep& irrep = dual.irreps[i];
    const int d = irrep.dim;
    diag.sum_dim_squared += static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
    if (is_trivial(irrep)) ++diag.trivial_count;
    if (irrep.matrices.size() == n) {
      for (int s = 0; s < 50; ++s) {
        const auto g = static_cast<Element>(rng.index(n));
        const auto h = static_cast<Element>(rng.index(n));
        const CMatrix diff = irrep.matrices[group.mul(g, h)] - irrep.matrices[g] * irrep.matrices[h];
        diag.max_homomorphism_error = std::max(diag.max_homomorphism_error, diff.cwiseAbs().maxCoeff());
      }
      for (Element g = 0; g < n; ++g) {
        const CMatrix& p = irrep.matrices[g];
        diag.max_unitarity_error = std::max(
            diag.max_unitarity_error, (p.adjoint() * p - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff());
        diag.max_class_function_error =
            std::max(diag.max_class_function_error,
                     std::abs(p.trace() - irrep.character[static_cast<Eigen::Index>(group.class_of(g))]));
      }
      if (irrep.j_matrix) {
        const CMatrix& w = *irrep.j_matrix;
        const double sign = irrep.fs_type == FsType::quaternionic ? -1.0 : 1.0;
        double err = (w * w.conjugate() - sign * CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
        for (const auto& p : irrep.matrices) {
          err = std::max(err, (p * w - w * p.conjugate()).cwiseAbs().maxCoeff());
        }
        diag.max_j_error = std::max(diag.max_j_error, err);
      }
    }
    for (std::size_t j = 0; j < dual.irreps.size(); ++j) {
      Complex inner = 0;
      for (std::size_t c = 0; c < class_sizes.size(); ++c) {
        const auto ci = static_cast<Eigen::Index>(c);
        inner += class_sizes[c] * irrep.character[ci] * std::conj(dual.irreps[j].character[ci]);
      }
      inner /= static_cast<double>(n);
      diag.max_orthogonality_error =
          std::max(diag.max_orthogonality_error, std::abs(inner - Complex(i == j ? 1.0 : 0.0, 0.0)));
    }
    if (dual.dual_pairing.size() == dual.irreps.size()) {
      const std::size_t partner = dual.dual_pairing[i];
      diag.max_pairing_error = std::max(
          diag.max_pairing_error, max_abs(dual.irreps[partner].character - irrep.character.conjugate()));
      if (dual.dual_pairing[partner] != i) diag.max_pairing_error = std::max(diag.max_pairing_error, 1.0);
    } else {
      diag.max_pairing_error = 1.0;
    }
  }
  return diag;
}

}  // namespace quegraph

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

#include "quegraph/eigenbasis.hpp"

#include <cmath>

#include <fmt/format.h>

#include "quegraph/error.hpp"

namespace quegraph {

namespace {

enum class Emit { split_re_im, real_part, full };

struct Block {
  CMatrix v;           // eigenvectors as columns
  RVector eigenvalues;
  CMatrix w;           // random columns
};

// Appends the functions scale * f(w_j^H pi(g) v_k) for all k, j.
void emit(std::size_t index, const Irrep& irrep, const Block& block, Emit mode, double scale,
          std::vector<BasisFunction>& out) {
  const std::size_t n = irrep.matrices.size();
  const auto m = block.v.cols();
  const auto q = block.w.cols();
  std::vector<CMatrix> coeff(n);
  const CMatrix wh = block.w.adjoint();
  for (std::size_t g = 0; g < n; ++g) coeff[g] = wh * irrep.matrices[g] * block.v;
  const auto ni = static_cast<Eigen::Index>(n);
  for (Eigen::Index k = 0; k < m; ++k) {
    for (Eigen::Index j = 0; j < q; ++j) {
      auto make = [&](BasisKind kind) {
        BasisFunction f;
        f.values.resize(ni);
        f.eigenvalue = block.eigenvalues[k];
        f.provenance = {index, kind, static_cast<int>(k), static_cast<int>(j)};
        f.v = block.v.col(k);
        f.w = block.w.col(j);
        return f;
      };
      if (mode == Emit::split_re_im) {
        BasisFunction x = make(BasisKind::type1), y = make(BasisKind::type2);
        for (Eigen::Index g = 0; g < ni; ++g) {
          const Complex z = coeff[static_cast<std::size_t>(g)](j, k);
          x.values[g] = scale * z.real();
          y.values[g] = scale * z.imag();
        }
        out.push_back(std::move(x));
        out.push_back(std::move(y));
      } else {
        BasisFunction f = make(mode == Emit::real_part ? BasisKind::type3 : BasisKind::complex);
        for (Eigen::Index g = 0; g < ni; ++g) {
          const Complex z = coeff[static_cast<std::size_t>(g)](j, k);
          f.values[g] = mode == Emit::real_part ? Complex(scale * z.real(), 0.0) : scale * z;
        }
        out.push_back(std::move(f));
      }
    }
  }
}

BasisFunction constant_function(std::size_t index, std::size_t n, double degree) {
  BasisFunction f;
  f.values = CVector::Constant(static_cast<Eigen::Index>(n),
                               Complex(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
  f.eigenvalue = degree;
  f.provenance = {index, BasisKind::trivial, 0, 0};
  f.v = CVector::Ones(1);
  f.w = CVector::Ones(1);
  return f;
}

// Eigenbasis {v_1, J v_1, v_2, J v_2, ...} of pi(A); returns the v_k only.
Block quaternionic_eigenvectors(const Irrep& irrep, const CMatrix& adj) {
  const SelfAdjointEigen eig = hermitian_eig(adj);
  const CMatrix& w = *irrep.j_matrix;
  const auto d = adj.rows();
  const double gap = 1e-6 * std::max(1.0, eig.eigenvalues.cwiseAbs().maxCoeff());
  Block block;
  block.v.resize(d, d / 2);
  block.eigenvalues.resize(d / 2);
  Eigen::Index filled = 0;
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= d; ++i) {
    if (i < d && eig.eigenvalues[i] - eig.eigenvalues[i - 1] < gap) continue;
    CMatrix space = eig.eigenvectors.middleCols(start, i - start);
    const double lambda = eig.eigenvalues.segment(start, i - start).mean();
    if (space.cols() % 2 != 0) {
      throw NumericalError("quaternionic irrep has an odd-dimensional pi(A) eigenspace");
    }
    while (space.cols() > 0) {
      const CVector v = space.col(0).normalized();
      const CVector jv = w * v.conjugate();
      if (filled >= d / 2) throw NumericalError("too many quaternionic eigenvector pairs");
      block.v.col(filled) = v;
      block.eigenvalues[filled] = lambda;
      ++filled;
      CMatrix pair(d, 2);
      pair << v, jv;
      CMatrix rest = space - pair * (pair.adjoint() * space);
      const auto remaining = space.cols() - 2;
      if (remaining == 0) break;
      Eigen::ColPivHouseholderQR<CMatrix> qr(rest);
      CMatrix q = qr.householderQ() * CMatrix::Identity(d, remaining);
      space = q - pair * (pair.adjoint() * q);
      Eigen::HouseholderQR<CMatrix> clean(space);
      space = clean.householderQ() * CMatrix::Identity(d, remaining);
    }
    start = i;
  }
  if (filled != d / 2) throw NumericalError("incomplete quaternionic eigenbasis");
  return block;
}

void check_block(const GroupTable& group, const SymmetricSet& gens, const std::vector<BasisFunction>& fns,
                 std::size_t begin, std::size_t index) {
  const std::size_t m = fns.size() - begin;
  const auto n = static_cast<Eigen::Index>(group.order());
  CMatrix values(n, static_cast<Eigen::Index>(m));
  for (std::size_t c = 0; c < m; ++c) values.col(static_cast<Eigen::Index>(c)) = fns[begin + c].values;
  const double gram = (values.adjoint() * values - CMatrix::Identity(values.cols(), values.cols()))
                          .cwiseAbs()
                          .maxCoeff();
  if (gram > 1e-8) {
    throw NumericalError(fmt::format("irrep {}: block Gram deviation {:.3e} exceeds 1e-8", index, gram));
  }
  const double degree = static_cast<double>(gens.degree());
  for (std::size_t c = 0; c < m; ++c) {
    const BasisFunction& f = fns[begin + c];
    double residual = 0;
    for (Eigen::Index g = 0; g < n; ++g) {
      Complex acc = -f.eigenvalue * f.values[g];
      for (Element s : gens.elements) acc += f.values[group.mul(static_cast<Element>(g), s)];
      residual = std::max(residual, std::abs(acc));
    }
    if (residual > 1e-8 * degree) {
      throw NumericalError(
          fmt::format("irrep {}: eigenfunction residual {:.3e} exceeds 1e-8 * degree", index, residual));
    }
  }
}

void check_count(const RandomEigenbasis& basis, std::size_t order) {
  if (basis.functions.size() != order) {
    throw NumericalError(
        fmt::format("eigenbasis has {} functions, expected |G| = {}", basis.functions.size(), order));
  }
}

}  // namespace

std::string_view basis_model_name(BasisModel model) {
  return model == BasisModel::real ? "real" : "complex";
}

std::string_view basis_kind_name(BasisKind kind) {
  switch (kind) {
    case BasisKind::trivial: return "trivial";
    case BasisKind::type1: return "type1";
    case BasisKind::type2: return "type2";
    case BasisKind::type3: return "type3";
    case BasisKind::complex: return "complex";
  }
  return "?";
}

CMatrix rep_adjacency(const Irrep& irrep, const SymmetricSet& gens) {
  CMatrix a = CMatrix::Zero(irrep.dim, irrep.dim);
  for (Element s : gens.elements) a += irrep.matrices[s];
  return a;
}

RandomEigenbasis sample_eigenbasis(const GroupTable& group, const UnitaryDual& dual,
                                   const SymmetricSet& gens, const RandomSource& rng) {
  RandomEigenbasis basis;
  basis.model = BasisModel::real;
  basis.seed = rng.seed();
  basis.stream = rng.stream();
  const std::size_t n = group.order();
  const double degree = static_cast<double>(gens.degree());
  if (dual.dual_pairing.size() != dual.irreps.size()) {
    throw ConfigError("unitary dual has no dual pairing");
  }

  for (std::size_t i = 0; i < dual.irreps.size(); ++i) {
    const Irrep& irrep = dual.irreps[i];
    const std::size_t partner = dual.dual_pairing[i];
    if (partner < i) continue;  // emitted together with its partner
    RandomSource local = rng.substream(i);
    const std::size_t begin = basis.functions.size();
    const int d = irrep.dim;
    const double dn = static_cast<double>(d) / static_cast<double>(n);
    IrrepDraw draw;
    draw.irrep = i;
    draw.partner = partner;

    if (i == dual.trivial_index) {
      draw.scheme = "trivial";
      draw.matrix = "none";
      draw.eigenvalues = RVector::Constant(1, degree);
      basis.functions.push_back(constant_function(i, n, degree));
    } else if (partner != i) {
      const SelfAdjointEigen eig = hermitian_eig(rep_adjacency(irrep, gens));
      Block block{eig.eigenvectors, eig.eigenvalues, haar_unitary(d, local)};
      draw.scheme = "pair";
      draw.matrix = "unitary";
      draw.eigenvalues = eig.eigenvalues;
      draw.draw = block.w;
      emit(i, irrep, block, Emit::split_re_im, std::sqrt(2.0 * dn), basis.functions);
    } else if (irrep.fs_type == FsType::real) {
      if (!irrep.real_basis) throw ConfigError(fmt::format("irrep {}: real irrep without real basis", i));
      const CMatrix& b = *irrep.real_basis;
      const RMatrix real_adj = (b.adjoint() * rep_adjacency(irrep, gens) * b).real();
      const SymmetricEigen eig = symmetric_eig(0.5 * (real_adj + real_adj.transpose()), 1e-8);
      const RMatrix o = haar_orthogonal(d, local);
      Block block{b * eig.eigenvectors.cast<Complex>(), eig.eigenvalues, b * o.cast<Complex>()};
      draw.scheme = "real";
      draw.matrix = "orthogonal";
      draw.eigenvalues = eig.eigenvalues;
      draw.draw = o.cast<Complex>();
      emit(i, irrep, block, Emit::real_part, std::sqrt(dn), basis.functions);
    } else if (irrep.fs_type == FsType::quaternionic) {
      if (!irrep.j_matrix) throw ConfigError(fmt::format("irrep {}: quaternionic irrep without J", i));
      Block block = quaternionic_eigenvectors(irrep, rep_adjacency(irrep, gens));
      block.w = haar_unitary(d, local);
      draw.scheme = "quaternionic";
      draw.matrix = "unitary";
      draw.eigenvalues = block.eigenvalues;
      draw.draw = block.w;
      emit(i, irrep, block, Emit::split_re_im, std::sqrt(2.0 * dn), basis.functions);
    } else {
      throw ConfigError(fmt::format("irrep {}: self-paired irrep with complex type", i));
    }
    const std::size_t expected = partner != i ? 2u * static_cast<std::size_t>(d * d)
                                              : static_cast<std::size_t>(d * d);
    if (basis.functions.size() - begin != expected) {
      throw NumericalError(fmt::format("irrep {}: emitted {} functions, expected {}", i,
                                       basis.functions.size() - begin, expected));
    }
    check_block(group, gens, basis.functions, begin, i);
    basis.draws.push_back(std::move(draw));
  }
  check_count(basis, n);
  return basis;
}

RandomEigenbasis sample_complex_eigenbasis(const GroupTable& group, const UnitaryDual& dual,
                                           const SymmetricSet& gens, const RandomSource& rng) {
  RandomEigenbasis basis;
  basis.model = BasisModel::complex;
  basis.seed = rng.seed();
  basis.stream = rng.stream();
  const std::size_t n = group.order();
  const double degree = static_cast<double>(gens.degree());
  for (std::size_t i = 0; i < dual.irreps.size(); ++i) {
    const Irrep& irrep = dual.irreps[i];
    RandomSource local = rng.substream(i);
    const std::size_t begin = basis.functions.size();
    IrrepDraw draw;
    draw.irrep = i;
    draw.partner = i;
    if (i == dual.trivial_index) {
      draw.scheme = "trivial";
      draw.matrix = "none";
      draw.eigenvalues = RVector::Constant(1, degree);
      basis.functions.push_back(constant_function(i, n, degree));
    } else {
      const SelfAdjointEigen eig = hermitian_eig(rep_adjacency(irrep, gens));
      Block block{eig.eigenvectors, eig.eigenvalues, haar_unitary(irrep.dim, local)};
      draw.scheme = "complex";
      draw.matrix = "unitary";
      draw.eigenvalues = eig.eigenvalues;
      draw.draw = block.w;
      emit(i, irrep, block, Emit::full,
           std::sqrt(static_cast<double>(irrep.dim) / static_cast<double>(n)), basis.functions);
    }
    check_block(group, gens, basis.functions, begin, i);
    basis.draws.push_back(std::move(draw));
  }
  check_count(basis, n);
  return basis;
}

CMatrix basis_matrix(const RandomEigenbasis& basis) {
  if (basis.functions.empty()) return {};
  CMatrix m(basis.functions.front().values.size(), static_cast<Eigen::Index>(basis.functions.size()));
  for (std::size_t c = 0; c < basis.functions.size(); ++c) {
    m.col(static_cast<Eigen::Index>(c)) = basis.functions[c].values;
  }
  return m;
}

BasisVerification verify_basis(const RandomEigenbasis& basis, const CayleyGraph& cayley, double gram_tol,
                               double residual_tol, double spectrum_tol, double completeness_tol) {
  BasisVerification report;
  const auto n = cayley.adjacency.rows();
  const double degree = static_cast<double>(cayley.degree());
  report.count = basis.functions.size();
  report.count_ok = static_cast<Eigen::Index>(report.count) == n;

  const CMatrix phi = basis_matrix(basis);
  if (phi.rows() != n) return report;
  const auto m = phi.cols();
  report.max_gram_error = (phi.adjoint() * phi - CMatrix::Identity(m, m)).cwiseAbs().maxCoeff();

  const RMatrix adj = cayley.adjacency.cast<double>();
  RVector eigenvalues(m);
  for (Eigen::Index c = 0; c < m; ++c) eigenvalues[c] = basis.functions[static_cast<std::size_t>(c)].eigenvalue;
  const CMatrix residual = adj.cast<Complex>() * phi - phi * eigenvalues.cast<Complex>().asDiagonal();
  report.max_residual = residual.cwiseAbs().maxCoeff();

  const SymmetricEigen dense = symmetric_eig(adj);
  report.spectrum_distance = sorted_max_distance(eigenvalues, dense.eigenvalues);

  const RVector mass = phi.cwiseAbs2().rowwise().sum();
  report.completeness_error = (mass.array() - 1.0).abs().maxCoeff();

  const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(n));
  for (const auto& f : basis.functions) {
    if (std::abs(f.eigenvalue - degree) <= residual_tol * degree &&
        (f.values.array() - Complex(inv_sqrt, 0.0)).abs().maxCoeff() <= 1e-10) {
      report.has_constant = true;
    }
  }
  report.gram_ok = report.max_gram_error <= gram_tol;
  report.residual_ok = report.max_residual <= residual_tol * degree;
  report.spectrum_ok = report.spectrum_distance <= spectrum_tol;
  report.completeness_ok = report.completeness_error <= completeness_tol;
  return report;
}

}  // namespace quegraph

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

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "oracles.hpp"
#include "quegraph/eigenbasis.hpp"
#include "quegraph/error.hpp"
#include "quegraph/group.hpp"
#include "quegraph/repdec.hpp"

using namespace quegraph;

namespace {

struct Fixture {
  GroupTable group;
  UnitaryDual dual;
  CayleyGraph cayley;
};

Fixture setup(const std::string& spec, const std::string& gens, std::uint64_t seed = 1) {
  Fixture s{build_group(parse_group_spec(spec)), {}, {}};
  RandomSource root(seed);
  s.dual = build_unitary_dual(s.group, root);
  RandomSource grng = root.substream("gens");
  s.cayley = build_cayley_adjacency(s.group, parse_generators(s.group, gens, grng));
  return s;
}

std::vector<double> eigenvalues_of(const RandomEigenbasis& b) {
  std::vector<double> ev;
  for (const auto& f : b.functions) ev.push_back(f.eigenvalue);
  std::sort(ev.begin(), ev.end());
  return ev;
}

void expect_spectrum(const RandomEigenbasis& b, const CayleyGraph& c, double tol) {
  const auto ev = eigenvalues_of(b);
  const auto ref = oracle::jacobi_eigenvalues(c.adjacency);
  ASSERT_EQ(ev.size(), ref.size());
  for (std::size_t i = 0; i < ev.size(); ++i) EXPECT_NEAR(ev[i], ref[i], tol);
}

}  // namespace

TEST(RepAdjacency, TrivialCyclicAndTrace) {
  auto s = setup("cyclic:7", "1");
  for (const auto& rho : s.dual.irreps) {
    const CMatrix a = rep_adjacency(rho, s.cayley.gens);
    ASSERT_EQ(a.rows(), 1);
    // The generator 1 has code {1}; its character value fixes k.
    const Complex z = rho.matrices[s.group.find_by_code({1})](0, 0);
    EXPECT_NEAR(std::abs(a(0, 0) - Complex(2.0 * z.real(), 0)), 0, 1e-10);
  }
  const CMatrix triv = rep_adjacency(s.dual.irreps[s.dual.trivial_index], s.cayley.gens);
  EXPECT_NEAR(triv(0, 0).real(), 2.0, 1e-12);

  auto t = setup("sym:3", "(1 2),(1 3),(2 3)");
  for (const auto& rho : t.dual.irreps) {
    const CMatrix a = rep_adjacency(rho, t.cayley.gens);
    EXPECT_LE((a - a.adjoint()).norm(), 1e-10);
    if (rho.dim == 2) EXPECT_NEAR(std::abs(a.trace()), 0.0, 1e-10);
  }
}

TEST(Eigenbasis, CyclicFour) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto s = setup("cyclic:4", "1", seed);
    const auto b = sample_eigenbasis(s.group, s.dual, s.cayley.gens, RandomSource(seed).substream("basis"));
    ASSERT_EQ(b.functions.size(), 4u);
    const CMatrix m = basis_matrix(b);
    EXPECT_LE((m.adjoint() * m - CMatrix::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-10);
    const auto ev = eigenvalues_of(b);
    EXPECT_NEAR(ev[0], -2, 1e-10);
    EXPECT_NEAR(ev[1], 0, 1e-10);
    EXPECT_NEAR(ev[2], 0, 1e-10);
    EXPECT_NEAR(ev[3], 2, 1e-10);
  }
}

TEST(Eigenbasis, Sym3TranspositionSpectrum) {
  auto s = setup("sym:3", "(1 2),(1 3),(2 3)");
  const auto b = sample_eigenbasis(s.group, s.dual, s.cayley.gens, RandomSource(4));
  ASSERT_EQ(b.functions.size(), 6u);
  const auto ev = eigenvalues_of(b);
  const std::vector<double> expected{-3, 0, 0, 0, 0, 3};
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(ev[i], expected[i], 1e-9);
  EXPECT_TRUE(verify_basis(b, s.cayley).ok());
}

TEST(Eigenbasis, QuaternionicIrrepGivesTwoPairs) {
  auto s = setup("dicyclic:2", "random:2");
  const auto b = sample_eigenbasis(s.group, s.dual, s.cayley.gens, RandomSource(5));
  ASSERT_EQ(b.functions.size(), 8u);
  std::size_t q = 0;
  for (std::size_t i = 0; i < s.dual.irreps.size(); ++i) {
    if (s.dual.irreps[i].fs_type == FsType::quaternionic) q = i;
  }
  std::map<std::pair<int, int>, std::vector<BasisKind>> pairs;
  for (const auto& f : b.functions) {
    if (f.provenance.irrep != q) continue;
    pairs[{f.provenance.k, f.provenance.j}].push_back(f.provenance.kind);
  }
  std::size_t total = 0;
  for (const auto& [key, kinds] : pairs) {
    ASSERT_EQ(kinds.size(), 2u);
    EXPECT_TRUE(std::count(kinds.begin(), kinds.end(), BasisKind::type1) == 1);
    EXPECT_TRUE(std::count(kinds.begin(), kinds.end(), BasisKind::type2) == 1);
    total += kinds.size();
  }
  EXPECT_EQ(pairs.size(), 2u);
  EXPECT_EQ(total, 4u);
  EXPECT_TRUE(verify_basis(b, s.cayley).ok());
}

TEST(Eigenbasis, QuaternionicVectorsComeWithTheirJ) {
  auto s = setup("dicyclic:3", "random:3");
  const auto b = sample_eigenbasis(s.group, s.dual, s.cayley.gens, RandomSource(6));
  for (const auto& f : b.functions) {
    const auto& rho = s.dual.irreps[f.provenance.irrep];
    if (rho.fs_type != FsType::quaternionic) continue;
    const CVector jv = *rho.j_matrix * f.v.conjugate();
    const CMatrix a = rep_adjacency(rho, s.cayley.gens);
    EXPECT_LE((a * jv - f.eigenvalue * jv).norm(), 1e-8);
    EXPECT_NEAR(std::abs(f.v.dot(jv)), 0.0, 1e-10);
  }
}

TEST(Eigenbasis, RealModelIsReal) {
  auto s = setup("psl2:5", "random:4");
  const auto b = sample_eigenbasis(s.group, s.dual, s.cayley.gens, RandomSource(7));
  for (const auto& f : b.functions) EXPECT_EQ(f.values.imag().cwiseAbs().maxCoeff(), 0.0);
  for (const auto& f : b.functions) EXPECT_NEAR(f.values.norm(), 1.0, 1e-10);
  expect_spectrum(b, s.cayley, 1e-7);
  EXPECT_TRUE(verify_basis(b, s.cayley).ok());
}

TEST(Eigenbasis, ConstantFunction) {
  auto s = setup("dihedral:5", "random:3");
  const auto b = sample_eigenbasis(s.group, s.dual, s.cayley.gens, RandomSource(8));
  const double c = 1.0 / std::sqrt(static_cast<double>(s.group.order()));
  int constants = 0;
  for (const auto& f : b.functions) {
    if (f.provenance.kind != BasisKind::trivial) continue;
    ++constants;
    EXPECT_EQ(f.eigenvalue, static_cast<double>(s.cayley.degree()));
    for (auto x : f.values) EXPECT_NEAR(std::abs(x - Complex(c)), 0.0, 1e-15);
  }
  EXPECT_EQ(constants, 1);
}

TEST(Eigenbasis, ComplexModelOnAbelianGroupsIsUnimodular) {
  for (const char* spec : {"cyclic:9", "product:(cyclic:2,cyclic:4)"}) {
    auto s = setup(spec, "random:2");
    const auto b = sample_complex_eigenbasis(s.group, s.dual, s.cayley.gens, RandomSource(9));
    const double n = static_cast<double>(s.group.order());
    ASSERT_EQ(b.functions.size(), s.group.order());
    for (const auto& f : b.functions) {
      for (auto x : f.values) EXPECT_NEAR(std::norm(x), 1.0 / n, 1e-14);
    }
  }
}

TEST(Eigenbasis, ComplexModelGramAndSpectrum) {
  auto s = setup("sym:3", "(1 2),(1 2 3)");
  auto b = sample_complex_eigenbasis(s.group, s.dual, s.cayley.gens, RandomSource(10));
  EXPECT_EQ(b.model, BasisModel::complex);
  auto v = verify_basis(b, s.cayley);
  EXPECT_TRUE(v.ok());
  EXPECT_LE(v.max_gram_error, 1e-8);
  auto p = setup("psl2:5", "random:4", 3);
  b = sample_complex_eigenbasis(p.group, p.dual, p.cayley.gens, RandomSource(11));
  expect_spectrum(b, p.cayley, 1e-7);
}

TEST(VerifyBasis, DihedralSpectrumAndCompleteness) {
  auto s = setup("dihedral:6", "random:3");
  const auto b = sample_eigenbasis(s.group, s.dual, s.cayley.gens, RandomSource(12));
  const auto v = verify_basis(b, s.cayley);
  EXPECT_TRUE(v.ok());
  EXPECT_LE(v.spectrum_distance, 1e-7);
  EXPECT_LE(v.completeness_error, 1e-8);
  EXPECT_EQ(v.count, s.group.order());
  const CMatrix m = basis_matrix(b);
  for (Eigen::Index g = 0; g < m.rows(); ++g) EXPECT_NEAR(m.row(g).squaredNorm(), 1.0, 1e-8);
}

TEST(VerifyBasis, DetectsCorruption) {
  auto s = setup("sym:3", "(1 2),(2 3)");
  auto b = sample_eigenbasis(s.group, s.dual, s.cayley.gens, RandomSource(13));
  b.functions[1].eigenvalue += 0.5;
  auto v = verify_basis(b, s.cayley);
  EXPECT_FALSE(v.residual_ok);
  EXPECT_FALSE(v.ok());
  b = sample_eigenbasis(s.group, s.dual, s.cayley.gens, RandomSource(13));
  b.functions.pop_back();
  v = verify_basis(b, s.cayley);
  EXPECT_FALSE(v.count_ok);
}

TEST(Eigenbasis, ReseedingKeepsSpectrum) {
  auto s = setup("alt:4", "random:3");
  const auto a = sample_eigenbasis(s.group, s.dual, s.cayley.gens, RandomSource(1));
  const auto b = sample_eigenbasis(s.group, s.dual, s.cayley.gens, RandomSource(2));
  const auto c = sample_eigenbasis(s.group, s.dual, s.cayley.gens, RandomSource(1));
  const auto ea = eigenvalues_of(a), eb = eigenvalues_of(b);
  for (std::size_t i = 0; i < ea.size(); ++i) EXPECT_NEAR(ea[i], eb[i], 1e-9);
  EXPECT_GT((basis_matrix(a) - basis_matrix(b)).norm(), 1e-3);
  EXPECT_EQ(basis_matrix(a), basis_matrix(c));
}

TEST(Eigenbasis, MultiplicityStructure) {
  auto s = setup("psl2:7", "random:2");
  const auto b = sample_eigenbasis(s.group, s.dual, s.cayley.gens, RandomSource(14));
  std::vector<double> predicted;
  for (const auto& rho : s.dual.irreps) {
    const auto e = hermitian_eig(rep_adjacency(rho, s.cayley.gens));
    for (auto x : e.eigenvalues) {
      for (int r = 0; r < rho.dim; ++r) predicted.push_back(x);
    }
  }
  std::sort(predicted.begin(), predicted.end());
  const auto ev = eigenvalues_of(b);
  ASSERT_EQ(ev.size(), predicted.size());
  for (std::size_t i = 0; i < ev.size(); ++i) EXPECT_NEAR(ev[i], predicted[i], 1e-9);
}

TEST(Eigenbasis, PairSpanMatchesComplexModel) {
  auto s = setup("cyclic:5", "1");
  auto t = setup("dicyclic:3", "random:2");
  for (Fixture* x : {&s, &t}) {
    const auto real = sample_eigenbasis(x->group, x->dual, x->cayley.gens, RandomSource(15));
    const auto cplx = sample_complex_eigenbasis(x->group, x->dual, x->cayley.gens, RandomSource(16));
    for (std::size_t i = 0; i < x->dual.irreps.size(); ++i) {
      const std::size_t partner = x->dual.dual_pairing[i];
      if (partner <= i) continue;
      std::vector<CVector> span;
      for (const auto& f : cplx.functions) {
        if (f.provenance.irrep == i || f.provenance.irrep == partner) span.push_back(f.values);
      }
      CMatrix q(static_cast<Eigen::Index>(x->group.order()), static_cast<Eigen::Index>(span.size()));
      for (std::size_t c = 0; c < span.size(); ++c) q.col(static_cast<Eigen::Index>(c)) = span[c];
      std::size_t count = 0;
      for (const auto& f : real.functions) {
        if (f.provenance.irrep != i) continue;
        ++count;
        EXPECT_LE((f.values - q * (q.adjoint() * f.values)).norm(), 1e-8);
      }
      const int d = x->dual.irreps[i].dim;
      EXPECT_EQ(count, static_cast<std::size_t>(2 * d * d));
      EXPECT_EQ(span.size(), static_cast<std::size_t>(2 * d * d));
    }
  }
}

TEST(Eigenbasis, DrawRecordsMatchCases) {
  auto s = setup("dicyclic:3", "random:2");
  const auto b = sample_eigenbasis(s.group, s.dual, s.cayley.gens, RandomSource(17));
  for (const auto& draw : b.draws) {
    const auto& rho = s.dual.irreps[draw.irrep];
    if (draw.irrep == s.dual.trivial_index) {
      EXPECT_EQ(draw.scheme, "trivial");
    } else if (draw.partner != draw.irrep) {
      EXPECT_EQ(draw.scheme, "pair");
      EXPECT_EQ(draw.matrix, "unitary");
    } else if (rho.fs_type == FsType::real) {
      EXPECT_EQ(draw.matrix, "orthogonal");
      EXPECT_EQ(draw.draw.imag().cwiseAbs().maxCoeff(), 0.0);
    } else {
      EXPECT_EQ(draw.scheme, "quaternionic");
      EXPECT_EQ(draw.matrix, "unitary");
    }
  }
}

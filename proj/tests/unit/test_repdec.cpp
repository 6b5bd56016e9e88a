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
#include <numbers>

#include "oracles.hpp"
#include "quegraph/error.hpp"
#include "quegraph/group.hpp"
#include "quegraph/repdec.hpp"

using namespace quegraph;

namespace {

struct Built {
  GroupTable group;
  UnitaryDual dual;
};

Built build(const std::string& spec, std::uint64_t seed = 1) {
  Built b{build_group(parse_group_spec(spec)), {}};
  RandomSource rng(seed);
  b.dual = build_unitary_dual(b.group, rng);
  return b;
}

std::vector<int> sorted_dims(const UnitaryDual& dual) {
  auto d = dual.dims();
  std::sort(d.begin(), d.end());
  return d;
}

double class_inner(const GroupTable& g, const CVector& a, const CVector& b) {
  Complex s = 0;
  for (std::size_t c = 0; c < g.num_classes(); ++c) {
    s += static_cast<double>(g.classes()[c].size()) * a[static_cast<Eigen::Index>(c)] *
         std::conj(b[static_cast<Eigen::Index>(c)]);
  }
  return std::abs(s) / static_cast<double>(g.order());
}

}  // namespace

TEST(Split, DimensionsOfSmallGroups) {
  EXPECT_EQ(sorted_dims(build("cyclic:6").dual), std::vector<int>(6, 1));
  EXPECT_EQ(sorted_dims(build("sym:3").dual), (std::vector<int>{1, 1, 2}));
  EXPECT_EQ(sorted_dims(build("dihedral:8").dual), (std::vector<int>{1, 1, 1, 1, 2, 2, 2}));
  EXPECT_EQ(sorted_dims(build("dicyclic:2").dual), (std::vector<int>{1, 1, 1, 1, 2}));
  EXPECT_EQ(sorted_dims(build("sym:4").dual), (std::vector<int>{1, 1, 2, 3, 3}));
  EXPECT_EQ(sorted_dims(build("alt:5").dual), (std::vector<int>{1, 3, 3, 4, 5}));
  EXPECT_EQ(sorted_dims(build("psl2:7").dual), (std::vector<int>{1, 3, 3, 6, 7, 8}));
  EXPECT_EQ(sorted_dims(build("product:(sym:3,cyclic:2)").dual), (std::vector<int>{1, 1, 1, 1, 2, 2}));
}

TEST(Split, IrrepCountMatchesClassCount) {
  for (const char* spec : {"dihedral:5", "sym:4", "psl2:5", "dicyclic:3"}) {
    const auto b = build(spec);
    EXPECT_EQ(b.dual.irreps.size(), oracle::class_count(b.group)) << spec;
    std::size_t total = 0;
    for (int d : b.dual.dims()) total += static_cast<std::size_t>(d * d);
    EXPECT_EQ(total, b.group.order()) << spec;
  }
}

TEST(Split, DiagnosticsPass) {
  for (const char* spec : {"cyclic:7", "dihedral:6", "dicyclic:2", "sym:4", "psl2:5"}) {
    const auto b = build(spec);
    RandomSource rng(11);
    const auto diag = check_dual(b.dual, b.group, rng);
    EXPECT_TRUE(diag.ok(b.group.order())) << spec;
    EXPECT_EQ(diag.trivial_count, 1u);
  }
}

TEST(Split, HomomorphismAndUnitarityExhaustive) {
  const auto b = build("dihedral:5");
  for (const auto& rho : b.dual.irreps) {
    const CMatrix id = CMatrix::Identity(rho.dim, rho.dim);
    EXPECT_LE((rho.matrices[0] - id).norm(), 1e-8);
    for (Element x = 0; x < b.group.order(); ++x) {
      EXPECT_LE((rho.matrices[x].adjoint() * rho.matrices[x] - id).norm(), 1e-8);
      for (Element y = 0; y < b.group.order(); ++y) {
        EXPECT_LE((rho.matrices[x] * rho.matrices[y] - rho.matrices[b.group.mul(x, y)]).norm(), 1e-8);
      }
    }
  }
}

TEST(Split, Plancherel) {
  const auto b = build("sym:4");
  const auto n = b.group.order();
  RandomSource rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    CVector f(static_cast<Eigen::Index>(n));
    for (auto& x : f) x = rng.complex_normal();
    double total = 0;
    for (const auto& rho : b.dual.irreps) {
      CMatrix hat = CMatrix::Zero(rho.dim, rho.dim);
      for (Element g = 0; g < n; ++g) hat += f[g] * rho.matrices[g];
      total += rho.dim * hat.squaredNorm() / static_cast<double>(n);
    }
    EXPECT_NEAR(total, f.squaredNorm(), 1e-8 * f.squaredNorm());
  }
}

TEST(Split, SchurOrthogonality) {
  const auto b = build("alt:4");
  const double n = static_cast<double>(b.group.order());
  for (std::size_t r = 0; r < b.dual.irreps.size(); ++r) {
    for (std::size_t s = 0; s < b.dual.irreps.size(); ++s) {
      const auto& p = b.dual.irreps[r];
      const auto& q = b.dual.irreps[s];
      for (int i = 0; i < p.dim; ++i) {
        for (int j = 0; j < p.dim; ++j) {
          for (int k = 0; k < q.dim; ++k) {
            for (int l = 0; l < q.dim; ++l) {
              Complex sum = 0;
              for (Element g = 0; g < b.group.order(); ++g) {
                sum += p.matrices[g](i, j) * std::conj(q.matrices[g](k, l));
              }
              const double expected = (r == s && i == k && j == l) ? 1.0 / p.dim : 0.0;
              EXPECT_NEAR(std::abs(sum / n - expected), 0.0, 1e-8);
            }
          }
        }
      }
    }
  }
}

TEST(Split, CharacterOrthogonality) {
  const auto b = build("psl2:5");
  for (std::size_t i = 0; i < b.dual.irreps.size(); ++i) {
    for (std::size_t j = 0; j < b.dual.irreps.size(); ++j) {
      EXPECT_NEAR(class_inner(b.group, b.dual.irreps[i].character, b.dual.irreps[j].character),
                  i == j ? 1.0 : 0.0, 1e-8);
    }
  }
}

TEST(Split, CyclicCharactersAreRootsOfUnity) {
  const int n = 7;
  const auto b = build("cyclic:7");
  std::vector<bool> seen(n, false);
  for (const auto& rho : b.dual.irreps) {
    int match = -1;
    for (int j = 0; j < n; ++j) {
      double err = 0;
      for (Element g = 0; g < b.group.order(); ++g) {
        const int k = b.group.code(g)[0];
        const Complex expected = std::polar(1.0, 2.0 * std::numbers::pi * j * k / n);
        err = std::max(err, std::abs(rho.character[static_cast<Eigen::Index>(b.group.class_of(g))] - expected));
      }
      if (err < 1e-8) match = j;
    }
    ASSERT_GE(match, 0);
    EXPECT_FALSE(seen[static_cast<std::size_t>(match)]);
    seen[static_cast<std::size_t>(match)] = true;
  }
}

TEST(Split, OrderingAndTrivial) {
  const auto b = build("sym:4");
  const auto dims = b.dual.dims();
  EXPECT_TRUE(std::is_sorted(dims.begin(), dims.end()));
  const auto& triv = b.dual.irreps[b.dual.trivial_index];
  EXPECT_EQ(triv.dim, 1);
  for (auto c : triv.character) EXPECT_NEAR(std::abs(c - Complex(1)), 0, 1e-10);
}

TEST(Split, ReproducibleForFixedSeed) {
  const auto a = build("dihedral:6", 5);
  const auto b = build("dihedral:6", 5);
  ASSERT_EQ(a.dual.irreps.size(), b.dual.irreps.size());
  for (std::size_t i = 0; i < a.dual.irreps.size(); ++i) {
    for (std::size_t g = 0; g < a.group.order(); ++g) {
      EXPECT_EQ(a.dual.irreps[i].matrices[g], b.dual.irreps[i].matrices[g]);
    }
  }
}

TEST(FrobeniusSchur, TypesOfQuaternionGroup) {
  const auto b = build("dicyclic:2");
  int quaternionic = 0;
  for (const auto& rho : b.dual.irreps) {
    EXPECT_EQ(frobenius_schur(rho, b.group), static_cast<int>(rho.fs_type));
    if (rho.dim == 2) {
      EXPECT_EQ(rho.fs_type, FsType::quaternionic);
      ++quaternionic;
      ASSERT_TRUE(rho.j_matrix.has_value());
      const CMatrix& w = *rho.j_matrix;
      EXPECT_LE((w * w.conjugate() + CMatrix::Identity(2, 2)).norm(), 1e-8);
      EXPECT_FALSE(rho.real_basis.has_value());
    } else {
      EXPECT_EQ(rho.fs_type, FsType::real);
    }
  }
  EXPECT_EQ(quaternionic, 1);
}

TEST(FrobeniusSchur, Sym3IsReal) {
  const auto b = build("sym:3");
  for (const auto& rho : b.dual.irreps) {
    EXPECT_EQ(rho.fs_type, FsType::real);
    const CMatrix& w = *rho.j_matrix;
    EXPECT_LE((w * w.conjugate() - CMatrix::Identity(rho.dim, rho.dim)).norm(), 1e-8);
    for (const auto& m : rho.matrices) EXPECT_LE((m * w - w * m.conjugate()).norm(), 1e-8);
  }
  const auto& triv = b.dual.irreps[b.dual.trivial_index];
  EXPECT_NEAR(std::abs((*triv.j_matrix)(0, 0) - Complex(1)), 0, 1e-12);
}

TEST(FrobeniusSchur, CyclicIrrepsOfOrderAboveTwoAreComplex) {
  const auto b = build("cyclic:5");
  int complex = 0;
  for (const auto& rho : b.dual.irreps) {
    if (rho.fs_type == FsType::complex) {
      ++complex;
      EXPECT_FALSE(rho.j_matrix.has_value());
    }
  }
  EXPECT_EQ(complex, 4);
}

TEST(FrobeniusSchur, SignMatchesJ) {
  for (const char* spec : {"dicyclic:3", "dihedral:7", "psl2:7", "product:(dicyclic:2,cyclic:3)"}) {
    const auto b = build(spec);
    for (const auto& rho : b.dual.irreps) {
      if (rho.fs_type == FsType::complex) continue;
      const CMatrix& w = *rho.j_matrix;
      const double sign = static_cast<int>(rho.fs_type);
      EXPECT_LE((w * w.conjugate() - sign * CMatrix::Identity(rho.dim, rho.dim)).norm(), 1e-8) << spec;
      EXPECT_LE((w.adjoint() * w - CMatrix::Identity(rho.dim, rho.dim)).norm(), 1e-8) << spec;
    }
  }
}

TEST(FrobeniusSchur, QuaternionicHasEvenDimensionAndJIsOrthogonal) {
  const auto b = build("dicyclic:3");
  RandomSource rng(13);
  for (const auto& rho : b.dual.irreps) {
    if (rho.fs_type != FsType::quaternionic) continue;
    EXPECT_EQ(rho.dim % 2, 0);
    for (int t = 0; t < 5; ++t) {
      CVector v(rho.dim);
      for (auto& x : v) x = rng.complex_normal();
      const CVector jv = *rho.j_matrix * v.conjugate();
      EXPECT_NEAR(std::abs(v.dot(jv)), 0.0, 1e-10 * v.squaredNorm());
    }
  }
}

TEST(RealPoints, BasisSpansFixedSpaceAndGivesRealMatrices) {
  for (const char* spec : {"sym:3", "dihedral:5", "sym:4"}) {
    const auto b = build(spec);
    for (const auto& rho : b.dual.irreps) {
      if (rho.fs_type != FsType::real) continue;
      ASSERT_TRUE(rho.real_basis.has_value());
      const CMatrix& basis = *rho.real_basis;
      const CMatrix& w = *rho.j_matrix;
      EXPECT_LE((basis.adjoint() * basis - CMatrix::Identity(rho.dim, rho.dim)).norm(), 1e-8);
      EXPECT_LE((w * basis.conjugate() - basis).norm(), 1e-8);
      EXPECT_LE((real_points_basis(rho) - basis).norm(), 1e-12);
      for (const auto& m : rho.matrices) {
        EXPECT_LE((basis.adjoint() * m * basis).imag().cwiseAbs().maxCoeff(), 1e-8) << spec;
      }
    }
  }
}

TEST(Pairing, CyclicAndDicyclic) {
  const auto c5 = build("cyclic:5");
  std::size_t self = 0;
  for (std::size_t i = 0; i < c5.dual.irreps.size(); ++i) {
    const std::size_t j = c5.dual.dual_pairing[i];
    EXPECT_EQ(c5.dual.dual_pairing[j], i);
    if (i == j) ++self;
    EXPECT_LE((c5.dual.irreps[j].character - c5.dual.irreps[i].character.conjugate()).norm(), 1e-8);
  }
  EXPECT_EQ(self, 1u);
  const auto q12 = build("dicyclic:3");
  std::size_t moved = 0;
  for (std::size_t i = 0; i < q12.dual.irreps.size(); ++i) moved += q12.dual.dual_pairing[i] != i ? 1 : 0;
  EXPECT_EQ(moved, 2u);
}

TEST(Pairing, PairDualsIsIdempotent) {
  const auto b = build("cyclic:6");
  const auto again = pair_duals(b.dual);
  EXPECT_EQ(again.dual_pairing, b.dual.dual_pairing);
}

TEST(ClassCharacter, TraceOfIdentityRep) {
  const auto b = build("sym:3");
  const auto& rho = b.dual.irreps.back();
  const CVector chi = class_character(rho.matrices, b.group);
  EXPECT_LE((chi - rho.character).norm(), 1e-10);
  EXPECT_NEAR(chi[static_cast<Eigen::Index>(b.group.class_of(0))].real(), rho.dim, 1e-10);
}

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

#include <string>

#include "oracles.hpp"
#include "quegraph/error.hpp"
#include "quegraph/group.hpp"
#include "quegraph/repdec.hpp"

using namespace quegraph;

namespace {

GroupTable sym(int n) { return build_group(parse_group_spec("sym:" + std::to_string(n))); }

}  // namespace

TEST(Young, PartitionsInReverseLexicographicOrder) {
  EXPECT_EQ(partitions_of(4), (std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}));
  EXPECT_EQ(partitions_of(6).size(), 11u);
  EXPECT_EQ(partitions_of(8).size(), 22u);
}

TEST(Young, DimensionsMatchHookLengths) {
  EXPECT_EQ(young_dimensions(3), (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(young_dimensions(4), (std::vector<int>{1, 3, 2, 3, 1}));
  for (int n = 2; n <= 8; ++n) {
    const auto parts = partitions_of(n);
    const auto dims = young_dimensions(n);
    ASSERT_EQ(parts.size(), dims.size());
    for (std::size_t i = 0; i < parts.size(); ++i) EXPECT_EQ(dims[i], oracle::hook_length_dim(parts[i])) << n;
  }
}

TEST(Young, RejectsOutOfRange) {
  EXPECT_THROW(young_generator_matrices(1), ConfigError);
  EXPECT_THROW(young_generator_matrices(9), ConfigError);
  const auto c = build_group(parse_group_spec("cyclic:4"));
  EXPECT_THROW(young_orthogonal_irreps(c), ConfigError);
}

TEST(Young, GeneratorsSatisfyCoxeterRelations) {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& data : young_generator_matrices(n)) {
      const auto& s = data.generators;
      ASSERT_EQ(s.size(), static_cast<std::size_t>(n - 1));
      const int d = static_cast<int>(s[0].rows());
      const RMatrix id = RMatrix::Identity(d, d);
      for (std::size_t i = 0; i < s.size(); ++i) {
        EXPECT_LE((s[i] * s[i] - id).norm(), 1e-12);
        EXPECT_LE((s[i] - s[i].transpose()).norm(), 1e-12);
        if (i + 1 < s.size()) {
          EXPECT_LE((s[i] * s[i + 1] * s[i] - s[i + 1] * s[i] * s[i + 1]).norm(), 1e-12);
        }
        for (std::size_t j = i + 2; j < s.size(); ++j) EXPECT_LE((s[i] * s[j] - s[j] * s[i]).norm(), 1e-12);
      }
    }
  }
}

TEST(Young, CharactersMatchMurnaghanNakayama) {
  for (int n = 3; n <= 6; ++n) {
    const auto group = sym(n);
    const auto dual = young_orthogonal_irreps(group);
    const auto parts = partitions_of(n);
    ASSERT_EQ(dual.irreps.size(), parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto& rho = dual.irreps[i];
      for (Element g = 0; g < group.order(); ++g) {
        const double expected = static_cast<double>(oracle::mn_character(parts[i], oracle::cycle_type(group.code(g))));
        EXPECT_NEAR(rho.matrices[g].trace().real(), expected, 1e-9);
        EXPECT_NEAR(rho.matrices[g].imag().cwiseAbs().maxCoeff(), 0.0, 0.0);
      }
    }
  }
  EXPECT_EQ(oracle::mn_character({4, 1}, {2, 1, 1, 1}), 2);
  EXPECT_EQ(oracle::mn_character({1, 1, 1}, {3}), 1);
}

TEST(Young, DualStructure) {
  const auto group = sym(5);
  const auto dual = young_orthogonal_irreps(group);
  EXPECT_EQ(dual.trivial_index, 0u);
  EXPECT_EQ(dual.dims(), (std::vector<int>{1, 4, 5, 6, 5, 4, 1}));
  EXPECT_EQ(dual.irreps[1].label, "(4,1)");
  for (std::size_t i = 0; i < dual.irreps.size(); ++i) {
    const auto& rho = dual.irreps[i];
    EXPECT_EQ(dual.dual_pairing[i], i);
    EXPECT_EQ(rho.fs_type, FsType::real);
    const CMatrix id = CMatrix::Identity(rho.dim, rho.dim);
    EXPECT_LE((*rho.j_matrix - id).norm(), 0.0);
    EXPECT_LE((*rho.real_basis - id).norm(), 0.0);
  }
  RandomSource rng(2);
  EXPECT_TRUE(check_dual(dual, group, rng).ok(group.order()));
}

TEST(Young, AgreesWithRegularSplit) {
  for (int n = 3; n <= 6; ++n) {
    const auto group = sym(n);
    const auto young = young_orthogonal_irreps(group);
    RandomSource rng(static_cast<std::uint64_t>(n));
    const auto split = build_unitary_dual(group, rng);
    ASSERT_EQ(split.irreps.size(), young.irreps.size());
    std::vector<bool> used(split.irreps.size(), false);
    for (const auto& y : young.irreps) {
      bool found = false;
      for (std::size_t j = 0; j < split.irreps.size() && !found; ++j) {
        if (used[j]) continue;
        if ((split.irreps[j].character - y.character).cwiseAbs().maxCoeff() < 1e-8) {
          used[j] = true;
          found = true;
          EXPECT_EQ(split.irreps[j].fs_type, FsType::real);
        }
      }
      EXPECT_TRUE(found) << "sym:" << n << " " << y.label;
    }
  }
}

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
#include <optional>
#include <string>
#include <vector>

#include "quegraph/group.hpp"
#include "quegraph/numkit.hpp"

namespace quegraph {

// Frobenius-Schur classification; the enumerator value is the indicator.
enum class FsType : int { complex = 0, real = 1, quaternionic = -1 };

std::string_view fs_type_name(FsType type);

// One irreducible unitary representation, realised by explicit matrices.
struct Irrep {
  int dim = 0;
  std::vector<CMatrix> matrices;  // indexed by group element
  CVector character;              // indexed by conjugacy class
  FsType fs_type = FsType::complex;
  // J(v) = W conj(v) for self-dual irreps; W conj(W) = +I (real) or -I.
  std::optional<CMatrix> j_matrix;
  // For real irreps: orthonormal columns spanning V_J = {v : J(v) = v}.
  std::optional<CMatrix> real_basis;
  std::string label;  // e.g. partition "(2,1)" for Young irreps
};

struct UnitaryDual {
  std::vector<Irrep> irreps;
  // Involution: dual_pairing[i] is the index of the dual of irreps[i].
  std::vector<std::size_t> dual_pairing;
  std::size_t trivial_index = 0;

  std::vector<int> dims() const;
};

struct SplitOptions {
  double tol = 1e-8;
  int max_retries = 5;
  // Eigenvalues closer than cluster_gap * ||H||_2 share an eigenspace.
  double cluster_gap = 1e-6;
  // Characters closer than this (max-abs over classes) are equivalent.
  double character_threshold = 1e-4;
};

// Splits the right regular representation with a random self-adjoint element
// of its commutant and returns one matrix realisation per equivalence class.
// Characters, dimensions and pairing are filled in; Frobenius-Schur data is
// left for `complete_dual`.
UnitaryDual split_regular_representation(const GroupTable& group, RandomSource& rng,
                                         const SplitOptions& options = {});

// Integer indicator in {0, +1, -1}. Throws NumericalError if the raw average
// of chi(g^2) is not within 1e-6 of one of those values.
int frobenius_schur(const Irrep& irrep, const GroupTable& group);

// W with pi(g) W = W conj(pi(g)) for all g, normalised so W conj(W) = +-I.
CMatrix compute_J(const Irrep& irrep, const GroupTable& group, RandomSource& rng);

// Orthonormal basis of V_J for a real irrep (requires j_matrix).
CMatrix real_points_basis(const Irrep& irrep);

// Fills dual_pairing by matching complex-conjugate characters.
UnitaryDual pair_duals(UnitaryDual dual);

// Frobenius-Schur type, J and real structure for every irrep, then pairing.
UnitaryDual complete_dual(UnitaryDual dual, const GroupTable& group, RandomSource& rng);

// split_regular_representation followed by complete_dual.
UnitaryDual build_unitary_dual(const GroupTable& group, RandomSource& rng,
                               const SplitOptions& options = {});

// Character of Sym(n) irreps in Young's orthogonal form.
struct YoungIrrepData {
  std::vector<int> partition;
  std::vector<std::vector<int>> tableaux;  // row index of 1..n in each standard tableau
  std::vector<RMatrix> generators;         // images of (k, k+1), k = 1..n-1
};

std::vector<std::vector<int>> partitions_of(int n);  // reverse lexicographic
// Throws ConfigError unless 2 <= n <= 8.
std::vector<YoungIrrepData> young_generator_matrices(int n);
// Dimensions of Sym(n) irreps from standard-tableau counts, in partition order.
std::vector<int> young_dimensions(int n);

// Full dual of the sym:n table in Young's orthogonal form. `group` must be
// built from sym:n with 2 <= n <= 8.
UnitaryDual young_orthogonal_irreps(const GroupTable& group);

// Character of `rep` at every element as a class-indexed vector.
CVector class_character(const std::vector<CMatrix>& matrices, const GroupTable& group);

struct DualDiagnostics {
  std::size_t sum_dim_squared = 0;
  double max_homomorphism_error = 0;  // sampled triples
  double max_unitarity_error = 0;
  double max_class_function_error = 0;
  double max_orthogonality_error = 0;  // <chi_i, chi_j>/|G| - delta_ij
  double max_pairing_error = 0;
  double max_j_error = 0;              // W conj(W) -+ I and intertwining
  std::size_t trivial_count = 0;
  bool ok(std::size_t order, double tol = 1e-8) const;
};

DualDiagnostics check_dual(const UnitaryDual& dual, const GroupTable& group, RandomSource& rng);

}  // namespace quegraph

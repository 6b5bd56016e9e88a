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

#include <cstdint>
#include <string_view>
#include <vector>

#include "quegraph/group.hpp"
#include "quegraph/numkit.hpp"
#include "quegraph/repdec.hpp"

namespace quegraph {

enum class BasisModel { real, complex };
std::string_view basis_model_name(BasisModel model);

// trivial: constant function; type1/type2: real and imaginary parts of a
// matrix coefficient (non-self-dual pairs and quaternionic irreps); type3:
// real matrix coefficient of a real irrep; complex: complex model.
enum class BasisKind { trivial, type1, type2, type3, complex };
std::string_view basis_kind_name(BasisKind kind);

struct Provenance {
  std::size_t irrep = 0;
  BasisKind kind = BasisKind::trivial;
  int k = 0;  // eigenvector index
  int j = 0;  // random column index
};

// values(g) = scale * Re, Im or the full value of <pi(g) v, w>, with
// scale = sqrt(2 d/|G|) for types 1/2 and sqrt(d/|G|) otherwise.
struct BasisFunction {
  CVector values;  // imaginary part identically zero in the real model
  double eigenvalue = 0;
  Provenance provenance;
  CVector v;  // pi(A) eigenvector in the irrep space
  CVector w;  // random vector u e_j (or B o e_j for real irreps)
};

// One Haar draw per irrep (or per non-self-dual pair).
struct IrrepDraw {
  std::size_t irrep = 0;
  std::size_t partner = 0;    // == irrep unless a non-self-dual pair
  std::string_view scheme;    // "trivial", "pair", "real", "quaternionic", "complex"
  std::string_view matrix;    // "none", "unitary" or "orthogonal"
  RVector eigenvalues;        // pi(A) eigenvalues attached to indices k
  CMatrix draw;               // the Haar matrix (orthogonal draws are real)
};

struct RandomEigenbasis {
  BasisModel model = BasisModel::real;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::vector<IrrepDraw> draws;
  std::vector<BasisFunction> functions;
};

// pi(A) = sum over S (with multiplicity) of pi(s).
CMatrix rep_adjacency(const Irrep& irrep, const SymmetricSet& gens);

// Haar-random real orthonormal eigenbasis built irrep by irrep. Each irrep
// draws from rng.substream(irrep index). Throws NumericalError naming the
// irrep when a count, Gram or residual check fails.
RandomEigenbasis sample_eigenbasis(const GroupTable& group, const UnitaryDual& dual,
                                   const SymmetricSet& gens, const RandomSource& rng);

// Complex-valued variant: independent Haar unitary for every irrep.
RandomEigenbasis sample_complex_eigenbasis(const GroupTable& group, const UnitaryDual& dual,
                                           const SymmetricSet& gens, const RandomSource& rng);

// Values of every function as columns of a |G| x |B| matrix.
CMatrix basis_matrix(const RandomEigenbasis& basis);

struct BasisVerification {
  std::size_t count = 0;
  double max_gram_error = 0;
  double max_residual = 0;
  double spectrum_distance = 0;
  double completeness_error = 0;
  bool has_constant = false;
  bool gram_ok = false;
  bool residual_ok = false;
  bool spectrum_ok = false;
  bool completeness_ok = false;
  bool count_ok = false;

  bool ok() const {
    return gram_ok && residual_ok && spectrum_ok && completeness_ok && count_ok && has_constant;
  }
};

BasisVerification verify_basis(const RandomEigenbasis& basis, const CayleyGraph& cayley,
                               double gram_tol = 1e-8, double residual_tol = 1e-8,
                               double spectrum_tol = 1e-7, double completeness_tol = 1e-8);

}  // namespace quegraph

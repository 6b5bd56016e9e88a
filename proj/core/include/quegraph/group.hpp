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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace quegraph {

class RandomSource;

enum class Family { cyclic, dihedral, dicyclic, sym, alt, psl2, product };

std::string_view family_name(Family family);

// Parsed form of `family:args`, e.g. "sym:4" or "product:(sym:3,cyclic:2)".
struct GroupSpec {
  Family family = Family::cyclic;
  int parameter = 0;               // unused for products
  std::vector<GroupSpec> children; // only for products (>= 2)

  std::string to_string() const;
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

// Grammar:
//   spec   := family ":" args
//   family := cyclic | dihedral | dicyclic | sym | alt | psl2 | product
//   args   := integer | "(" spec ("," spec)+ ")"
// Throws ParseError with the byte offset of the offending token.
GroupSpec parse_group_spec(std::string_view text);

// Order of the group described by `spec`, saturating at UINT64_MAX.
std::uint64_t group_order(const GroupSpec& spec);

inline constexpr std::size_t kDefaultOrderCap = 5000;

using Element = std::uint32_t;

// A finite group as a dense multiplication table. Element 0 is the identity.
// Immutable after construction.
class GroupTable {
 public:
  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return 0; }
  Element mul(Element a, Element b) const noexcept {
    return mul_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inv(Element g) const noexcept { return inv_[g]; }

  const std::vector<std::vector<Element>>& classes() const noexcept {
    return classes_;
  }
  std::size_t class_of(Element g) const noexcept { return class_of_[g]; }
  std::size_t num_classes() const noexcept { return classes_.size(); }
  // Smallest element of class `c`.
  Element class_representative(std::size_t c) const noexcept {
    return classes_[c].front();
  }

  const std::string& name(Element g) const { return names_[g]; }
  // Family-specific canonical encoding: one-line permutation images for
  // sym/alt, (a,b,c,d) for psl2, (reflection, rotation) for dihedral, ...
  const std::vector<int>& code(Element g) const { return codes_[g]; }
  const GroupSpec& spec() const noexcept { return spec_; }

  // Finds the element whose canonical code equals `code`; throws ConfigError.
  Element find_by_code(const std::vector<int>& code) const;

  // Parses one generator word: an element index, cycle notation "(1 2)(3 4)"
  // for sym/alt (1-based points, composed right to left), or "[a,b,c,d]" for
  // psl2 (reduced mod p, must have determinant 1).
  Element parse_element(std::string_view word) const;

  // Order of `g` as a group element.
  std::size_t element_order(Element g) const;

 private:
  friend GroupTable build_group(const GroupSpec&, std::size_t);

  std::size_t order_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::vector<std::vector<Element>> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> codes_;
  GroupSpec spec_;
};

// Deterministic construction. Throws ConfigError if the order exceeds `order_cap`.
GroupTable build_group(const GroupSpec& spec, std::size_t order_cap = kDefaultOrderCap);

// Multiset of group elements closed under inversion (with multiplicity).
struct SymmetricSet {
  std::vector<Element> elements;  // sorted
  std::size_t degree() const noexcept { return elements.size(); }
};

// Inverse closure: each generator contributes itself and its inverse, an
// involution contributes once. Throws ConfigError on empty input or identity.
SymmetricSet make_symmetric_set(const GroupTable& group, const std::vector<Element>& generators);

// Random inverse-closed multiset of exactly `size` elements (see README).
SymmetricSet random_symmetric_set(const GroupTable& group, std::size_t size, RandomSource& rng);

// Comma-separated generator list: element indices, family words, or
// "random:K" (drawn from `rng`). Commas inside () or [] do not split.
SymmetricSet parse_generators(const GroupTable& group, std::string_view text, RandomSource& rng);

struct CayleyGraph {
  SymmetricSet gens;
  // (g, h) entry counts s in gens with g*s = h.
  Eigen::MatrixXi adjacency;

  std::size_t degree() const noexcept { return gens.degree(); }
};

CayleyGraph build_cayley_adjacency(const GroupTable& group, const SymmetricSet& gens);

// Permutation matrix of left translation by g: (L f)(x) = f(g^-1 x).
Eigen::MatrixXi left_translation_matrix(const GroupTable& group, Element g);

}  // namespace quegraph

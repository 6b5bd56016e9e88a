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

#include <cmath>
#include <map>
#include <numeric>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "quegraph/error.hpp"
#include "quegraph/repdec.hpp"

namespace quegraph {

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

// Yamanouchi words: rows[k] is the row holding k+1.
void tableaux_rec(const std::vector<int>& shape, std::vector<int>& filled, std::vector<int>& word,
                  std::vector<std::vector<int>>& out) {
  const int n = std::accumulate(shape.begin(), shape.end(), 0);
  if (static_cast<int>(word.size()) == n) {
    out.push_back(word);
    return;
  }
  for (std::size_t r = 0; r < shape.size(); ++r) {
    if (filled[r] >= shape[r]) continue;
    if (r > 0 && filled[r] >= filled[r - 1]) continue;
    ++filled[r];
    word.push_back(static_cast<int>(r));
    tableaux_rec(shape, filled, word, out);
    word.pop_back();
    --filled[r];
  }
}

std::vector<int> contents(const std::vector<int>& word) {
  std::vector<int> filled(word.size(), 0);
  std::vector<int> c(word.size());
  for (std::size_t k = 0; k < word.size(); ++k) {
    const int row = word[k];
    c[k] = filled[row]++ - row;
  }
  return c;
}

std::string partition_label(const std::vector<int>& p) {
  return fmt::format("({})", fmt::join(p, ","));
}

}  // namespace

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  if (n >= 1) partitions_rec(n, n, current, out);
  return out;
}

std::vector<YoungIrrepData> young_generator_matrices(int n) {
  if (n < 2 || n > 8) throw ConfigError(fmt::format("Young's orthogonal form needs 2 <= n <= 8, got {}", n));
  std::vector<YoungIrrepData> out;
  for (const auto& shape : partitions_of(n)) {
    YoungIrrepData data;
    data.partition = shape;
    std::vector<int> filled(shape.size(), 0), word;
    tableaux_rec(shape, filled, word, data.tableaux);
    const auto d = static_cast<Eigen::Index>(data.tableaux.size());
    std::map<std::vector<int>, Eigen::Index> lookup;
    for (Eigen::Index t = 0; t < d; ++t) lookup[data.tableaux[static_cast<std::size_t>(t)]] = t;
    for (int i = 0; i + 1 < n; ++i) {
      RMatrix s = RMatrix::Zero(d, d);
      for (Eigen::Index t = 0; t < d; ++t) {
        const auto& tab = data.tableaux[static_cast<std::size_t>(t)];
        const auto c = contents(tab);
        const double r = c[i + 1] - c[i];
        s(t, t) = 1.0 / r;
        if (std::abs(r) > 1.0) {
          auto swapped = tab;
          std::swap(swapped[i], swapped[i + 1]);
          s(lookup.at(swapped), t) = std::sqrt(1.0 - 1.0 / (r * r));
        }
      }
      data.generators.push_back(std::move(s));
    }
    out.push_back(std::move(data));
  }
  return out;
}

std::vector<int> young_dimensions(int n) {
  std::vector<int> dims;
  for (const auto& shape : partitions_of(n)) {
    std::vector<int> filled(shape.size(), 0), word;
    std::vector<std::vector<int>> tabs;
    tableaux_rec(shape, filled, word, tabs);
    dims.push_back(static_cast<int>(tabs.size()));
  }
  return dims;
}

UnitaryDual young_orthogonal_irreps(const GroupTable& group) {
  const GroupSpec& spec = group.spec();
  if (spec.family != Family::sym) throw ConfigError("Young's orthogonal form needs a sym:n group");
  const int n = spec.parameter;
  const auto data = young_generator_matrices(n);

  std::vector<Element> transpositions;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> code(static_cast<std::size_t>(n));
    std::iota(code.begin(), code.end(), 0);
    std::swap(code[i], code[i + 1]);
    transpositions.push_back(group.find_by_code(code));
  }

  // Breadth-first order over the Cayley graph of adjacent transpositions,
  // recording for every element a parent and the generator that reaches it.
  const std::size_t order = group.order();
  std::vector<std::int64_t> parent(order, -1);
  std::vector<int> via(order, -1);
  std::vector<Element> bfs{group.identity()};
  parent[group.identity()] = group.identity();
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    const Element g = bfs[head];
    for (int i = 0; i + 1 < n; ++i) {
      const Element next = group.mul(g, transpositions[static_cast<std::size_t>(i)]);
      if (parent[next] >= 0) continue;
      parent[next] = g;
      via[next] = i;
      bfs.push_back(next);
    }
  }

  UnitaryDual dual;
  for (const auto& irrep_data : data) {
    Irrep irrep;
    irrep.dim = static_cast<int>(irrep_data.tableaux.size());
    const auto d = static_cast<Eigen::Index>(irrep.dim);
    irrep.matrices.assign(order, CMatrix());
    irrep.matrices[group.identity()] = CMatrix::Identity(d, d);
    for (std::size_t k = 1; k < bfs.size(); ++k) {
      const Element g = bfs[k];
      irrep.matrices[g] = irrep.matrices[static_cast<Element>(parent[g])] *
                          irrep_data.generators[static_cast<std::size_t>(via[g])].cast<Complex>();
    }
    irrep.character = class_character(irrep.matrices, group);
    irrep.fs_type = FsType::real;
    irrep.j_matrix = CMatrix::Identity(d, d);
    irrep.real_basis = CMatrix::Identity(d, d);
    irrep.label = partition_label(irrep_data.partition);
    dual.irreps.push_back(std::move(irrep));
  }
  dual.trivial_index = 0;
  dual.dual_pairing.resize(dual.irreps.size());
  std::iota(dual.dual_pairing.begin(), dual.dual_pairing.end(), std::size_t{0});
  return dual;
}

}  // namespace quegraph

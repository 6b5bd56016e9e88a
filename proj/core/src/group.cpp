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

#include "quegraph/group.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>
#include <numeric>
#include <string>

#include <fmt/format.h>

#include "quegraph/error.hpp"
#include "quegraph/numkit.hpp"

namespace quegraph {

namespace {

struct FamilyEntry {
  std::string_view name;
  Family family;
};

constexpr std::array<FamilyEntry, 7> kFamilies{{
    {"cyclic", Family::cyclic},
    {"dihedral", Family::dihedral},
    {"dicyclic", Family::dicyclic},
    {"sym", Family::sym},
    {"alt", Family::alt},
    {"psl2", Family::psl2},
    {"product", Family::product},
}};

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec spec = parse_spec();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected trailing input", pos_);
    }
    return spec;
  }

 private:
  GroupSpec parse_spec() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'z') ++pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9' && pos_ > start) ++pos_;
    const std::string_view word = text_.substr(start, pos_ - start);
    const auto it = std::find_if(kFamilies.begin(), kFamilies.end(),
                                 [&](const FamilyEntry& e) { return e.name == word; });
    if (it == kFamilies.end()) {
      throw ParseError(fmt::format("unknown group family '{}'", word), start);
    }
    expect(':');
    GroupSpec spec;
    spec.family = it->family;
    if (peek() == '(') {
      const std::size_t paren = pos_;
      ++pos_;
      spec.children.push_back(parse_spec());
      while (peek() == ',') {
        ++pos_;
        spec.children.push_back(parse_spec());
      }
      expect(')');
      if (spec.children.size() < 2) {
        throw ParseError("a parenthesised argument list needs at least two specs", paren);
      }
      if (spec.family != Family::product) {
        throw ParseError(fmt::format("{} takes an integer parameter", word), paren);
      }
      return spec;
    }
    const std::size_t num_start = pos_;
    spec.parameter = parse_integer();
    if (spec.family == Family::product) {
      throw ParseError("product takes a parenthesised list of specs", num_start);
    }
    validate(spec, num_start);
    return spec;
  }

  static void validate(const GroupSpec& spec, std::size_t offset) {
    const int n = spec.parameter;
    switch (spec.family) {
      case Family::cyclic:
      case Family::dihedral:
      case Family::sym:
      case Family::alt:
        if (n < 1) throw ParseError(fmt::format("parameter must be >= 1, got {}", n), offset);
        break;
      case Family::dicyclic:
        if (n < 2) {
          throw ParseError(fmt::format("dicyclic parameter must be >= 2, got {}", n), offset);
        }
        break;
      case Family::psl2:
        if (!is_odd_prime(n)) {
          throw ParseError(fmt::format("{} is not an odd prime", n), offset);
        }
        break;
      case Family::product:
        break;
    }
  }

  int parse_integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    if (pos_ == start) throw ParseError("expected an integer", start);
    if (pos_ - start > 9) throw ParseError("integer parameter too large", start);
    int value = 0;
    std::from_chars(text_.data() + start, text_.data() + pos_, value);
    return value;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) throw ParseError(fmt::format("expected '{}'", c), pos_);
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f = saturating_mul(f, static_cast<std::uint64_t>(i));
  return f;
}

// Intermediate representation shared by the family builders.
struct RawGroup {
  std::size_t n = 0;
  std::vector<Element> mul;
  std::vector<std::string> names;
  std::vector<std::vector<int>> codes;
};

std::string power_name(std::string_view base, int k) {
  if (k == 0) return "e";
  if (k == 1) return std::string(base);
  return fmt::format("{}^{}", base, k);
}

RawGroup build_cyclic(int n) {
  RawGroup g;
  g.n = static_cast<std::size_t>(n);
  g.mul.resize(g.n * g.n);
  for (int a = 0; a < n; ++a) {
    g.names.push_back(power_name("r", a));
    g.codes.push_back({a});
    for (int b = 0; b < n; ++b) g.mul[a * g.n + b] = static_cast<Element>((a + b) % n);
  }
  return g;
}

// r^a s^f with index f*n + a; s r s = r^-1.
RawGroup build_dihedral(int n) {
  RawGroup g;
  g.n = 2 * static_cast<std::size_t>(n);
  g.mul.resize(g.n * g.n);
  auto index = [n](int f, int a) { return static_cast<Element>(f * n + (((a % n) + n) % n)); };
  for (int f = 0; f < 2; ++f) {
    for (int a = 0; a < n; ++a) {
      std::string name = power_name("r", a);
      if (f == 1) name = (a == 0) ? "s" : name + " s";
      g.names.push_back(name);
      g.codes.push_back({f, a});
    }
  }
  for (int f = 0; f < 2; ++f) {
    for (int a = 0; a < n; ++a) {
      for (int h = 0; h < 2; ++h) {
        for (int b = 0; b < n; ++b) {
          const int rot = f == 0 ? a + b : a - b;
          g.mul[index(f, a) * g.n + index(h, b)] = index((f + h) % 2, rot);
        }
      }
    }
  }
  return g;
}

// a^k x^f with index f*2n + k; a^{2n} = 1, x^2 = a^n, x^-1 a x = a^-1.
RawGroup build_dicyclic(int n) {
  const int m = 2 * n;
  RawGroup g;
  g.n = 2 * static_cast<std::size_t>(m);
  g.mul.resize(g.n * g.n);
  auto index = [m](int f, int k) { return static_cast<Element>(f * m + (((k % m) + m) % m)); };
  for (int f = 0; f < 2; ++f) {
    for (int k = 0; k < m; ++k) {
      std::string name = power_name("a", k);
      if (f == 1) name = (k == 0) ? "x" : name + " x";
      g.names.push_back(name);
      g.codes.push_back({f, k});
    }
  }
  for (int f = 0; f < 2; ++f) {
    for (int k = 0; k < m; ++k) {
      for (int h = 0; h < 2; ++h) {
        for (int l = 0; l < m; ++l) {
          Element r;
          if (f == 0) {
            r = index(h, k + l);
          } else if (h == 0) {
            r = index(1, k - l);
          } else {
            r = index(0, k - l + n);
          }
          g.mul[index(f, k) * g.n + index(h, l)] = r;
        }
      }
    }
  }
  return g;
}

std::string cycle_name(const std::vector<int>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm[start] == static_cast<int>(start)) continue;
    out += '(';
    std::size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first) out += ' ';
      out += std::to_string(i + 1);
      first = false;
      i = static_cast<std::size_t>(perm[i]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

// Lexicographic rank of a permutation of {0..n-1}.
std::size_t perm_rank(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::size_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) {
      if (perm[j] < perm[i]) ++smaller;
    }
    rank = rank * static_cast<std::size_t>(n - i) + static_cast<std::size_t>(smaller);
  }
  return rank;
}

bool is_even(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[j] < perm[i]) ++inversions;
    }
  }
  return inversions % 2 == 0;
}

// Permutations in lexicographic order of their one-line images; the product
// is composition (s*t)(i) = s(t(i)).
RawGroup build_permutations(int n, bool even_only) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  const std::size_t total = static_cast<std::size_t>(factorial(n));
  std::vector<std::int64_t> rank_to_index(total, -1);
  RawGroup g;
  do {
    if (even_only && !is_even(perm)) continue;
    rank_to_index[perm_rank(perm)] = static_cast<std::int64_t>(g.codes.size());
    g.codes.push_back(perm);
    g.names.push_back(cycle_name(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  g.n = g.codes.size();
  g.mul.resize(g.n * g.n);
  std::vector<int> prod(static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < g.n; ++a) {
    const auto& pa = g.codes[a];
    for (std::size_t b = 0; b < g.n; ++b) {
      const auto& pb = g.codes[b];
      for (int i = 0; i < n; ++i) prod[i] = pa[pb[i]];
      g.mul[a * g.n + b] = static_cast<Element>(rank_to_index[perm_rank(prod)]);
    }
  }
  return g;
}

struct Mat2 {
  int a, b, c, d;
};

// Canonical representative of {M, -M}: first nonzero entry in 1..(p-1)/2.
Mat2 canonical_psl2(Mat2 m, int p) {
  auto md = [p](int x) { return ((x % p) + p) % p; };
  m = {md(m.a), md(m.b), md(m.c), md(m.d)};
  const int first = m.a != 0 ? m.a : (m.b != 0 ? m.b : (m.c != 0 ? m.c : m.d));
  if (first > (p - 1) / 2) m = {md(-m.a), md(-m.b), md(-m.c), md(-m.d)};
  return m;
}

RawGroup build_psl2(int p) {
  std::vector<Mat2> elems;
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      for (int c = 0; c < p; ++c) {
        for (int d = 0; d < p; ++d) {
          if (((a * d - b * c) % p + p) % p != 1) continue;
          const Mat2 m{a, b, c, d};
          const Mat2 can = canonical_psl2(m, p);
          if (can.a == a && can.b == b && can.c == c && can.d == d) elems.push_back(m);
        }
      }
    }
  }
  // Generated in lexicographic order already; move the identity to the front.
  const auto id = std::find_if(elems.begin(), elems.end(), [](const Mat2& m) {
    return m.a == 1 && m.b == 0 && m.c == 0 && m.d == 1;
  });
  std::rotate(elems.begin(), id, id + 1);

  const std::size_t p4 = static_cast<std::size_t>(p) * p * p * p;
  std::vector<Element> lookup(p4, 0);
  auto key = [p](const Mat2& m) {
    return ((static_cast<std::size_t>(m.a) * p + m.b) * p + m.c) * p + m.d;
  };
  RawGroup g;
  g.n = elems.size();
  for (std::size_t i = 0; i < g.n; ++i) {
    const Mat2& m = elems[i];
    lookup[key(m)] = static_cast<Element>(i);
    g.codes.push_back({m.a, m.b, m.c, m.d});
    g.names.push_back(fmt::format("[{} {}; {} {}]", m.a, m.b, m.c, m.d));
  }
  g.mul.resize(g.n * g.n);
  for (std::size_t i = 0; i < g.n; ++i) {
    const Mat2& x = elems[i];
    for (std::size_t j = 0; j < g.n; ++j) {
      const Mat2& y = elems[j];
      const Mat2 prod = canonical_psl2({x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                                        x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d},
                                       p);
      g.mul[i * g.n + j] = lookup[key(prod)];
    }
  }
  return g;
}

RawGroup build_raw(const GroupSpec& spec);

// Tuples in lexicographic order, first factor most significant.
RawGroup build_product(const std::vector<GroupSpec>& children) {
  std::vector<RawGroup> factors;
  for (const auto& child : children) factors.push_back(build_raw(child));
  RawGroup g;
  g.n = 1;
  for (const auto& f : factors) g.n *= f.n;
  std::vector<std::size_t> digits(factors.size());
  auto split = [&](std::size_t idx, std::vector<std::size_t>& out) {
    for (std::size_t k = factors.size(); k-- > 0;) {
      out[k] = idx % factors[k].n;
      idx /= factors[k].n;
    }
  };
  for (std::size_t i = 0; i < g.n; ++i) {
    split(i, digits);
    std::string name = "(";
    std::vector<int> code;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) name += ", ";
      name += factors[k].names[digits[k]];
      code.push_back(static_cast<int>(digits[k]));
    }
    g.names.push_back(name + ")");
    g.codes.push_back(std::move(code));
  }
  g.mul.resize(g.n * g.n);
  std::vector<std::size_t> da(factors.size()), db(factors.size());
  for (std::size_t i = 0; i < g.n; ++i) {
    split(i, da);
    for (std::size_t j = 0; j < g.n; ++j) {
      split(j, db);
      std::size_t idx = 0;
      for (std::size_t k = 0; k < factors.size(); ++k) {
        idx = idx * factors[k].n + factors[k].mul[da[k] * factors[k].n + db[k]];
      }
      g.mul[i * g.n + j] = static_cast<Element>(idx);
    }
  }
  return g;
}

RawGroup build_raw(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::cyclic: return build_cyclic(spec.parameter);
    case Family::dihedral: return build_dihedral(spec.parameter);
    case Family::dicyclic: return build_dicyclic(spec.parameter);
    case Family::sym: return build_permutations(spec.parameter, false);
    case Family::alt: return build_permutations(spec.parameter, true);
    case Family::psl2: return build_psl2(spec.parameter);
    case Family::product: return build_product(spec.children);
  }
  throw ConfigError("unknown family");
}

std::vector<std::string_view> split_top_level(std::string_view text) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(text.substr(start));
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::vector<int> parse_int_list(std::string_view text, char sep) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == sep)) ++i;
    if (i >= text.size()) break;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc()) {
      throw ConfigError(fmt::format("expected an integer in '{}'", text));
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return out;
}

}  // namespace

std::string_view family_name(Family family) {
  for (const auto& e : kFamilies) {
    if (e.family == family) return e.name;
  }
  return "?";
}

std::string GroupSpec::to_string() const {
  std::string out(family_name(family));
  out += ':';
  if (family == Family::product) {
    out += '(';
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (i) out += ',';
      out += children[i].to_string();
    }
    out += ')';
  } else {
    out += std::to_string(parameter);
  }
  return out;
}

GroupSpec parse_group_spec(std::string_view text) { return SpecParser(text).parse(); }

std::uint64_t group_order(const GroupSpec& spec) {
  const auto n = static_cast<std::uint64_t>(spec.parameter);
  switch (spec.family) {
    case Family::cyclic: return n;
    case Family::dihedral: return 2 * n;
    case Family::dicyclic: return 4 * n;
    case Family::sym: return factorial(spec.parameter);
    case Family::alt: return spec.parameter <= 1 ? 1 : factorial(spec.parameter) / 2;
    case Family::psl2: return saturating_mul(n, n * n - 1) / 2;
    case Family::product: {
      std::uint64_t order = 1;
      for (const auto& c : spec.children) order = saturating_mul(order, group_order(c));
      return order;
    }
  }
  return 0;
}

GroupTable build_group(const GroupSpec& spec, std::size_t order_cap) {
  const std::uint64_t expected = group_order(spec);
  if (expected > order_cap) {
    throw ConfigError(fmt::format("group {} has order {} which exceeds the cap {}",
                                  spec.to_string(), expected, order_cap));
  }
  RawGroup raw = build_raw(spec);
  if (raw.n != expected) {
    throw NumericalError(fmt::format("constructed {} elements for {}, expected {}", raw.n,
                                     spec.to_string(), expected));
  }

  GroupTable table;
  table.order_ = raw.n;
  table.mul_ = std::move(raw.mul);
  table.names_ = std::move(raw.names);
  table.codes_ = std::move(raw.codes);
  table.spec_ = spec;

  const std::size_t n = table.order_;
  table.inv_.assign(n, 0);
  for (std::size_t g = 0; g < n; ++g) {
    const Element* row = &table.mul_[g * n];
    const auto it = std::find(row, row + n, Element{0});
    table.inv_[g] = static_cast<Element>(it - row);
  }

  constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();
  table.class_of_.assign(n, kUnassigned);
  for (std::size_t g = 0; g < n; ++g) {
    if (table.class_of_[g] != kUnassigned) continue;
    const std::size_t c = table.classes_.size();
    std::vector<Element> members;
    for (std::size_t h = 0; h < n; ++h) {
      const Element conj = table.mul(table.mul(static_cast<Element>(h), static_cast<Element>(g)),
                                     table.inv_[h]);
      if (table.class_of_[conj] == kUnassigned) {
        table.class_of_[conj] = c;
        members.push_back(conj);
      }
    }
    std::sort(members.begin(), members.end());
    table.classes_.push_back(std::move(members));
  }
  return table;
}

Element GroupTable::find_by_code(const std::vector<int>& code) const {
  const auto it = std::find(codes_.begin(), codes_.end(), code);
  if (it == codes_.end()) {
    throw ConfigError(fmt::format("no element of {} has this encoding", spec_.to_string()));
  }
  return static_cast<Element>(it - codes_.begin());
}

Element GroupTable::parse_element(std::string_view word) const {
  word = trim(word);
  if (word.empty()) throw ConfigError("empty generator word");
  if (word.front() == '(') {
    if (spec_.family != Family::sym && spec_.family != Family::alt) {
      throw ConfigError("cycle notation is only valid for sym and alt groups");
    }
    const int n = spec_.parameter;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    // Cycles compose right to left: apply the rightmost cycle first.
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    while (i < word.size()) {
      if (word[i] != '(') throw ConfigError(fmt::format("malformed cycle word '{}'", word));
      const std::size_t close = word.find(')', i);
      if (close == std::string_view::npos) {
        throw ConfigError(fmt::format("unterminated cycle in '{}'", word));
      }
      cycles.push_back(parse_int_list(word.substr(i + 1, close - i - 1), ' '));
      i = close + 1;
      while (i < word.size() && word[i] == ' ') ++i;
    }
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
      const auto& cyc = *it;
      std::vector<bool> used(static_cast<std::size_t>(n), false);
      for (int point : cyc) {
        if (point < 1 || point > n || used[point - 1]) {
          throw ConfigError(fmt::format("invalid point {} in cycle word '{}'", point, word));
        }
        used[point - 1] = true;
      }
      std::vector<int> step(static_cast<std::size_t>(n));
      std::iota(step.begin(), step.end(), 0);
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        step[cyc[k] - 1] = cyc[(k + 1) % cyc.size()] - 1;
      }
      std::vector<int> next(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) next[x] = step[perm[x]];
      perm = std::move(next);
    }
    if (spec_.family == Family::alt && !is_even(perm)) {
      throw ConfigError(fmt::format("'{}' is an odd permutation, not in alt:{}", word, n));
    }
    return find_by_code(perm);
  }
  if (word.front() == '[') {
    if (spec_.family != Family::psl2) {
      throw ConfigError("matrix words are only valid for psl2 groups");
    }
    if (word.back() != ']') throw ConfigError(fmt::format("malformed matrix word '{}'", word));
    const auto entries = parse_int_list(word.substr(1, word.size() - 2), ',');
    if (entries.size() != 4) {
      throw ConfigError(fmt::format("matrix word '{}' needs four entries", word));
    }
    const int p = spec_.parameter;
    const long det = (static_cast<long>(entries[0]) * entries[3] -
                      static_cast<long>(entries[1]) * entries[2]) % p;
    if ((det + p) % p != 1) {
      throw ConfigError(fmt::format("matrix word '{}' does not have determinant 1 mod {}", word, p));
    }
    const Mat2 can = canonical_psl2({entries[0], entries[1], entries[2], entries[3]}, p);
    return find_by_code({can.a, can.b, can.c, can.d});
  }
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw ConfigError(fmt::format("cannot parse generator '{}'", word));
  }
  if (value >= order_) {
    throw ConfigError(fmt::format("element index {} out of range for order {}", value, order_));
  }
  return static_cast<Element>(value);
}

std::size_t GroupTable::element_order(Element g) const {
  std::size_t k = 1;
  Element x = g;
  while (x != 0) {
    x = mul(x, g);
    ++k;
  }
  return k;
}

SymmetricSet make_symmetric_set(const GroupTable& group, const std::vector<Element>& generators) {
  if (generators.empty()) throw ConfigError("generator list is empty");
  SymmetricSet s;
  for (Element g : generators) {
    if (g >= group.order()) throw ConfigError(fmt::format("generator {} out of range", g));
    if (g == group.identity()) throw ConfigError("the identity cannot be a generator");
    s.elements.push_back(g);
    if (group.inv(g) != g) s.elements.push_back(group.inv(g));
  }
  std::sort(s.elements.begin(), s.elements.end());
  return s;
}

SymmetricSet random_symmetric_set(const GroupTable& group, std::size_t size, RandomSource& rng) {
  if (size == 0) throw ConfigError("random generating set size must be positive");
  const std::size_t n = group.order();
  std::vector<Element> involutions, others;
  for (Element g = 1; g < n; ++g) {
    (group.inv(g) == g ? involutions : others).push_back(g);
  }
  if (size % 2 == 1 && involutions.empty()) {
    throw ConfigError(fmt::format("{} has no involutions; a symmetric set of odd size {} is impossible",
                                  group.spec().to_string(), size));
  }
  if (n < 2) throw ConfigError("the trivial group has no generators");
  std::vector<bool> used(n, false);
  std::vector<Element> elems;
  auto pick_unused = [&](const std::vector<Element>& pool) -> Element {
    std::vector<Element> fresh;
    for (Element g : pool) {
      if (!used[g]) fresh.push_back(g);
    }
    const auto& from = fresh.empty() ? pool : fresh;
    return from[rng.index(from.size())];
  };
  while (elems.size() < size) {
    const std::size_t remaining = size - elems.size();
    Element g;
    if (remaining == 1) {
      g = pick_unused(involutions);
    } else {
      std::vector<Element> nonid;
      for (Element h = 1; h < n; ++h) nonid.push_back(h);
      g = pick_unused(nonid);
    }
    used[g] = true;
    used[group.inv(g)] = true;
    elems.push_back(g);
    if (group.inv(g) != g) elems.push_back(group.inv(g));
  }
  std::sort(elems.begin(), elems.end());
  return SymmetricSet{std::move(elems)};
}

SymmetricSet parse_generators(const GroupTable& group, std::string_view text, RandomSource& rng) {
  text = trim(text);
  if (text.empty()) throw ConfigError("generator list is empty");
  if (text.starts_with("random:")) {
    std::size_t size = 0;
    const auto rest = text.substr(7);
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), size);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) {
      throw ConfigError(fmt::format("cannot parse random generator size in '{}'", text));
    }
    return random_symmetric_set(group, size, rng);
  }
  std::vector<Element> gens;
  for (auto part : split_top_level(text)) gens.push_back(group.parse_element(part));
  return make_symmetric_set(group, gens);
}

CayleyGraph build_cayley_adjacency(const GroupTable& group, const SymmetricSet& gens) {
  const auto n = static_cast<Eigen::Index>(group.order());
  CayleyGraph graph;
  graph.gens = gens;
  graph.adjacency = Eigen::MatrixXi::Zero(n, n);
  for (Eigen::Index g = 0; g < n; ++g) {
    for (Element s : gens.elements) {
      graph.adjacency(g, group.mul(static_cast<Element>(g), s)) += 1;
    }
  }
  return graph;
}

Eigen::MatrixXi left_translation_matrix(const GroupTable& group, Element g) {
  const auto n = static_cast<Eigen::Index>(group.order());
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(n, n);
  const Element ginv = group.inv(g);
  for (Eigen::Index x = 0; x < n; ++x) m(x, group.mul(ginv, static_cast<Element>(x))) = 1;
  return m;
}

}  // namespace quegraph

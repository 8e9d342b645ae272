// Copyright 2025 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bfml/binary_function.hpp"
#include "bfml/errors.hpp"
#include "bfml/rank.hpp"
#include "bfml/rational.hpp"
#include "bfml/subset.hpp"

namespace bfml {

// The five membership classes. Matroidal is polymatroidal with k = 1.
struct ClassId {
  enum class Kind { Stable, Rankable, Linear, Polymatroidal, Matroidal };
  Kind kind = Kind::Stable;
  int k = 1;

  static ClassId stable() { return {Kind::Stable, 1}; }
  static ClassId rankable() { return {Kind::Rankable, 1}; }
  static ClassId linear() { return {Kind::Linear, 1}; }
  static ClassId polymatroidal(int k) {
    if (k < 1) throw BadParameters("k must be a positive integer");
    return {Kind::Polymatroidal, k};
  }
  static ClassId matroidal() { return {Kind::Matroidal, 1}; }

  int effective_k() const { return kind == Kind::Matroidal ? 1 : k; }

  std::string name() const {
    switch (kind) {
      case Kind::Stable: return "stable";
      case Kind::Rankable: return "rankable";
      case Kind::Linear: return "linear";
      case Kind::Polymatroidal: return "polymatroidal(" + std::to_string(k) + ")";
      case Kind::Matroidal: return "matroidal";
    }
    return "?";
  }

  friend bool operator==(const ClassId& a, const ClassId& b) {
    return a.kind == b.kind && a.effective_k() == b.effective_k();
  }
};

enum class Axiom { R0, R1, R2, R3, NotRankable };

inline std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::R0: return "R0";
    case Axiom::R1: return "R1";
    case Axiom::R2: return "R2";
    case Axiom::R3: return "R3";
    case Axiom::NotRankable: return "NotRankable";
  }
  return "?";
}

// One failed axiom with the subsets realising the failure and the exact
// offending values.
struct AxiomViolation {
  Axiom axiom;
  std::vector<subset_t> witnesses;
  std::string detail;
};

// {0,1}-valued with support closed under symmetric difference: the indicator
// function of a GF(2)-linear space.
inline bool is_linear(const BinaryFunction& f) {
  std::vector<subset_t> support;
  for (subset_t m = 0; m <= f.full_set(); ++m) {
    const Rational& v = f.value(m);
    if (v == 1)
      support.push_back(m);
    else if (v != 0)
      return false;
  }
  for (std::size_t i = 0; i < support.size(); ++i)
    for (std::size_t j = i + 1; j < support.size(); ++j)
      if (f.value(support[i] ^ support[j]) != 1) return false;
  return true;
}

namespace detail {

inline std::string describe_rank(const Rational& ratio) {
  if (auto e = exact_log2(ratio)) return std::to_string(*e);
  return "log2(" + format_rational(ratio) + ")";
}

}  // namespace detail

// Tests whether Qf is a k-polymatroid rank function. Returns one violation
// per failed axiom, each with the first witness in subset order. R0 is the
// exact power-of-2 test on the S-ratio; R1-R3 are exact rational comparisons
// on the ratios, so they are decided even when R0 fails.
inline std::vector<AxiomViolation> check_polymatroid(const BinaryFunction& f, int k) {
  if (k < 1) throw BadParameters("k must be a positive integer");
  std::vector<AxiomViolation> out;
  SubsetSumTable s = subset_sums(f);
  subset_t full = s.full_set();
  for (subset_t x = 0; x <= full; ++x) {
    if (s.at(x) <= 0) {
      out.push_back({Axiom::NotRankable,
                     {x},
                     "S(" + std::to_string(x) + ") = " + format_rational(s.at(x)) +
                         " is not positive; Qf is undefined"});
      return out;
    }
  }
  std::vector<Rational> ratio(s.sums.size());
  for (subset_t x = 0; x <= full; ++x) ratio[x] = Rational(s.at(full) / s.at(full & ~x));

  int n = f.order();
  std::optional<AxiomViolation> r0, r1, r2, r3;
  for (subset_t x = 0; x <= full && !r0; ++x) {
    auto e = exact_log2(ratio[x]);
    if (!e || *e < 0)
      r0 = AxiomViolation{Axiom::R0,
                          {x},
                          "Qf(X) = " + detail::describe_rank(ratio[x]) +
                              " is not a nonnegative integer"};
  }
  for (subset_t x = 0; x <= full && !r1; ++x) {
    if (ratio[x] > pow2(static_cast<long>(k) * popcount(x)))
      r1 = AxiomViolation{Axiom::R1,
                          {x},
                          "Qf(X) = " + detail::describe_rank(ratio[x]) + " exceeds k|X| = " +
                              std::to_string(static_cast<long>(k) * popcount(x))};
  }
  for (subset_t x = 0; x <= full && !r2; ++x) {
    for (int i = 0; i < n && !r2; ++i) {
      subset_t e = subset_t{1} << i;
      if (x & e) continue;
      if (ratio[x] > ratio[x | e])
        r2 = AxiomViolation{Axiom::R2,
                            {x, x | e},
                            "Qf(X) = " + detail::describe_rank(ratio[x]) +
                                " decreases to " + detail::describe_rank(ratio[x | e]) +
                                " when adding an element"};
    }
  }
  for (subset_t x = 0; x <= full && !r3; ++x) {
    for (int i = 0; i < n && !r3; ++i) {
      subset_t a = subset_t{1} << i;
      if (x & a) continue;
      for (int j = i + 1; j < n && !r3; ++j) {
        subset_t b = subset_t{1} << j;
        if (x & b) continue;
        if (ratio[x] * ratio[x | a | b] > ratio[x | a] * ratio[x | b])
          r3 = AxiomViolation{
              Axiom::R3,
              {x, x | a, x | b, x | a | b},
              "Qf(X) + Qf(X∪{a,b}) = " + detail::describe_rank(ratio[x]) + " + " +
                  detail::describe_rank(ratio[x | a | b]) + " > " +
                  detail::describe_rank(ratio[x | a]) + " + " +
                  detail::describe_rank(ratio[x | b]) + " = Qf(X∪{a}) + Qf(X∪{b})"};
      }
    }
  }
  for (auto& v : {r0, r1, r2, r3})
    if (v) out.push_back(*v);
  return out;
}

inline bool is_matroidal(const BinaryFunction& f) {
  return check_polymatroid(f, 1).empty();
}

inline bool in_class(const BinaryFunction& f, const ClassId& c) {
  switch (c.kind) {
    case ClassId::Kind::Stable: return is_stable(f);
    case ClassId::Kind::Rankable: return is_rankable(f);
    case ClassId::Kind::Linear: return is_linear(f);
    case ClassId::Kind::Polymatroidal: return check_polymatroid(f, c.k).empty();
    case ClassId::Kind::Matroidal: return check_polymatroid(f, 1).empty();
  }
  return false;
}

// The unique (up to isomorphism) order-one binary function with value α on
// the singleton.
inline BinaryFunction family_f_alpha(const Rational& alpha) {
  return BinaryFunction({"e"}, {Rational(1), alpha});
}

// The order-two family whose members are exactly the order-two excluded
// minors of the k-polymatroidal class for every k > γ:
//   f({a}) = 2^(α+γ-β+1) - 1, f({b}) = 2^(γ+1) - 1,
//   f({a,b}) = 2^(α+γ+1) - 2^(γ+1) - 2^(α+γ-β+1) + 1,
// with ranks Q({a}) = α, Q({b}) = β, Q({a,b}) = α+γ+1.
inline BinaryFunction family_f_abc(long alpha, long beta, long gamma) {
  if (!(0 <= alpha && alpha <= beta && beta <= gamma))
    throw BadParameters("need 0 ≤ α ≤ β ≤ γ");
  auto p2 = [](long e) {
    Integer x = 1;
    mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return x;
  };
  Integer va = p2(alpha + gamma - beta + 1) - 1;
  Integer vb = p2(gamma + 1) - 1;
  Integer vab = p2(alpha + gamma + 1) - p2(gamma + 1) - p2(alpha + gamma - beta + 1) + 1;
  return BinaryFunction({"a", "b"},
                        {Rational(1), Rational(va), Rational(vb), Rational(vab)});
}

// The order-four function whose rank function is that of the rank-2 uniform
// matroid on four elements: 0 on singletons and pairs, 1 on ∅ and triples,
// -1 on the full set.
inline BinaryFunction family_f_u24() {
  std::vector<Rational> table(16);
  for (subset_t m = 0; m < 16; ++m) {
    switch (popcount(m)) {
      case 0: case 3: table[m] = 1; break;
      case 4: table[m] = -1; break;
      default: table[m] = 0; break;
    }
  }
  return BinaryFunction(default_labels(4), std::move(table));
}

// An integer matroid rank oracle, dense over all subsets, validated against
// the rank axioms (the k = 1 instances of R0-R3) at construction.
struct MatroidRank {
  std::vector<std::string> ground_set;
  std::vector<long long> rank_of;  // dense by subset mask

  MatroidRank(std::vector<std::string> ground, std::vector<long long> ranks)
      : ground_set(std::move(ground)), rank_of(std::move(ranks)) {
    if (ground_set.size() > static_cast<std::size_t>(kMaxOrder))
      throw OrderTooLarge("matroid order exceeds the cap");
    if (rank_of.size() != (std::size_t{1} << ground_set.size()))
      throw SizeMismatch("rank table has wrong size");
    int n = static_cast<int>(ground_set.size());
    subset_t full = static_cast<subset_t>(rank_of.size() - 1);
    if (rank_of[0] != 0) throw BadParameters("rank of ∅ must be 0");
    for (subset_t x = 0; x <= full; ++x) {
      if (rank_of[x] < 0 || rank_of[x] > popcount(x))
        throw BadParameters("rank must satisfy 0 ≤ r(X) ≤ |X|");
      for (int i = 0; i < n; ++i) {
        subset_t a = subset_t{1} << i;
        if (x & a) continue;
        if (rank_of[x] > rank_of[x | a])
          throw BadParameters("rank must be monotone");
        for (int j = i + 1; j < n; ++j) {
          subset_t b = subset_t{1} << j;
          if (x & b) continue;
          if (rank_of[x] + rank_of[x | a | b] > rank_of[x | a] + rank_of[x | b])
            throw BadParameters("rank must be submodular");
        }
      }
    }
  }

  int order() const { return static_cast<int>(ground_set.size()); }
  long long at(subset_t x) const { return rank_of[x]; }
};

inline BinaryFunction from_rank_function(const MatroidRank& m) {
  return from_rank_function(m.ground_set, m.rank_of);
}

// rank(X) = min(r, |X|).
inline MatroidRank uniform_matroid_rank(int r, int n) {
  if (n < 1 || r < 0 || r > n) throw BadParameters("need 0 ≤ r ≤ n and n ≥ 1");
  std::vector<long long> ranks(std::size_t{1} << n);
  for (subset_t x = 0; x < ranks.size(); ++x)
    ranks[x] = std::min(r, popcount(x));
  return MatroidRank(default_labels(n), std::move(ranks));
}

// rank(X) = GF(2) rank of the chosen columns, by elimination.
inline MatroidRank gf2_matroid_rank(const std::vector<std::vector<int>>& columns) {
  int n = static_cast<int>(columns.size());
  if (n > kMaxOrder) throw OrderTooLarge("too many columns");
  std::size_t dim = columns.empty() ? 0 : columns[0].size();
  if (dim > 64) throw DimensionMismatch("column dimension exceeds 64");
  std::vector<std::uint64_t> masks(n, 0);
  for (int j = 0; j < n; ++j) {
    if (columns[j].size() != dim)
      throw DimensionMismatch("columns have differing dimensions");
    for (std::size_t i = 0; i < dim; ++i) {
      if (columns[j][i] != 0 && columns[j][i] != 1)
        throw BadParameters("GF(2) entries must be 0 or 1");
      if (columns[j][i]) masks[j] |= std::uint64_t{1} << i;
    }
  }
  std::vector<long long> ranks(std::size_t{1} << n);
  std::vector<std::uint64_t> pivot(64);
  for (subset_t x = 0; x < ranks.size(); ++x) {
    std::fill(pivot.begin(), pivot.end(), 0);
    long long r = 0;
    for (int j = 0; j < n; ++j) {
      if (!(x & (subset_t{1} << j))) continue;
      std::uint64_t v = masks[j];
      while (v) {
        int t = 63 - std::countl_zero(v);
        if (!pivot[t]) {
          pivot[t] = v;
          ++r;
          break;
        }
        v ^= pivot[t];
      }
    }
    ranks[x] = r;
  }
  return MatroidRank(default_labels(n), std::move(ranks));
}

// rank(X) = (vertices touched by X) - (components of the subgraph X).
inline MatroidRank graphic_matroid_rank(
    const std::vector<std::pair<std::string, std::string>>& edges) {
  int n = static_cast<int>(edges.size());
  if (n > kMaxOrder) throw OrderTooLarge("too many edges");
  std::map<std::string, int> vertex_id;
  std::vector<std::pair<int, int>> ends;
  for (const auto& [u, v] : edges) {
    int a = vertex_id.emplace(u, static_cast<int>(vertex_id.size())).first->second;
    int b = vertex_id.emplace(v, static_cast<int>(vertex_id.size())).first->second;
    ends.emplace_back(a, b);
  }
  int vertices = static_cast<int>(vertex_id.size());
  std::vector<long long> ranks(std::size_t{1} << n);
  std::vector<int> parent(vertices);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (subset_t x = 0; x < ranks.size(); ++x) {
    for (int v = 0; v < vertices; ++v) parent[v] = v;
    long long r = 0;
    for (int j = 0; j < n; ++j) {
      if (!(x & (subset_t{1} << j))) continue;
      int a = find(ends[j].first), b = find(ends[j].second);
      if (a != b) {
        parent[a] = b;
        ++r;  // spanning-forest edge
      }
    }
    ranks[x] = r;
  }
  return MatroidRank(default_labels(n), std::move(ranks));
}

}  // namespace bfml

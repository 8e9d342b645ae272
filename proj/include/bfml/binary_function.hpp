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
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bfml/errors.hpp"
#include "bfml/rational.hpp"
#include "bfml/subset.hpp"

namespace bfml {

// A set function f : 2^E -> Q with f(∅) = 1, stored as a dense table of
// exact rationals indexed by subset bitmask over the ground-set ordering.
// Immutable after construction.
class BinaryFunction {
 public:
  BinaryFunction(std::vector<std::string> ground_set, std::vector<Rational> table)
      : ground_set_(std::move(ground_set)), table_(std::move(table)) {
    if (ground_set_.size() > static_cast<std::size_t>(kMaxOrder))
      throw OrderTooLarge("order " + std::to_string(ground_set_.size()) +
                          " exceeds the cap of " + std::to_string(kMaxOrder));
    {
      std::vector<std::string> sorted = ground_set_;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DuplicateLabel("ground-set labels must be distinct");
    }
    if (table_.size() != (std::size_t{1} << ground_set_.size()))
      throw SizeMismatch("table has " + std::to_string(table_.size()) +
                         " entries; expected 2^" + std::to_string(ground_set_.size()));
    if (table_[0] != 1)
      throw BadEmptySetValue("f(∅) must be 1, got " + format_rational(table_[0]));
  }

  int order() const { return static_cast<int>(ground_set_.size()); }
  const std::vector<std::string>& ground_set() const { return ground_set_; }
  const std::vector<Rational>& table() const { return table_; }
  subset_t full_set() const { return static_cast<subset_t>(table_.size() - 1); }

  const Rational& value(subset_t subset) const { return table_[subset]; }

  int element_index(const std::string& label) const {
    for (std::size_t i = 0; i < ground_set_.size(); ++i)
      if (ground_set_[i] == label) return static_cast<int>(i);
    throw UnknownLabel("no ground-set element named '" + label + "'");
  }

  subset_t subset_of(const std::vector<std::string>& labels) const {
    subset_t mask = 0;
    for (const auto& label : labels) mask |= subset_t{1} << element_index(label);
    return mask;
  }

  std::vector<std::string> labels_of(subset_t subset) const {
    std::vector<std::string> out;
    for (int i = 0; i < order(); ++i)
      if (subset & (subset_t{1} << i)) out.push_back(ground_set_[i]);
    return out;
  }

  friend bool operator==(const BinaryFunction& a, const BinaryFunction& b) {
    return a.ground_set_ == b.ground_set_ && a.table_ == b.table_;
  }

 private:
  std::vector<std::string> ground_set_;
  std::vector<Rational> table_;
};

inline BinaryFunction make_binary_function(std::vector<std::string> ground_set,
                                           std::vector<Rational> table) {
  return BinaryFunction(std::move(ground_set), std::move(table));
}

// The unique order-0 binary function.
inline BinaryFunction order_zero_function() {
  return BinaryFunction({}, {Rational(1)});
}

inline const Rational& evaluate(const BinaryFunction& f,
                                const std::vector<std::string>& labels) {
  return f.value(f.subset_of(labels));
}

// One deletion/contraction pair: f / contract_set \ delete_set.
struct MinorSpec {
  subset_t contract_set = 0;
  subset_t delete_set = 0;

  bool proper() const { return (contract_set | delete_set) != 0; }
  friend auto operator<=>(const MinorSpec&, const MinorSpec&) = default;
};

namespace detail {

inline void check_subset(const BinaryFunction& f, subset_t x) {
  if ((x & ~f.full_set()) != 0)
    throw UnknownLabel("subset mask lies outside the ground set");
}

inline std::vector<std::string> kept_labels(const BinaryFunction& f, subset_t removed) {
  std::vector<std::string> out;
  for (int i = 0; i < f.order(); ++i)
    if (!(removed & (subset_t{1} << i))) out.push_back(f.ground_set()[i]);
  return out;
}

}  // namespace detail

// f/X: restriction of f to subsets of E\X, values copied unchanged.
inline BinaryFunction contraction(const BinaryFunction& f, subset_t contract_set) {
  detail::check_subset(f, contract_set);
  subset_t keep = f.full_set() & ~contract_set;
  auto positions = bit_positions(keep);
  std::vector<Rational> table(std::size_t{1} << positions.size());
  for (subset_t y = 0; y < table.size(); ++y)
    table[y] = f.value(expand_mask(y, positions));
  return BinaryFunction(detail::kept_labels(f, contract_set), std::move(table));
}

// S(X) = Σ_{Z ⊆ X} f(Z), the deletion denominator.
inline Rational deletion_denominator(const BinaryFunction& f, subset_t delete_set) {
  detail::check_subset(f, delete_set);
  Rational den = 0;
  for_each_subset_of(delete_set, [&](subset_t z) { den += f.value(z); });
  return den;
}

// f\X(Y) = Σ_{Z⊆X} f(Y∪Z) / Σ_{Z⊆X} f(Z). Empty when S(X) = 0 (the minor is
// undefined; callers record this rather than treating it as failure).
inline std::optional<BinaryFunction> deletion(const BinaryFunction& f,
                                              subset_t delete_set) {
  Rational den = deletion_denominator(f, delete_set);
  if (den == 0) return std::nullopt;
  subset_t keep = f.full_set() & ~delete_set;
  auto positions = bit_positions(keep);
  std::vector<Rational> table(std::size_t{1} << positions.size());
  for (subset_t y = 0; y < table.size(); ++y) {
    subset_t base = expand_mask(y, positions);
    Rational num = 0;
    for_each_subset_of(delete_set, [&](subset_t z) { num += f.value(base | z); });
    table[y] = num / den;
  }
  return BinaryFunction(detail::kept_labels(f, delete_set), std::move(table));
}

// f / contract_set \ delete_set. Contraction first; the two orders agree
// whenever both are defined. Definedness follows the one-shot deletion
// denominator S(delete_set).
inline std::optional<BinaryFunction> minor(const BinaryFunction& f, MinorSpec spec) {
  if ((spec.contract_set & spec.delete_set) != 0)
    throw BadParameters("contract and delete sets must be disjoint");
  detail::check_subset(f, spec.contract_set | spec.delete_set);
  BinaryFunction contracted = contraction(f, spec.contract_set);
  subset_t d = 0;
  {
    auto positions = bit_positions(f.full_set() & ~spec.contract_set);
    for (std::size_t i = 0; i < positions.size(); ++i)
      if (spec.delete_set & (subset_t{1} << positions[i])) d |= subset_t{1} << i;
  }
  return deletion(contracted, d);
}

// Ground-set bijection, stored as an ordered label mapping.
using Bijection = std::map<std::string, std::string>;

inline Bijection inverse(const Bijection& phi) {
  Bijection inv;
  for (const auto& [from, to] : phi) inv.emplace(to, from);
  if (inv.size() != phi.size()) throw BadParameters("bijection is not invertible");
  return inv;
}

// g with g(φ(X)) = f(X). φ must be total on f's ground set.
inline BinaryFunction relabel(const BinaryFunction& f, const Bijection& phi) {
  if (phi.size() != static_cast<std::size_t>(f.order()))
    throw BadParameters("bijection size does not match the ground set");
  std::vector<std::string> new_labels(f.order());
  for (int i = 0; i < f.order(); ++i) {
    auto it = phi.find(f.ground_set()[i]);
    if (it == phi.end()) throw UnknownLabel("bijection misses '" + f.ground_set()[i] + "'");
    new_labels[i] = it->second;
  }
  return BinaryFunction(std::move(new_labels), f.table());
}

namespace detail {

// Scatters the bits of m through perm: bit i of m becomes bit perm[i].
inline subset_t permute_mask(subset_t m, const std::vector<int>& perm) {
  subset_t out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (m & (subset_t{1} << i)) out |= subset_t{1} << perm[i];
  return out;
}

// Sorted value multiset per subset cardinality; isomorphism invariant.
inline std::vector<std::vector<Rational>> cardinality_profile(const BinaryFunction& f) {
  std::vector<std::vector<Rational>> profile(f.order() + 1);
  for (subset_t m = 0; m <= f.full_set(); ++m)
    profile[popcount(m)].push_back(f.value(m));
  for (auto& bucket : profile) std::sort(bucket.begin(), bucket.end());
  return profile;
}

}  // namespace detail

// A witness φ with f(X) = g(φ(X)) for all X, when one exists.
inline std::optional<Bijection> isomorphism(const BinaryFunction& f,
                                            const BinaryFunction& g) {
  if (f.order() != g.order()) return std::nullopt;
  int n = f.order();
  if (n == 0) return Bijection{};
  if (detail::cardinality_profile(f) != detail::cardinality_profile(g))
    return std::nullopt;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (subset_t m = 1; m <= f.full_set(); ++m) {
      if (f.value(m) != g.value(detail::permute_mask(m, perm))) {
        match = false;
        break;
      }
    }
    if (match) {
      Bijection phi;
      for (int i = 0; i < n; ++i) phi.emplace(f.ground_set()[i], g.ground_set()[perm[i]]);
      return phi;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

inline bool are_isomorphic(const BinaryFunction& f, const BinaryFunction& g) {
  return isomorphism(f, g).has_value();
}

// Lexicographically least table over all ground-set orderings, with labels
// rewritten to the fixed alphabet a, b, c, ... Two functions are isomorphic
// iff their canonical forms are equal.
inline BinaryFunction canonical_form(const BinaryFunction& f) {
  int n = f.order();
  std::vector<int> perm(n), best_perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  best_perm = perm;
  while (std::next_permutation(perm.begin(), perm.end())) {
    // Compare lazily; most candidates lose within a few entries.
    for (subset_t m = 1; m <= f.full_set(); ++m) {
      const Rational& candidate = f.value(detail::permute_mask(m, perm));
      const Rational& incumbent = f.value(detail::permute_mask(m, best_perm));
      int c = cmp(candidate, incumbent);
      if (c < 0) {
        best_perm = perm;
        break;
      }
      if (c > 0) break;
    }
  }
  std::vector<Rational> table(f.table().size());
  for (subset_t m = 0; m <= f.full_set(); ++m)
    table[m] = f.value(detail::permute_mask(m, best_perm));
  return BinaryFunction(default_labels(n), std::move(table));
}

}  // namespace bfml

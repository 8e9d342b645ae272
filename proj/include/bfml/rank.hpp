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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bfml/binary_function.hpp"
#include "bfml/errors.hpp"
#include "bfml/rational.hpp"
#include "bfml/subset.hpp"

namespace bfml {

// S(X) = Σ_{Y ⊆ X} f(Y) for every X, dense by subset mask.
struct SubsetSumTable {
  std::vector<std::string> ground_set;
  std::vector<Rational> sums;

  const Rational& at(subset_t x) const { return sums[x]; }
  subset_t full_set() const { return static_cast<subset_t>(sums.size() - 1); }
};

// Fast zeta transform, n·2^(n-1) additions.
inline SubsetSumTable subset_sums(const BinaryFunction& f) {
  SubsetSumTable s{f.ground_set(), f.table()};
  int n = f.order();
  std::size_t size = s.sums.size();
  for (int j = 0; j < n; ++j) {
    subset_t bit = subset_t{1} << j;
    for (std::size_t m = 0; m < size; ++m)
      if (m & bit) s.sums[m] += s.sums[m ^ bit];
  }
  return s;
}

// Inverse of subset_sums: f(X) = Σ_{Y⊆X} (-1)^{|X\Y|} S(Y).
inline BinaryFunction mobius_invert(const SubsetSumTable& s) {
  if (s.sums.empty() || s.sums[0] != 1)
    throw BadEmptySetValue("S(∅) must be 1");
  std::vector<Rational> table = s.sums;
  int n = static_cast<int>(s.ground_set.size());
  for (int j = 0; j < n; ++j) {
    subset_t bit = subset_t{1} << j;
    for (std::size_t m = 0; m < table.size(); ++m)
      if (m & bit) table[m] -= table[m ^ bit];
  }
  return BinaryFunction(s.ground_set, std::move(table));
}

// Every deletion denominator arising in any f/X\Y equals some S(D), so the
// minors of f are all well defined iff no subset sum vanishes.
inline bool is_stable(const BinaryFunction& f) {
  SubsetSumTable s = subset_sums(f);
  for (const Rational& v : s.sums)
    if (v == 0) return false;
  return true;
}

// The rank transform is defined everywhere iff every subset sum is positive.
inline bool is_rankable(const BinaryFunction& f) {
  SubsetSumTable s = subset_sums(f);
  for (const Rational& v : s.sums)
    if (v <= 0) return false;
  return true;
}

// Qf(X) = log2(S(E)/S(E\X)), kept as the exact positive ratio S(E)/S(E\X).
// integer_log is present iff the ratio is an exact power of 2; the float
// form is for display only.
struct RankValue {
  Rational numerator;    // S(E)
  Rational denominator;  // S(E\X)
  std::optional<long> integer_log;

  Rational ratio() const {
    Rational r = numerator / denominator;
    r.canonicalize();
    return r;
  }
  double approx() const { return approx_log2(numerator) - approx_log2(denominator); }
};

inline RankValue make_rank_value(Rational numerator, Rational denominator) {
  if (numerator <= 0 || denominator <= 0)
    throw NotRankable("rank ratio parts must be positive, got " +
                      format_rational(numerator) + " / " + format_rational(denominator));
  RankValue rv{std::move(numerator), std::move(denominator), std::nullopt};
  rv.integer_log = exact_log2(rv.ratio());
  return rv;
}

// Equality of Qf values as exact S-ratios.
inline bool same_rank(const RankValue& a, const RankValue& b) {
  return a.numerator * b.denominator == b.numerator * a.denominator;
}

inline bool rank_less_equal(const RankValue& a, const RankValue& b) {
  return a.numerator * b.denominator <= b.numerator * a.denominator;
}

inline RankValue rank(const BinaryFunction& f, subset_t x) {
  detail::check_subset(f, x);
  Rational s_full = deletion_denominator(f, f.full_set());
  Rational s_rest = deletion_denominator(f, f.full_set() & ~x);
  return make_rank_value(std::move(s_full), std::move(s_rest));
}

struct RankFunction {
  std::vector<std::string> ground_set;
  std::vector<RankValue> values;  // dense by subset mask

  const RankValue& at(subset_t x) const { return values[x]; }
  subset_t full_set() const { return static_cast<subset_t>(values.size() - 1); }
};

inline RankFunction rank_function(const BinaryFunction& f) {
  SubsetSumTable s = subset_sums(f);
  for (const Rational& v : s.sums)
    if (v <= 0)
      throw NotRankable("subset sum " + format_rational(v) + " is not positive");
  RankFunction rf{f.ground_set(), {}};
  rf.values.reserve(s.sums.size());
  subset_t full = s.full_set();
  for (subset_t x = 0; x <= full; ++x)
    rf.values.push_back(make_rank_value(s.at(full), s.at(full & ~x)));
  return rf;
}

// The binary function whose rank function is the given integer-valued ρ with
// ρ(∅) = 0: S(X) = 2^(ρ(E) - ρ(E\X)), then Möbius inversion.
inline BinaryFunction from_rank_function(const std::vector<std::string>& ground_set,
                                         const std::vector<long long>& rho) {
  if (ground_set.size() > static_cast<std::size_t>(kMaxOrder))
    throw OrderTooLarge("rank function order exceeds the cap");
  if (rho.size() != (std::size_t{1} << ground_set.size()))
    throw SizeMismatch("rank table has wrong size");
  if (rho[0] != 0) throw BadParameters("ρ(∅) must be 0");
  subset_t full = static_cast<subset_t>(rho.size() - 1);
  SubsetSumTable s{ground_set, std::vector<Rational>(rho.size())};
  for (subset_t x = 0; x <= full; ++x)
    s.sums[x] = pow2(static_cast<long>(rho[full] - rho[full & ~x]));
  return mobius_invert(s);
}

// Rational-valued entry point; rejects non-integer ranks.
inline BinaryFunction from_rank_function(const std::vector<std::string>& ground_set,
                                         const std::vector<Rational>& rho) {
  std::vector<long long> integral;
  integral.reserve(rho.size());
  for (const Rational& v : rho) {
    if (!is_integer(v))
      throw NonIntegerRank("rank value " + format_rational(v) + " is not an integer");
    integral.push_back(static_cast<long long>(v.get_num().get_si()));
  }
  return from_rank_function(ground_set, integral);
}

// Verifies, at the exact S-ratio level, that the minor's rank function is the
// contraction/deletion of f's rank function:
//   Q(f/C)(Y) = Qf(Y∪C) - Qf(C)   and   Q((f/C)\D)(Y) = Q(f/C)(Y).
// Each side is computed from its own subset-sum pass.
inline bool check_rank_minor_identities(const BinaryFunction& f, MinorSpec spec) {
  if ((spec.contract_set & spec.delete_set) != 0)
    throw BadParameters("contract and delete sets must be disjoint");
  RankFunction rf = rank_function(f);  // throws NotRankable when it must

  BinaryFunction contracted = contraction(f, spec.contract_set);
  RankFunction rc = rank_function(contracted);
  auto kept_after_contract = bit_positions(f.full_set() & ~spec.contract_set);
  for (subset_t y = 0; y <= contracted.full_set(); ++y) {
    subset_t y_in_f = expand_mask(y, kept_after_contract);
    // ratio_c(Y) == ratio_f(Y∪C) / ratio_f(C), cross-multiplied.
    const RankValue& lhs = rc.at(y);
    const RankValue& on_union = rf.at(y_in_f | spec.contract_set);
    const RankValue& on_c = rf.at(spec.contract_set);
    if (lhs.ratio() * on_c.ratio() != on_union.ratio()) return false;
  }

  subset_t d_in_contracted = 0;
  for (std::size_t i = 0; i < kept_after_contract.size(); ++i)
    if (spec.delete_set & (subset_t{1} << kept_after_contract[i]))
      d_in_contracted |= subset_t{1} << i;
  std::optional<BinaryFunction> deleted = deletion(contracted, d_in_contracted);
  if (!deleted) return false;  // cannot happen for rankable f
  RankFunction rd = rank_function(*deleted);
  auto kept_after_delete = bit_positions(contracted.full_set() & ~d_in_contracted);
  for (subset_t y = 0; y <= deleted->full_set(); ++y) {
    subset_t y_in_contracted = expand_mask(y, kept_after_delete);
    if (rd.at(y).ratio() != rc.at(y_in_contracted).ratio()) return false;
  }
  return true;
}

}  // namespace bfml

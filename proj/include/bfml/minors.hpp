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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bfml/binary_function.hpp"
#include "bfml/classes.hpp"
#include "bfml/errors.hpp"
#include "bfml/rank.hpp"
#include "bfml/rational.hpp"
#include "bfml/subset.hpp"

namespace bfml {

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

// Visits all 3^n disjoint (contract, delete) pairs in ascending mask order.
template <class Fn>
inline void for_each_minor_spec(int order, Fn&& fn) {
  subset_t full = (order == 0) ? 0 : ((subset_t{1} << order) - 1);
  for (subset_t c = 0;; ++c) {
    subset_t rest = full & ~c;
    for_each_subset_of(rest, [&](subset_t d) { fn(MinorSpec{c, d}); });
    if (c == full) break;
  }
}

struct MinorEntry {
  MinorSpec spec;
  std::optional<BinaryFunction> result;  // empty when the minor is undefined
  bool proper = false;
};

// All 3^n minors of f, including the improper (∅,∅) entry, with undefined
// minors recorded rather than skipped: they witness instability.
inline std::vector<MinorEntry> enumerate_minors(const BinaryFunction& f) {
  std::vector<MinorEntry> out;
  for_each_minor_spec(f.order(), [&](MinorSpec spec) {
    out.push_back({spec, minor(f, spec), spec.proper()});
  });
  return out;
}

// The spec uses subset masks of f's ground set; for_each_subset_of yields the
// delete sets in descending submask order, so sort for a deterministic map.
inline std::map<MinorSpec, Rational> order_one_minor_values(const BinaryFunction& f) {
  std::map<MinorSpec, Rational> out;
  int n = f.order();
  for_each_minor_spec(n, [&](MinorSpec spec) {
    if (popcount(spec.contract_set | spec.delete_set) != n - 1) return;
    subset_t kept = f.full_set() & ~(spec.contract_set | spec.delete_set);
    Rational den = 0, num = 0;
    for_each_subset_of(spec.delete_set, [&](subset_t z) {
      den += f.value(z);
      num += f.value(kept | z);
    });
    if (den == 0) return;  // undefined split, omitted
    out.emplace(spec, Rational(num / den));
  });
  return out;
}

// A concrete occurrence of the pattern as a minor of the host.
struct MinorWitness {
  MinorSpec spec;
  Bijection bijection;  // minor's ground set -> pattern's ground set
  BinaryFunction result;
};

// Searches the host's minor specs of the pattern's order, cheapest pruning
// first (per-cardinality value multisets), then a full bijection search.
inline std::optional<MinorWitness> has_minor_isomorphic(const BinaryFunction& host,
                                                        const BinaryFunction& pattern) {
  int want = pattern.order();
  if (want > host.order()) return std::nullopt;
  std::optional<MinorWitness> found;
  for_each_minor_spec(host.order(), [&](MinorSpec spec) {
    if (found) return;
    if (host.order() - popcount(spec.contract_set | spec.delete_set) != want) return;
    std::optional<BinaryFunction> m = minor(host, spec);
    if (!m) return;
    if (auto phi = isomorphism(*m, pattern))
      found = MinorWitness{spec, std::move(*phi), std::move(*m)};
  });
  return found;
}

enum class Verdict { InClass, NotInClass, ExcludedMinor };

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::InClass: return "in-class";
    case Verdict::NotInClass: return "not-in-class";
    case Verdict::ExcludedMinor: return "excluded-minor";
  }
  return "?";
}

struct ElementEvidence {
  std::string element;
  bool contraction_in_class = false;
  bool deletion_defined = false;
  bool deletion_in_class = false;  // meaningful only when deletion_defined
};

struct Certificate {
  BinaryFunction subject;
  ClassId class_id;
  Verdict verdict;
  bool subject_in_class = false;
  std::vector<ElementEvidence> evidence;     // one entry per ground element
  std::vector<AxiomViolation> violations;    // populated for polymatroid classes
};

// ExcludedMinor iff the subject fails the class predicate while, for every
// element e, f/e passes and f\e passes whenever defined. An undefined f\e is
// vacuously acceptable (it is recorded in the evidence): the order-one
// function with value -1 is certified for the stable class this way even
// though its deletion is undefined.
inline Certificate certify_excluded_minor(const BinaryFunction& f, const ClassId& c) {
  Certificate cert{f, c, Verdict::InClass, in_class(f, c), {}, {}};
  if (c.kind == ClassId::Kind::Polymatroidal || c.kind == ClassId::Kind::Matroidal)
    cert.violations = check_polymatroid(f, c.effective_k());
  bool all_single_step_minors_pass = true;
  for (int i = 0; i < f.order(); ++i) {
    subset_t e = subset_t{1} << i;
    ElementEvidence ev;
    ev.element = f.ground_set()[i];
    ev.contraction_in_class = in_class(contraction(f, e), c);
    std::optional<BinaryFunction> del = deletion(f, e);
    ev.deletion_defined = del.has_value();
    ev.deletion_in_class = del ? in_class(*del, c) : false;
    if (!ev.contraction_in_class || (ev.deletion_defined && !ev.deletion_in_class))
      all_single_step_minors_pass = false;
    cert.evidence.push_back(std::move(ev));
  }
  if (cert.subject_in_class)
    cert.verdict = Verdict::InClass;
  else if (all_single_step_minors_pass)
    cert.verdict = Verdict::ExcludedMinor;
  else
    cert.verdict = Verdict::NotInClass;
  return cert;
}

// The equivalent "all proper minors" form of the excluded-minor condition.
// For minor-closed classes it agrees with the single-step certificate; the
// test harness asserts that agreement.
inline bool is_excluded_minor_all_proper(const BinaryFunction& f, const ClassId& c) {
  if (in_class(f, c)) return false;
  bool ok = true;
  for_each_minor_spec(f.order(), [&](MinorSpec spec) {
    if (!ok || !spec.proper()) return;
    std::optional<BinaryFunction> m = minor(f, spec);
    if (m && !in_class(*m, c)) ok = false;
  });
  return ok;
}

namespace detail {

// Ascending (order, table) comparison used to keep search output sorted.
inline bool table_less(const BinaryFunction& a, const BinaryFunction& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  for (subset_t m = 0; m <= a.full_set(); ++m) {
    int c = cmp(a.value(m), b.value(m));
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace detail

// Certifies every grid-valued function of the given order and returns the
// canonical forms of the excluded minors found, deduplicated and sorted.
// The candidate count is checked against the budget before enumeration.
inline std::vector<BinaryFunction> search_excluded_minors(
    const ClassId& c, int order, const std::vector<Rational>& grid,
    std::uint64_t budget = kDefaultSearchBudget) {
  if (order < 0 || order > 4) throw BadParameters("search order must be in [0, 4]");
  if (grid.empty()) throw BadParameters("grid must be nonempty");
  std::size_t free_entries = (std::size_t{1} << order) - 1;
  std::uint64_t candidates = 1;
  for (std::size_t i = 0; i < free_entries; ++i) {
    if (candidates > budget / grid.size())
      throw BudgetExceeded("candidate table count exceeds the budget of " +
                           std::to_string(budget));
    candidates *= grid.size();
  }
  if (candidates > budget)
    throw BudgetExceeded("candidate table count " + std::to_string(candidates) +
                         " exceeds the budget " + std::to_string(budget));

  std::vector<BinaryFunction> found;
  std::vector<std::string> labels = default_labels(order);
  std::vector<std::size_t> odometer(free_entries, 0);
  std::vector<Rational> table(free_entries + 1);
  table[0] = 1;
  while (true) {
    for (std::size_t i = 0; i < free_entries; ++i) table[i + 1] = grid[odometer[i]];
    BinaryFunction f(labels, table);
    if (certify_excluded_minor(f, c).verdict == Verdict::ExcludedMinor)
      found.push_back(canonical_form(f));
    std::size_t pos = 0;
    while (pos < free_entries && ++odometer[pos] == grid.size()) odometer[pos++] = 0;
    if (pos == free_entries) break;
  }
  std::sort(found.begin(), found.end(), detail::table_less);
  found.erase(std::unique(found.begin(), found.end(),
                          [](const BinaryFunction& a, const BinaryFunction& b) {
                            return a == b;
                          }),
              found.end());
  return found;
}

}  // namespace bfml

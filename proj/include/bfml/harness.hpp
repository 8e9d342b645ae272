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

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bfml/binary_function.hpp"
#include "bfml/classes.hpp"
#include "bfml/errors.hpp"
#include "bfml/io.hpp"
#include "bfml/minors.hpp"
#include "bfml/rank.hpp"
#include "bfml/rational.hpp"
#include "bfml/subset.hpp"

namespace bfml {

// Outcome of one registered check. Counterexample strings embed the offending
// function as a single-line document so they can be replayed; everything in
// the report except wall_time is byte-deterministic for a fixed seed.
struct Report {
  std::string theorem_id;
  std::uint64_t instances_checked = 0;
  std::vector<std::string> counterexamples;
  double wall_time_seconds = 0.0;
};

struct VerifyOptions {
  int order = -1;              // -1: per-check default
  std::vector<Rational> grid;  // empty: per-check default
  int k = -1;                  // -1: per-check default (sweep where applicable)
  std::uint64_t seed = 1;
  std::uint64_t samples = 0;   // 0: per-check default
  std::uint64_t budget = kDefaultSearchBudget;
};

inline std::vector<Rational> default_general_grid() {
  return {make_rational(-2), make_rational(-1), make_rational(-1, 2),
          make_rational(0),  make_rational(1, 2), make_rational(1),
          make_rational(2)};
}

inline std::vector<Rational> default_linear_grid() {
  return {make_rational(-1), make_rational(0), make_rational(1), make_rational(2)};
}

// splitmix64; deterministic across platforms so seeded reports replay exactly.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

namespace harness_detail {

inline constexpr std::size_t kMaxRecordedCounterexamples = 25;

inline void record(Report& report, const std::string& description) {
  if (report.counterexamples.size() < kMaxRecordedCounterexamples)
    report.counterexamples.push_back(description);
  else if (report.counterexamples.size() == kMaxRecordedCounterexamples)
    report.counterexamples.push_back("further counterexamples suppressed");
}

inline std::string show(const BinaryFunction& f) { return function_to_json(f).dump(); }

// Enumerates every function of order 0..max_order whose free table entries
// come from the grid.
template <class Fn>
std::uint64_t for_each_grid_function(int max_order, const std::vector<Rational>& grid,
                                     std::uint64_t budget, Fn&& fn) {
  std::uint64_t count = 0;
  for (int n = 0; n <= max_order; ++n) {
    std::size_t free_entries = (std::size_t{1} << n) - 1;
    std::uint64_t here = 1;
    for (std::size_t i = 0; i < free_entries; ++i) {
      if (here > budget / grid.size())
        throw BudgetExceeded("grid enumeration exceeds the budget of " +
                             std::to_string(budget));
      here *= grid.size();
    }
    if (count > budget - here)
      throw BudgetExceeded("grid enumeration exceeds the budget of " +
                           std::to_string(budget));

    std::vector<std::string> labels = default_labels(n);
    std::vector<std::size_t> odometer(free_entries, 0);
    std::vector<Rational> table(free_entries + 1);
    table[0] = 1;
    while (true) {
      for (std::size_t i = 0; i < free_entries; ++i) table[i + 1] = grid[odometer[i]];
      fn(BinaryFunction(labels, table));
      ++count;
      std::size_t pos = 0;
      while (pos < free_entries && ++odometer[pos] == grid.size()) odometer[pos++] = 0;
      if (pos == free_entries) break;
    }
  }
  return count;
}

// Direct summation S(X) = Σ_{Z⊆X} f(Z); the slow route, kept independent of
// the zeta transform on purpose.
inline Rational direct_subset_sum(const BinaryFunction& f, subset_t x) {
  Rational sum = 0;
  for_each_subset_of(x, [&](subset_t z) { sum += f.value(z); });
  return sum;
}

inline bool all_minor_specs_defined_by_brute_force(const BinaryFunction& f) {
  bool ok = true;
  for_each_minor_spec(f.order(), [&](MinorSpec spec) {
    if (ok && direct_subset_sum(f, spec.delete_set) == 0) ok = false;
  });
  return ok;
}

// Definedness of Qf(X) = log2(S(E)/S(E\X)) at every X, by direct summation.
inline bool rank_defined_everywhere_by_definition(const BinaryFunction& f) {
  Rational s_full = direct_subset_sum(f, f.full_set());
  if (s_full == 0) return false;
  for (subset_t x = 0; x <= f.full_set(); ++x) {
    Rational rest = direct_subset_sum(f, f.full_set() & ~x);
    if (rest == 0) return false;
    if ((s_full > 0) != (rest > 0)) return false;  // ratio not positive
  }
  return true;
}

// The k-polymatroidal order-one values {2^j - 1 : 0 <= j <= k}.
inline std::vector<Rational> allowed_order_one_values(int k) {
  std::vector<Rational> out;
  for (int j = 0; j <= k; ++j) out.push_back(Rational(pow2(j) - 1));
  return out;
}

inline bool value_in(const Rational& v, const std::vector<Rational>& values) {
  for (const Rational& w : values)
    if (v == w) return true;
  return false;
}

// Exact S-ratio check of both rank-minor identities for every (C, D) pair,
// with each minor's ranks recomputed from its own table. One zeta pass per
// minor; comparisons are cross-multiplied, division-free.
inline bool rank_minor_identities_hold(const BinaryFunction& f) {
  SubsetSumTable sf = subset_sums(f);
  subset_t full = sf.full_set();
  bool ok = true;
  for (subset_t c = 0; c <= full && ok; ++c) {
    BinaryFunction contracted = contraction(f, c);
    SubsetSumTable sh = subset_sums(contracted);
    auto kept_c = bit_positions(full & ~c);
    subset_t h_full = contracted.full_set();
    // Q(f/C)(Y) = Qf(Y∪C) - Qf(C):
    //   S_h(E_h) · S_f(E\(C∪Y)) == S_f(E\C) · S_h(E_h\Y)
    for (subset_t y = 0; y <= h_full && ok; ++y) {
      subset_t y_in_f = expand_mask(y, kept_c);
      if (sh.at(h_full) * sf.at(full & ~(c | y_in_f)) !=
          sf.at(full & ~c) * sh.at(h_full & ~y))
        ok = false;
    }
    if (!ok) break;
    for_each_subset_of(h_full, [&](subset_t d) {
      if (!ok) return;
      std::optional<BinaryFunction> deleted = deletion(contracted, d);
      if (!deleted) {  // cannot happen for rankable f; treat as failure
        ok = false;
        return;
      }
      SubsetSumTable sg = subset_sums(*deleted);
      subset_t g_full = sg.full_set();
      auto kept_d = bit_positions(h_full & ~d);
      // Q((f/C)\D)(Y) = Q(f/C)(Y):
      //   S_g(E_g) · S_h(E_h\Y) == S_h(E_h) · S_g(E_g\Y)
      for (subset_t y = 0; y <= g_full; ++y) {
        subset_t y_in_h = expand_mask(y, kept_d);
        if (sg.at(g_full) * sh.at(h_full & ~y_in_h) !=
            sh.at(h_full) * sg.at(g_full & ~y)) {
          ok = false;
          return;
        }
      }
    });
  }
  return ok;
}

using CheckFn = std::function<void(const VerifyOptions&, Report&)>;

inline void check_stable_excluded(const VerifyOptions& opts, Report& report) {
  int max_order = opts.order < 0 ? 3 : opts.order;
  const std::vector<Rational>& grid =
      opts.grid.empty() ? default_general_grid() : opts.grid;
  BinaryFunction pattern = family_f_alpha(make_rational(-1));
  report.instances_checked += for_each_grid_function(
      max_order, grid, opts.budget, [&](const BinaryFunction& f) {
        bool stable = is_stable(f);
        bool brute = all_minor_specs_defined_by_brute_force(f);
        bool minor_free = !has_minor_isomorphic(f, pattern).has_value();
        if (stable != brute || stable != minor_free)
          record(report, "stability routes disagree (zeta=" + std::to_string(stable) +
                             ", brute=" + std::to_string(brute) + ", no-minor=" +
                             std::to_string(minor_free) + "): " + show(f));
      });
}

inline void check_rankable_iff_positive(const VerifyOptions& opts, Report& report) {
  int max_order = opts.order < 0 ? 3 : opts.order;
  const std::vector<Rational>& grid =
      opts.grid.empty() ? default_general_grid() : opts.grid;
  report.instances_checked += for_each_grid_function(
      max_order, grid, opts.budget, [&](const BinaryFunction& f) {
        bool rankable = is_rankable(f);
        bool by_definition = rank_defined_everywhere_by_definition(f);
        if (rankable != by_definition)
          record(report, "rankability routes disagree (positivity=" +
                             std::to_string(rankable) + ", definition=" +
                             std::to_string(by_definition) + "): " + show(f));
      });
}

inline void check_rankable_excluded(const VerifyOptions& opts, Report& report) {
  int max_order = opts.order < 0 ? 3 : opts.order;
  const std::vector<Rational>& grid =
      opts.grid.empty() ? default_general_grid() : opts.grid;
  report.instances_checked += for_each_grid_function(
      max_order, grid, opts.budget, [&](const BinaryFunction& f) {
        bool rankable = is_rankable(f);
        bool excluded_present = false;
        for (const auto& [spec, alpha] : order_one_minor_values(f))
          if (alpha <= -1) excluded_present = true;
        if (rankable != !excluded_present)
          record(report, "rankability vs order-one minors disagree (rankable=" +
                             std::to_string(rankable) + ", minor-with-alpha<=-1=" +
                             std::to_string(excluded_present) + "): " + show(f));
      });
}

inline void check_rankable_implies_stable(const VerifyOptions& opts, Report& report) {
  int max_order = opts.order < 0 ? 3 : opts.order;
  const std::vector<Rational>& grid =
      opts.grid.empty() ? default_general_grid() : opts.grid;
  report.instances_checked += for_each_grid_function(
      max_order, grid, opts.budget, [&](const BinaryFunction& f) {
        if (is_rankable(f) && !is_stable(f))
          record(report, "rankable but unstable: " + show(f));
      });
}

inline void check_rank_minor_identities_sweep(const VerifyOptions& opts,
                                              Report& report) {
  int max_order = opts.order < 0 ? 3 : opts.order;
  const std::vector<Rational>& grid =
      opts.grid.empty() ? default_general_grid() : opts.grid;
  report.instances_checked += for_each_grid_function(
      max_order, grid, opts.budget, [&](const BinaryFunction& f) {
        if (!is_rankable(f)) return;
        if (!rank_minor_identities_hold(f))
          record(report, "rank-minor identity fails: " + show(f));
      });
}

inline void check_nonlinear_propagates(const VerifyOptions& opts, Report& report) {
  int max_order = opts.order < 0 ? 4 : opts.order;
  std::uint64_t samples = opts.samples == 0 ? 10'000 : opts.samples;

  auto has_nonlinear_proper_minor = [](const BinaryFunction& f) {
    bool found = false;
    for_each_minor_spec(f.order(), [&](MinorSpec spec) {
      if (found || !spec.proper()) return;
      std::optional<BinaryFunction> m = minor(f, spec);
      if (m && !is_linear(*m)) found = true;
    });
    return found;
  };

  // Exhaustive over {0,1}-valued tables of the given order.
  std::size_t free_entries = (std::size_t{1} << max_order) - 1;
  std::vector<std::string> labels = default_labels(max_order);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free_entries); ++bits) {
    std::vector<Rational> table(free_entries + 1);
    table[0] = 1;
    for (std::size_t i = 0; i < free_entries; ++i)
      table[i + 1] = (bits >> i) & 1 ? 1 : 0;
    BinaryFunction f(labels, std::move(table));
    ++report.instances_checked;
    if (is_linear(f)) continue;
    if (!has_nonlinear_proper_minor(f))
      record(report, "nonlinear without nonlinear proper minor: " + show(f));
  }

  // Seeded random order-5 instances.
  DeterministicRng rng(opts.seed);
  std::vector<std::string> labels5 = default_labels(5);
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::uint64_t bits = rng.next();
    std::vector<Rational> table(32);
    table[0] = 1;
    for (std::size_t i = 1; i < 32; ++i) table[i] = (bits >> i) & 1 ? 1 : 0;
    BinaryFunction f(labels5, std::move(table));
    ++report.instances_checked;
    if (is_linear(f)) continue;
    if (!has_nonlinear_proper_minor(f))
      record(report, "nonlinear without nonlinear proper minor: " + show(f));
  }
}

// The three excluded-minor families for the linear class, checked as an
// equivalence on a grid sweep plus explicit certifications and searches.
inline void check_linear_excluded(const VerifyOptions& opts, Report& report) {
  int max_order = opts.order < 0 ? 2 : opts.order;
  const std::vector<Rational>& grid =
      opts.grid.empty() ? default_linear_grid() : opts.grid;
  BinaryFunction g = family_f_abc(0, 0, 0);
  BinaryFunction u24 = family_f_u24();
  std::vector<Rational> zero_one = {make_rational(0), make_rational(1)};

  report.instances_checked += for_each_grid_function(
      max_order, grid, opts.budget, [&](const BinaryFunction& f) {
        bool linear = is_linear(f);
        bool excluded_present = false;
        for (const auto& [spec, alpha] : order_one_minor_values(f))
          if (!value_in(alpha, zero_one)) excluded_present = true;
        if (!excluded_present && f.order() >= 2 &&
            has_minor_isomorphic(f, g).has_value())
          excluded_present = true;
        if (!excluded_present && f.order() >= 4 &&
            has_minor_isomorphic(f, u24).has_value())
          excluded_present = true;
        if (linear != !excluded_present)
          record(report, "linearity vs excluded minors disagree (linear=" +
                             std::to_string(linear) + "): " + show(f));
      });

  // Certifications, with the single-step and all-proper-minors forms agreeing.
  std::vector<BinaryFunction> patterns;
  for (long num : {-2L, -1L, 1L, 4L, 6L})  // α = -1, -1/2, 1/2, 2, 3
    patterns.push_back(family_f_alpha(Rational(num, 2)));
  patterns.push_back(g);
  patterns.push_back(u24);
  for (const BinaryFunction& p : patterns) {
    ++report.instances_checked;
    Certificate cert = certify_excluded_minor(p, ClassId::linear());
    bool all_proper = is_excluded_minor_all_proper(p, ClassId::linear());
    if (cert.verdict != Verdict::ExcludedMinor)
      record(report, "expected excluded-minor certificate for " + show(p));
    else if (!all_proper)
      record(report, "single-step and all-proper certification disagree for " + show(p));
  }

  // Bounded searches recover exactly the predicted families.
  std::vector<BinaryFunction> order1 =
      search_excluded_minors(ClassId::linear(), 1, grid, opts.budget);
  std::vector<BinaryFunction> expected1;
  for (const Rational& alpha : grid)
    if (!value_in(alpha, zero_one)) expected1.push_back(canonical_form(family_f_alpha(alpha)));
  std::sort(expected1.begin(), expected1.end(), detail::table_less);
  ++report.instances_checked;
  if (order1 != expected1)
    record(report, "order-1 search result differs from the predicted family");
  std::vector<BinaryFunction> order2 =
      search_excluded_minors(ClassId::linear(), 2, grid, opts.budget);
  ++report.instances_checked;
  if (order2.size() != 1 || !(order2[0] == canonical_form(g)))
    record(report, "order-2 search should find exactly the all-ones/-1 table");
}

inline void check_polymatroid_excluded(const VerifyOptions& opts, Report& report) {
  std::vector<int> ks;
  if (opts.k > 0)
    ks.push_back(opts.k);
  else
    ks = {1, 2, 3, 4};
  const std::vector<Rational>& grid =
      opts.grid.empty() ? default_general_grid() : opts.grid;

  for (int k : ks) {
    ClassId cls = ClassId::polymatroidal(k);
    std::vector<Rational> allowed = allowed_order_one_values(k);

    // Order-two family: every parameter triple certifies, with the stated
    // rank values, and the count matches the tetrahedral number.
    std::uint64_t triples = 0;
    for (long alpha = 0; alpha <= k - 1; ++alpha)
      for (long beta = alpha; beta <= k - 1; ++beta)
        for (long gamma = beta; gamma <= k - 1; ++gamma) {
          ++triples;
          ++report.instances_checked;
          BinaryFunction f = family_f_abc(alpha, beta, gamma);
          Certificate cert = certify_excluded_minor(f, cls);
          if (cert.verdict != Verdict::ExcludedMinor) {
            record(report, "family member not certified for k=" + std::to_string(k) +
                               ": " + show(f));
            continue;
          }
          if (cert.violations.size() != 1 || cert.violations[0].axiom != Axiom::R3 ||
              cert.violations[0].witnesses.front() != 0)
            record(report, "family member should fail exactly R3 at X=∅: " + show(f));
          RankFunction rf = rank_function(f);
          auto expect = [&](subset_t x, long want) {
            return rf.at(x).integer_log && *rf.at(x).integer_log == want;
          };
          if (!expect(0, 0) || !expect(1, alpha) || !expect(2, beta) ||
              !expect(3, alpha + gamma + 1))
            record(report, "family rank values differ from (0, α, β, α+γ+1): " + show(f));
        }
    std::uint64_t tetrahedral =
        static_cast<std::uint64_t>(k) * (k + 1) * (k + 2) / 6;
    ++report.instances_checked;
    if (triples != tetrahedral)
      record(report, "triple count mismatch for k=" + std::to_string(k));

    // Order-one boundary: f_α is k-polymatroidal exactly on {0,1,3,...,2^k-1};
    // every other grid or near-boundary value is an excluded minor.
    std::vector<Rational> alphas = grid;
    for (int j = 0; j <= k; ++j) {
      Rational boundary(pow2(j) - 1);
      alphas.push_back(boundary);
      alphas.push_back(boundary + make_rational(1, 2));
      alphas.push_back(boundary - make_rational(1, 2));
    }
    std::sort(alphas.begin(), alphas.end());
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
    for (const Rational& alpha : alphas) {
      ++report.instances_checked;
      BinaryFunction f = family_f_alpha(alpha);
      bool expected = value_in(alpha, allowed);
      bool member = in_class(f, cls);
      Verdict verdict = certify_excluded_minor(f, cls).verdict;
      if (member != expected ||
          verdict != (expected ? Verdict::InClass : Verdict::ExcludedMinor))
        record(report, "order-one boundary behaviour wrong at α=" +
                           format_rational(alpha) + " for k=" + std::to_string(k));
    }

    // Order <= 2 sweep: membership in M_k coincides with seeing no excluded
    // pattern among the minors.
    std::vector<BinaryFunction> patterns;
    for (long alpha = 0; alpha <= k - 1; ++alpha)
      for (long beta = alpha; beta <= k - 1; ++beta)
        for (long gamma = beta; gamma <= k - 1; ++gamma)
          patterns.push_back(family_f_abc(alpha, beta, gamma));
    std::vector<Rational> sweep_grid = grid;
    for (int j = 2; j <= k; ++j) sweep_grid.push_back(Rational(pow2(j) - 1));
    std::sort(sweep_grid.begin(), sweep_grid.end());
    sweep_grid.erase(std::unique(sweep_grid.begin(), sweep_grid.end()),
                     sweep_grid.end());
    report.instances_checked += for_each_grid_function(
        2, sweep_grid, opts.budget, [&](const BinaryFunction& f) {
          bool member = in_class(f, cls);
          bool excluded_present = false;
          for (const auto& [spec, alpha] : order_one_minor_values(f))
            if (!value_in(alpha, allowed)) excluded_present = true;
          if (!excluded_present && f.order() == 2)
            for (const BinaryFunction& p : patterns)
              if (are_isomorphic(f, p)) excluded_present = true;
          if (member != !excluded_present)
            record(report, "k-polymatroid membership vs excluded minors disagree "
                           "(k=" + std::to_string(k) + ", member=" +
                               std::to_string(member) + "): " + show(f));
        });
  }
}

inline void check_matroidal_excluded(const VerifyOptions& opts, Report& report) {
  std::vector<Rational> grid = opts.grid;
  if (grid.empty())
    grid = {make_rational(-1), make_rational(0), make_rational(1), make_rational(3)};

  // The order-two search finds exactly the (1,1,1,-1) table.
  std::vector<BinaryFunction> found =
      search_excluded_minors(ClassId::matroidal(), 2, grid, opts.budget);
  ++report.instances_checked;
  if (found.size() != 1 || !(found[0] == canonical_form(family_f_abc(0, 0, 0))))
    record(report, "matroidal order-2 search should find exactly (1,1,1,-1)");

  // f_α is an excluded minor exactly off {0,1}.
  std::vector<Rational> zero_one = {make_rational(0), make_rational(1)};
  for (const Rational& alpha : grid) {
    ++report.instances_checked;
    bool expected_member = value_in(alpha, zero_one);
    Certificate cert =
        certify_excluded_minor(family_f_alpha(alpha), ClassId::matroidal());
    if (cert.verdict != (expected_member ? Verdict::InClass : Verdict::ExcludedMinor))
      record(report, "matroidal f_α certification wrong at α=" + format_rational(alpha));
  }

  // Same equivalence sweep as the k-polymatroid check, at k = 1.
  VerifyOptions sub = opts;
  sub.k = 1;
  check_polymatroid_excluded(sub, report);
}

// Desk-scale matroid instances: the binary ones are exactly those whose
// associated function is linear, equivalently those without the rank-2
// 4-point uniform minor.
inline void check_tutte(const VerifyOptions& opts, Report& report) {
  (void)opts;
  BinaryFunction u24_function = family_f_u24();

  // Fano plane: the seven nonzero GF(2)^3 columns. The non-Fano relaxation
  // uses the same 0/1 columns read over the rationals.
  std::vector<std::vector<int>> fano_columns;
  for (int v = 1; v <= 7; ++v)
    fano_columns.push_back({(v >> 2) & 1, (v >> 1) & 1, v & 1});

  std::vector<std::vector<Rational>> nonfano_columns;
  for (const auto& column : fano_columns) {
    std::vector<Rational> c;
    for (int entry : column) c.push_back(Rational(entry));
    nonfano_columns.push_back(std::move(c));
  }

  struct Fixture {
    std::string name;
    MatroidRank rank;
    bool linear;
    bool has_u24_minor;
  };
  std::vector<Fixture> fixtures;
  fixtures.push_back({"uniform(2,4)", uniform_matroid_rank(2, 4), false, true});
  fixtures.push_back({"uniform(1,3)", uniform_matroid_rank(1, 3), true, false});
  fixtures.push_back({"cycle-matroid(K4)",
                      graphic_matroid_rank({{"1", "2"},
                                            {"1", "3"},
                                            {"1", "4"},
                                            {"2", "3"},
                                            {"2", "4"},
                                            {"3", "4"}}),
                      true, false});
  fixtures.push_back({"fano", gf2_matroid_rank(fano_columns), true, false});
  fixtures.push_back({"non-fano", rational_column_matroid_rank(nonfano_columns),
                      false, true});

  for (const Fixture& fixture : fixtures) {
    ++report.instances_checked;
    BinaryFunction f = from_rank_function(fixture.rank);
    if (!is_matroidal(f)) {
      record(report, fixture.name + ": image of the rank oracle is not matroidal");
      continue;
    }
    RankFunction rf = rank_function(f);
    bool ranks_match = true;
    for (subset_t x = 0; x <= rf.full_set(); ++x)
      if (!rf.at(x).integer_log || *rf.at(x).integer_log != fixture.rank.at(x))
        ranks_match = false;
    if (!ranks_match)
      record(report, fixture.name + ": rank transform does not reproduce the oracle");
    bool linear = is_linear(f);
    bool u24_minor = has_minor_isomorphic(f, u24_function).has_value();
    if (linear != fixture.linear)
      record(report, fixture.name + ": linearity expected " +
                         std::to_string(fixture.linear) + ", got " +
                         std::to_string(linear));
    if (u24_minor != fixture.has_u24_minor)
      record(report, fixture.name + ": u24-minor expected " +
                         std::to_string(fixture.has_u24_minor) + ", got " +
                         std::to_string(u24_minor));
    if (linear != !u24_minor)
      record(report, fixture.name + ": linear iff no u24 minor fails");
  }

  // The rank-2 uniform oracle maps exactly onto the named order-4 table.
  ++report.instances_checked;
  if (!(from_rank_function(uniform_matroid_rank(2, 4)).table() ==
        family_f_u24().table()))
    record(report, "uniform(2,4) image differs from the order-4 table");
}

}  // namespace harness_detail

// rank(X) = rank over Q of the chosen columns; realises matroids (such as
// non-Fano) that are representable over Q but not over GF(2).
inline MatroidRank rational_column_matroid_rank(
    const std::vector<std::vector<Rational>>& columns) {
  int n = static_cast<int>(columns.size());
  if (n > kMaxOrder) throw OrderTooLarge("too many columns");
  std::size_t dim = columns.empty() ? 0 : columns[0].size();
  for (const auto& column : columns)
    if (column.size() != dim) throw DimensionMismatch("columns have differing dimensions");
  std::vector<long long> ranks(std::size_t{1} << n);
  for (subset_t x = 0; x < ranks.size(); ++x) {
    std::vector<std::vector<Rational>> m;
    for (int j = 0; j < n; ++j)
      if (x & (subset_t{1} << j)) m.push_back(columns[j]);
    long long r = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < dim && row < m.size(); ++col) {
      std::size_t pivot = row;
      while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
      if (pivot == m.size()) continue;
      std::swap(m[row], m[pivot]);
      for (std::size_t i = row + 1; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        Rational factor = m[i][col] / m[row][col];
        for (std::size_t c = col; c < dim; ++c) m[i][c] -= factor * m[row][c];
      }
      ++row;
      ++r;
    }
    ranks[x] = r;
  }
  return MatroidRank(default_labels(n), std::move(ranks));
}

inline const std::map<std::string, harness_detail::CheckFn>& theorem_registry() {
  static const std::map<std::string, harness_detail::CheckFn> registry = {
      {"thm-stable-excluded", harness_detail::check_stable_excluded},
      {"prop-rankable-iff-positive", harness_detail::check_rankable_iff_positive},
      {"prop-rankable-implies-stable", harness_detail::check_rankable_implies_stable},
      {"prop-rank-minor-identities", harness_detail::check_rank_minor_identities_sweep},
      {"thm-rankable-excluded", harness_detail::check_rankable_excluded},
      {"thm-nonlinear-propagates", harness_detail::check_nonlinear_propagates},
      {"thm-linear-excluded", harness_detail::check_linear_excluded},
      {"thm-polymatroid-excluded", harness_detail::check_polymatroid_excluded},
      {"cor-matroidal-excluded", harness_detail::check_matroidal_excluded},
      {"thm-tutte", harness_detail::check_tutte},
  };
  return registry;
}

inline std::vector<std::string> registered_theorems() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : theorem_registry()) ids.push_back(id);
  return ids;
}

inline Report verify_theorem(const std::string& theorem_id,
                             const VerifyOptions& opts = {}) {
  auto it = theorem_registry().find(theorem_id);
  if (it == theorem_registry().end())
    throw UnknownTheorem("no registered check named '" + theorem_id + "'");
  Report report;
  report.theorem_id = theorem_id;
  auto start = std::chrono::steady_clock::now();
  it->second(opts, report);
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// Deterministic serialized form: wall time is deliberately omitted so that
// reports are byte-identical across runs with the same seed.
inline Json report_to_json(const Report& report) {
  return Json{{"theorem", report.theorem_id},
              {"instances_checked", report.instances_checked},
              {"counterexamples", report.counterexamples}};
}

}  // namespace bfml

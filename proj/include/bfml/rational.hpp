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

#include <gmpxx.h>

#include <cmath>
#include <optional>
#include <string>

#include "bfml/errors.hpp"

namespace bfml {

// Exact rational scalar. All predicates in this library compare exact values;
// floating point appears only in display helpers.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw NonRationalValue("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// 2^e as an exact rational; e may be negative.
inline Rational pow2(long e) {
  Integer p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
  Rational q;
  if (e < 0) {
    q = Rational(1, p);
  } else {
    q = Rational(p);
  }
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Exact exponent k with q == 2^k, when one exists.
inline std::optional<long> exact_log2(const Rational& q) {
  if (q <= 0) return std::nullopt;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (mpz_popcount(num.get_mpz_t()) != 1 || mpz_popcount(den.get_mpz_t()) != 1)
    return std::nullopt;
  long up = static_cast<long>(mpz_scan1(num.get_mpz_t(), 0));
  long down = static_cast<long>(mpz_scan1(den.get_mpz_t(), 0));
  return up - down;
}

// Accepts "p", "-p", or "p/q" in base 10; rejects everything else.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw NonRationalValue("empty rational literal");
  std::size_t i = 0;
  if (text[i] == '-') ++i;
  bool digits = false, slash = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      digits = true;
    } else if (c == '/' && !slash && digits) {
      slash = true;
      digits = false;
    } else {
      throw NonRationalValue("bad rational literal: " + text);
    }
  }
  if (!digits) throw NonRationalValue("bad rational literal: " + text);
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw NonRationalValue("bad rational literal: " + text);
  if (q.get_den() == 0) throw NonRationalValue("zero denominator: " + text);
  q.canonicalize();
  return q;
}

// Reduced form with positive denominator: "p" or "p/q".
inline std::string format_rational(const Rational& q) { return q.get_str(); }

// Display-only approximation of log2(q); exact predicates never use this.
inline double approx_log2(const Rational& q) {
  signed long int en = 0, ed = 0;
  double dn = mpz_get_d_2exp(&en, q.get_num().get_mpz_t());
  double dd = mpz_get_d_2exp(&ed, q.get_den().get_mpz_t());
  return (std::log2(dn) + static_cast<double>(en)) -
         (std::log2(dd) + static_cast<double>(ed));
}

}  // namespace bfml

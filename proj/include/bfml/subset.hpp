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

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace bfml {

// Subsets of a ground set are bitmasks over the ground-set ordering.
using subset_t = std::uint32_t;

inline constexpr int kMaxOrder = 20;

inline int popcount(subset_t s) { return std::popcount(s); }

// Calls fn(Z) for every Z ⊆ mask, including 0 and mask itself.
template <class Fn>
inline void for_each_subset_of(subset_t mask, Fn&& fn) {
  subset_t z = mask;
  while (true) {
    fn(z);
    if (z == 0) break;
    z = (z - 1) & mask;
  }
}

// Positions of the set bits of mask, ascending.
inline std::vector<int> bit_positions(subset_t mask) {
  std::vector<int> out;
  for (int i = 0; i < kMaxOrder; ++i)
    if (mask & (subset_t{1} << i)) out.push_back(i);
  return out;
}

// Maps a compact index over the set bits of keep_mask back to a mask over the
// original ground set. positions = bit_positions(keep_mask).
inline subset_t expand_mask(subset_t compact, const std::vector<int>& positions) {
  subset_t out = 0;
  for (std::size_t i = 0; i < positions.size(); ++i)
    if (compact & (subset_t{1} << i)) out |= subset_t{1} << positions[i];
  return out;
}

// Default ground-set labels: single letters a, b, c, ...
inline std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return labels;
}

}  // namespace bfml

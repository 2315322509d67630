// Copyright 2026 The qwalk Authors
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

#include <cmath>
#include <compare>
#include <map>

namespace qwalk {

//! integer lattice site shared by the 2D lattices
struct Site {
  int j;
  int k;
  friend bool operator==(const Site&, const Site&) = default;
  friend auto operator<=>(const Site&, const Site&) = default;
};

//! position label -> probability, deterministically ordered by key
template <class Key>
using ProbabilityGrid = std::map<Key, double>;

template <class Key>
double grid_sum(const ProbabilityGrid<Key>& grid) {
  double total = 0.0;
  for (const auto& [key, p] : grid) total += p;
  return total;
}

//! max |a − b| over the union of keys (missing entries count as zero)
template <class Key>
double grid_max_abs_diff(const ProbabilityGrid<Key>& a, const ProbabilityGrid<Key>& b) {
  double worst = 0.0;
  for (const auto& [key, p] : a) {
    auto it = b.find(key);
    const double q = (it == b.end()) ? 0.0 : it->second;
    worst = std::max(worst, std::abs(p - q));
  }
  for (const auto& [key, q] : b) {
    if (a.find(key) == a.end()) worst = std::max(worst, std::abs(q));
  }
  return worst;
}

}  // namespace qwalk

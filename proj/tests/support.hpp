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

#include <random>
#include <vector>

#include "qwalk/honeycomb.hpp"
#include "qwalk/square.hpp"
#include "qwalk/wavefunction.hpp"

namespace qwalk::testing {

inline double dist(Complex a, Complex b) { return std::abs(a - b); }

//! a random normalized state over a handful of labels of the given kind
inline WaveFunction random_state(LabelKind kind, std::mt19937& rng, int n_labels = 6,
                                 int radius = 4) {
  std::uniform_int_distribution<int> coord(-radius, radius);
  std::uniform_real_distribution<double> re(-1.0, 1.0);
  std::vector<WaveFunction::Entry> terms;
  for (int n = 0; n < n_labels; ++n) {
    const int j = coord(rng);
    const int k = coord(rng);
    BasisLabel label = Coined1D{0, 1};
    switch (kind) {
      case LabelKind::coined_1d: label = Coined1D{j, rng() % 2 ? 1 : -1}; break;
      case LabelKind::scattering_1d: label = Scattering1D{rng() % 2 ? 1 : -1, j}; break;
      case LabelKind::coined_square:
        label = CoinedSquare{j, k, static_cast<int>(rng() % 4) + 1};
        break;
      case LabelKind::scattering_square:
        label = ScatteringSquare{rng() % 2 ? 1 : -1, rng() % 2 ? 1 : -1, j, k};
        break;
      case LabelKind::coined_honeycomb:
        label = CoinedHoney{j, k, static_cast<int>(rng() % 3)};
        break;
      case LabelKind::scattering_honeycomb:
        label = ScatteringHoney{static_cast<int>(rng() % 3), j, k};
        break;
    }
    terms.push_back({label, Complex(re(rng), re(rng))});
  }
  return WaveFunction::from_terms(std::move(terms)).normalized();
}

//! scattering bond mass aggregated to the bond id's anchor site, giving a
//! probability measure over (j,k) comparable with the coined site grid
inline ProbabilityGrid<Site> anchored_bond_mass(const ProbabilityGrid<square::BondId>& bonds) {
  ProbabilityGrid<Site> grid;
  for (const auto& [bond, p] : bonds) grid[{bond.j, bond.k}] += p;
  return grid;
}

inline ProbabilityGrid<Site> anchored_bond_mass(const ProbabilityGrid<honeycomb::BondKey>& bonds) {
  ProbabilityGrid<Site> grid;
  for (const auto& [bond, p] : bonds) grid[{bond.j, bond.k}] += p;
  return grid;
}

}  // namespace qwalk::testing

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

#include <utility>
#include <vector>

#include "qwalk/field.hpp"
#include "qwalk/grid.hpp"
#include "qwalk/step.hpp"

// Discrete-time quantum walks on the honeycomb lattice (coordination 3).
//
// Site labeling: integer pairs (j,k), row k, position j within the row. Rows
// of even k have bonds to the north, southeast and southwest; rows of odd k
// to the south, northeast and northwest. Direction labels sigma ∈ {0,1,2}
// are tied to geometry through the site class [j + [k]₂]₃, which makes a
// fixed-sigma orbit close into a hexagon after exactly six steps.

namespace qwalk::honeycomb {

//! mathematical mod: result in {0,1} / {0,1,2} for any integer, negatives included
int mod2(long long x);
int mod3(long long x);

//! direction relabeling picked up when traversing a bond out of row k:
//! φ_k(σ) = [σ − (−1)^k]₃, a fixed-point-free bijection of {0,1,2}
int phi(int k, int sigma);

//! the neighbor reached from (j,k) when stepping with direction label sigma
Site step_site(Site site, int sigma);

//! The other incoming state on the bond of |σ, (j,k)⟩: direction φ_k(σ)
//! incoming to the neighbor in that direction. Applying it twice returns
//! the original (site, sigma).
std::pair<Site, int> bond_partner(Site site, int sigma);

//! canonical bond id: the lexicographically smaller of the two incoming
//! (j, k, sigma) labels on the bond
struct BondKey {
  int j;
  int k;
  int sigma;
  friend bool operator==(const BondKey&, const BondKey&) = default;
  friend auto operator<=>(const BondKey&, const BondKey&) = default;
};

BondKey bond_of(Site site, int sigma);

using Field = TransitionField<Site>;

//! field of 3×3 unitaries over the honeycomb sites
Field make_field(Matrix default_matrix);

//! U_c = (Σ_σ S_σ ⊗ |σ⟩⟨σ|) (Σ |(j,k)⟩⟨(j,k)| ⊗ C^(j,k))
StepOperator coined_step(const Field& field);

//! U_s = T + R: |σ,(j,k)⟩ → Σ_β Γ^(j,k)_{βσ} |β, step_site(j,k,β)⟩, where the
//! β = φ_k(σ) term is the reflection and the others are transmissions
StepOperator scattering_step(const Field& field);

//! E |σ, (j,k)⟩ = |(j,k)⟩ ⊗ |σ⟩ and its inverse
BasisLabel e_map_label(const BasisLabel& scattering_label);
BasisLabel e_dagger_label(const BasisLabel& coined_label);
WaveFunction map_e(const WaveFunction& scattering_state);
WaveFunction map_e_dagger(const WaveFunction& coined_state);

ProbabilityGrid<Site> site_probabilities(const WaveFunction& coined_state);
ProbabilityGrid<BondKey> bond_probabilities(const WaveFunction& scattering_state);
ProbabilityGrid<Site> cross_site_probabilities(const WaveFunction& scattering_state);
ProbabilityGrid<BondKey> cross_bond_probabilities(const WaveFunction& coined_state);

//! the reference initial state: the single direction-1 basis state at the origin
WaveFunction preset_initial_state(Model model);

//! all labels with |j| ≤ radius and |k| ≤ radius
std::vector<BasisLabel> window_labels(Model model, int radius);

//! Cartesian embedding with unit bond length: x = (√3/2)·j,
//! y = (3/2)·⌊k/2⌋ + [k]₂. Bonds plot at the midpoint of their endpoints.
std::pair<double, double> plot_xy(const Site& s);
std::pair<double, double> plot_xy(const BondKey& b);

}  // namespace qwalk::honeycomb

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

// Discrete-time quantum walks on the square lattice.
//
// Coin indices sigma = 1..4 move a coined walker along +x, +y, −x, −y
// respectively. 4×4 matrices are stored with rows/columns in the order
// [3, 1, 4, 2], the order induced by the column-vector convention for the
// coin states; the same layout indexes the scattering matrices through the
// direction-pair association (+,+)↔1, (−,+)↔2, (−,−)↔3, (+,−)↔4.
//
// Bond convention: the horizontal bond (j,k) carries {|++,(j,k)⟩, |−−,(j−1,k)⟩}
// (the bond between sites (j−1,k) and (j,k)); the vertical bond (j,k) carries
// {|−+,(j,k)⟩, |+−,(j,k−1)⟩}.

namespace qwalk::square {

using Field = TransitionField<Site>;

//! field of 4×4 unitaries over the square lattice sites
Field make_field(Matrix default_matrix);

//! (σx, σy) → σ = (5 − (2 + σx)σy)/2; rejects values outside {−1,+1}
int sigma_pair_to_coin(int sx, int sy);

//! inverse association; rejects σ outside 1..4
std::pair<int, int> coin_to_sigma_pair(int sigma);

//! index of coin value σ into the [3,1,4,2]-ordered matrix storage
int matrix_index(int sigma);

enum class Orientation { horizontal, vertical };

std::string to_string(Orientation o);

//! a lattice bond, identified by its anchor site and orientation
struct BondId {
  int j;
  int k;
  Orientation orientation;
  friend bool operator==(const BondId&, const BondId&) = default;
  friend auto operator<=>(const BondId&, const BondId&) = default;
};

//! the bond carrying a scattering basis state
BondId bond_of(const ScatteringSquare& label);

//! natural walk: coin at the current site, then shift along the σ direction
StepOperator coined_step(const Field& field);

//! diagonal walk: the natural step followed by the diagonal shift, so single
//! steps displace along cell diagonals
StepOperator diagonal_step(const Field& field);

//! U_s = T + R: scattering at the target vertex into the four outgoing pairs
StepOperator scattering_step(const Field& field);

//! E |σx σy, (j,k)⟩ = |j⟩⊗|k⟩⊗|σ⟩ through the direction-pair association
BasisLabel e_map_label(const BasisLabel& scattering_label);
BasisLabel e_dagger_label(const BasisLabel& coined_label);
WaveFunction map_e(const WaveFunction& scattering_state);
WaveFunction map_e_dagger(const WaveFunction& coined_state);

ProbabilityGrid<Site> site_probabilities(const WaveFunction& coined_state);
ProbabilityGrid<BondId> bond_probabilities(const WaveFunction& scattering_state);
//! coined site distribution recovered from a scattering-evolved state
ProbabilityGrid<Site> cross_site_probabilities(const WaveFunction& scattering_state);
//! scattering bond distribution recovered from a coined-evolved state
ProbabilityGrid<BondId> cross_bond_probabilities(const WaveFunction& coined_state);

//! The reference initial state: the equal-weight superposition of the four
//! directions at the origin with phases (1, 1, i, i) on (σ=1, 2, 3, 4), in
//! the representation of the requested model.
WaveFunction preset_initial_state(Model model);

//! the site map (j,k) → (j−k, j+k) relating natural and diagonal patterns
Site rotate_natural_to_diagonal(Site s);

//! all labels with |j| ≤ radius and |k| ≤ radius
std::vector<BasisLabel> window_labels(Model model, int radius);

//! plot coordinates: sites at integer points, bonds at their midpoints
std::pair<double, double> plot_xy(const Site& s);
std::pair<double, double> plot_xy(const BondId& b);

}  // namespace qwalk::square

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

#include <vector>

#include "qwalk/field.hpp"
#include "qwalk/grid.hpp"
#include "qwalk/step.hpp"

// Discrete-time quantum walks on the line, in both formulations.
//
// Coin basis convention: |−⟩ = (1,0)ᵀ, |+⟩ = (0,1)ᵀ, so a 2×2 matrix row or
// column index 0 refers to sigma = −1 and index 1 to sigma = +1.
//
// Bond convention: the scattering state |+1, j⟩ and |−1, j−1⟩ share the bond
// between sites j−1 and j; the bond is indexed by j, the right endpoint.

namespace qwalk::line {

using Field = TransitionField<int>;

//! field of 2×2 unitaries over the line sites
Field make_field(Matrix default_matrix);

//! Angles of the general 2×2 unitary coin
//!   e^{iγ} [ e^{iξ} cosθ    e^{iζ} sinθ
//!            e^{−iζ} sinθ  −e^{−iξ} cosθ ]
//! written in the (|−⟩,|+⟩) basis. θ = π/4 with zero phases is the Hadamard.
struct CoinParams {
  double gamma = 0.0;
  double xi = 0.0;
  double zeta = 0.0;
  double theta = 0.0;
};

Matrix general_coin(const CoinParams& params);

//! Parameters of the transmission/reflection family
//!   t_σ = e^{iλ} sqrt(1−ρ) e^{iσ·phase_t},  r_σ = e^{iλ} σ sqrt(ρ) e^{iσ·phase_r}
//! which satisfies the scattering unitarity relations for any choice.
struct ScatterParams {
  double rho = 0.5;  //!< reflection probability, in [0,1]
  double lambda = 0.0;
  double phase_t = 0.0;
  double phase_r = 0.0;
};

struct ScatterAmps {
  Complex t_plus;
  Complex t_minus;
  Complex r_plus;
  Complex r_minus;
};

//! throws ParameterError if rho is outside [0,1]
ScatterAmps scatter_amps(const ScatterParams& params);

//! the 2×2 field matrix carrying the same amplitudes (t_σ on the diagonal
//! slot c_{σσ}, r_σ on c_{−σ,σ})
Matrix scatter_matrix(const ScatterParams& params);

//! U_c: coin at the current site, then shift |j⟩⊗|σ⟩ by σ
StepOperator coined_step(const Field& field);

//! U_s = T + R with t_σ = c_{σσ}, r_σ = c_{−σ,σ} read from the field matrix
StepOperator scattering_step(const Field& field);

//! E |σ, j⟩ = |j⟩ ⊗ |σ⟩ and its inverse (amplitude-preserving relabelings)
BasisLabel e_map_label(const BasisLabel& scattering_label);
BasisLabel e_dagger_label(const BasisLabel& coined_label);
WaveFunction map_e(const WaveFunction& scattering_state);
WaveFunction map_e_dagger(const WaveFunction& coined_state);

//! Native position projector at index j: both coin states at site j (coined),
//! or the two bond states {|+, j⟩, |−, j−1⟩} (scattering).
std::vector<BasisLabel> projector(Model model, int j);

//! Cross projector applied to a state evolved under `evolved_model` to read
//! off the other model's position-j probability: E-preimage of the coined
//! site projector ({|+, j⟩, |−, j⟩}) for scattering-evolved states, E-image
//! of the bond projector ({|j⟩⊗|+⟩, |j−1⟩⊗|−⟩}) for coined-evolved states.
std::vector<BasisLabel> cross_projector(Model evolved_model, int j);

ProbabilityGrid<int> site_probabilities(const WaveFunction& coined_state);
ProbabilityGrid<int> bond_probabilities(const WaveFunction& scattering_state);
ProbabilityGrid<int> cross_site_probabilities(const WaveFunction& scattering_state);
ProbabilityGrid<int> cross_bond_probabilities(const WaveFunction& coined_state);

//! all labels with |j| ≤ radius
std::vector<BasisLabel> window_labels(Model model, int radius);

}  // namespace qwalk::line

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

#include "qwalk/square.hpp"

#include <string>
#include <utility>

namespace qwalk::square {

namespace {

const CoinedSquare& as_coined(const BasisLabel& label) {
  const auto* l = std::get_if<CoinedSquare>(&label);
  if (!l) throw ModelMismatchError("model/lattice mismatch: expected a coined square label");
  return *l;
}

const ScatteringSquare& as_scattering(const BasisLabel& label) {
  const auto* l = std::get_if<ScatteringSquare>(&label);
  if (!l) throw ModelMismatchError("model/lattice mismatch: expected a scattering square label");
  return *l;
}

// single-step displacement of each coin direction (also the displacement of
// the matching outgoing scattering pair)
constexpr int kShiftJ[5] = {0, +1, 0, -1, 0};
constexpr int kShiftK[5] = {0, 0, +1, 0, -1};

// extra displacement applied by the diagonal walk
constexpr int kDiagJ[5] = {0, 0, -1, 0, +1};
constexpr int kDiagK[5] = {0, +1, 0, -1, 0};

}  // namespace

Field make_field(Matrix default_matrix) { return Field(4, std::move(default_matrix)); }

int sigma_pair_to_coin(int sx, int sy) {
  if ((sx != -1 && sx != +1) || (sy != -1 && sy != +1)) {
    throw ParameterError("square direction signs must be -1 or +1");
  }
  return (5 - (2 + sx) * sy) / 2;
}

std::pair<int, int> coin_to_sigma_pair(int sigma) {
  switch (sigma) {
    case 1: return {+1, +1};
    case 2: return {-1, +1};
    case 3: return {-1, -1};
    case 4: return {+1, -1};
    default: throw ParameterError("square coin sigma must be in 1..4");
  }
}

int matrix_index(int sigma) {
  switch (sigma) {
    case 3: return 0;
    case 1: return 1;
    case 4: return 2;
    case 2: return 3;
    default: throw ParameterError("square coin sigma must be in 1..4");
  }
}

std::string to_string(Orientation o) { return o == Orientation::horizontal ? "h" : "v"; }

BondId bond_of(const ScatteringSquare& label) {
  if (label.sx * label.sy > 0) {
    // |++,(j,k)⟩ and |−−,(j−1,k)⟩ share the horizontal bond (j,k)
    const int j = label.sx > 0 ? label.j : label.j + 1;
    return {j, label.k, Orientation::horizontal};
  }
  // |−+,(j,k)⟩ and |+−,(j,k−1)⟩ share the vertical bond (j,k)
  const int k = label.sy > 0 ? label.k : label.k + 1;
  return {label.j, k, Orientation::vertical};
}

namespace {

StepOperator coined_step_impl(const Field& field, bool diagonal) {
  return StepOperator(LabelKind::coined_square, [field, diagonal](const BasisLabel& label) {
    const auto& l = as_coined(label);
    const Matrix& m = field.at({l.j, l.k});
    const int col = matrix_index(l.sigma);
    StepTerms terms;
    for (int out = 1; out <= 4; ++out) {
      const Complex amp = m.at(matrix_index(out), col);
      if (amp == 0.0) continue;
      int j = l.j + kShiftJ[out];
      int k = l.k + kShiftK[out];
      if (diagonal) {
        j += kDiagJ[out];
        k += kDiagK[out];
      }
      terms.push(CoinedSquare{j, k, out}, amp);
    }
    return terms;
  });
}

}  // namespace

StepOperator coined_step(const Field& field) { return coined_step_impl(field, false); }

StepOperator diagonal_step(const Field& field) { return coined_step_impl(field, true); }

StepOperator scattering_step(const Field& field) {
  return StepOperator(LabelKind::scattering_square, [field](const BasisLabel& label) {
    const auto& l = as_scattering(label);
    const Matrix& m = field.at({l.j, l.k});
    const int col = matrix_index(sigma_pair_to_coin(l.sx, l.sy));
    StepTerms terms;
    for (int out = 1; out <= 4; ++out) {
      const Complex amp = m.at(matrix_index(out), col);
      if (amp == 0.0) continue;
      const auto [ax, ay] = coin_to_sigma_pair(out);
      terms.push(ScatteringSquare{ax, ay, l.j + kShiftJ[out], l.k + kShiftK[out]}, amp);
    }
    return terms;
  });
}

BasisLabel e_map_label(const BasisLabel& scattering_label) {
  const auto& l = as_scattering(scattering_label);
  return CoinedSquare{l.j, l.k, sigma_pair_to_coin(l.sx, l.sy)};
}

BasisLabel e_dagger_label(const BasisLabel& coined_label) {
  const auto& l = as_coined(coined_label);
  const auto [sx, sy] = coin_to_sigma_pair(l.sigma);
  return ScatteringSquare{sx, sy, l.j, l.k};
}

namespace {

WaveFunction relabel(const WaveFunction& psi, BasisLabel (*map)(const BasisLabel&)) {
  std::vector<WaveFunction::Entry> out;
  out.reserve(psi.size());
  for (const auto& e : psi.entries()) out.push_back({map(e.label), e.amp});
  return WaveFunction::from_terms(std::move(out));
}

}  // namespace

WaveFunction map_e(const WaveFunction& scattering_state) {
  return relabel(scattering_state, &e_map_label);
}

WaveFunction map_e_dagger(const WaveFunction& coined_state) {
  return relabel(coined_state, &e_dagger_label);
}

ProbabilityGrid<Site> site_probabilities(const WaveFunction& coined_state) {
  ProbabilityGrid<Site> grid;
  for (const auto& e : coined_state.entries()) {
    const auto& l = as_coined(e.label);
    grid[{l.j, l.k}] += abs2(e.amp);
  }
  return grid;
}

ProbabilityGrid<BondId> bond_probabilities(const WaveFunction& scattering_state) {
  ProbabilityGrid<BondId> grid;
  for (const auto& e : scattering_state.entries()) {
    grid[bond_of(as_scattering(e.label))] += abs2(e.amp);
  }
  return grid;
}

ProbabilityGrid<Site> cross_site_probabilities(const WaveFunction& scattering_state) {
  return site_probabilities(map_e(scattering_state));
}

ProbabilityGrid<BondId> cross_bond_probabilities(const WaveFunction& coined_state) {
  return bond_probabilities(map_e_dagger(coined_state));
}

WaveFunction preset_initial_state(Model model) {
  const Complex half{0.5, 0.0};
  const Complex half_i{0.0, 0.5};
  if (model == Model::scattering) {
    return WaveFunction::from_terms({{ScatteringSquare{+1, +1, 0, 0}, half},
                                     {ScatteringSquare{-1, -1, 0, 0}, half_i},
                                     {ScatteringSquare{-1, +1, 0, 0}, half},
                                     {ScatteringSquare{+1, -1, 0, 0}, half_i}});
  }
  return WaveFunction::from_terms({{CoinedSquare{0, 0, 1}, half},
                                   {CoinedSquare{0, 0, 3}, half_i},
                                   {CoinedSquare{0, 0, 2}, half},
                                   {CoinedSquare{0, 0, 4}, half_i}});
}

Site rotate_natural_to_diagonal(Site s) { return {s.j - s.k, s.j + s.k}; }

std::vector<BasisLabel> window_labels(Model model, int radius) {
  std::vector<BasisLabel> labels;
  const std::size_t side = 2 * static_cast<std::size_t>(radius) + 1;
  labels.reserve(4 * side * side);
  for (int j = -radius; j <= radius; ++j) {
    for (int k = -radius; k <= radius; ++k) {
      if (model == Model::coined) {
        for (int sigma = 1; sigma <= 4; ++sigma) labels.push_back(CoinedSquare{j, k, sigma});
      } else {
        for (int sx : {-1, +1}) {
          for (int sy : {-1, +1}) labels.push_back(ScatteringSquare{sx, sy, j, k});
        }
      }
    }
  }
  return labels;
}

std::pair<double, double> plot_xy(const Site& s) {
  return {static_cast<double>(s.j), static_cast<double>(s.k)};
}

std::pair<double, double> plot_xy(const BondId& b) {
  if (b.orientation == Orientation::horizontal) return {b.j - 0.5, static_cast<double>(b.k)};
  return {static_cast<double>(b.j), b.k - 0.5};
}

}  // namespace qwalk::square

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

#include "qwalk/line1d.hpp"

#include <cmath>
#include <utility>

namespace qwalk::line {

namespace {

//! row/column slot of a coin value in the (|−⟩,|+⟩) ordering
int idx(int sigma) { return sigma > 0 ? 1 : 0; }

const Coined1D& as_coined(const BasisLabel& label) {
  const auto* l = std::get_if<Coined1D>(&label);
  if (!l) throw ModelMismatchError("model/lattice mismatch: expected a coined line label");
  return *l;
}

const Scattering1D& as_scattering(const BasisLabel& label) {
  const auto* l = std::get_if<Scattering1D>(&label);
  if (!l) throw ModelMismatchError("model/lattice mismatch: expected a scattering line label");
  return *l;
}

}  // namespace

Field make_field(Matrix default_matrix) { return Field(2, std::move(default_matrix)); }

Matrix general_coin(const CoinParams& p) {
  const Complex global = std::polar(1.0, p.gamma);
  const double c = std::cos(p.theta);
  const double s = std::sin(p.theta);
  Matrix m(2);
  m.at(0, 0) = global * std::polar(1.0, p.xi) * c;
  m.at(0, 1) = global * std::polar(1.0, p.zeta) * s;
  m.at(1, 0) = global * std::polar(1.0, -p.zeta) * s;
  m.at(1, 1) = -global * std::polar(1.0, -p.xi) * c;
  return m;
}

ScatterAmps scatter_amps(const ScatterParams& p) {
  if (!(p.rho >= 0.0 && p.rho <= 1.0)) {
    throw ParameterError("reflection probability rho must lie in [0,1]");
  }
  const Complex global = std::polar(1.0, p.lambda);
  const double t_mag = std::sqrt(1.0 - p.rho);
  const double r_mag = std::sqrt(p.rho);
  ScatterAmps a;
  a.t_plus = global * t_mag * std::polar(1.0, p.phase_t);
  a.t_minus = global * t_mag * std::polar(1.0, -p.phase_t);
  a.r_plus = global * r_mag * std::polar(1.0, p.phase_r);
  a.r_minus = global * -r_mag * std::polar(1.0, -p.phase_r);
  return a;
}

Matrix scatter_matrix(const ScatterParams& p) {
  const ScatterAmps a = scatter_amps(p);
  Matrix m(2);
  m.at(0, 0) = a.t_minus;  // c_{−−}
  m.at(0, 1) = a.r_plus;   // c_{−+}
  m.at(1, 0) = a.r_minus;  // c_{+−}
  m.at(1, 1) = a.t_plus;   // c_{++}
  return m;
}

StepOperator coined_step(const Field& field) {
  return StepOperator(LabelKind::coined_1d, [field](const BasisLabel& label) {
    const auto& l = as_coined(label);
    const Matrix& m = field.at(l.j);
    StepTerms terms;
    const Complex keep = m.at(idx(l.sigma), idx(l.sigma));
    const Complex flip = m.at(idx(-l.sigma), idx(l.sigma));
    if (keep != 0.0) terms.push(Coined1D{l.j + l.sigma, l.sigma}, keep);
    if (flip != 0.0) terms.push(Coined1D{l.j - l.sigma, -l.sigma}, flip);
    return terms;
  });
}

StepOperator scattering_step(const Field& field) {
  return StepOperator(LabelKind::scattering_1d, [field](const BasisLabel& label) {
    const auto& l = as_scattering(label);
    const Matrix& m = field.at(l.j);
    StepTerms terms;
    const Complex t = m.at(idx(l.sigma), idx(l.sigma));
    const Complex r = m.at(idx(-l.sigma), idx(l.sigma));
    if (t != 0.0) terms.push(Scattering1D{l.sigma, l.j + l.sigma}, t);
    if (r != 0.0) terms.push(Scattering1D{-l.sigma, l.j - l.sigma}, r);
    return terms;
  });
}

BasisLabel e_map_label(const BasisLabel& scattering_label) {
  const auto& l = as_scattering(scattering_label);
  return Coined1D{l.j, l.sigma};
}

BasisLabel e_dagger_label(const BasisLabel& coined_label) {
  const auto& l = as_coined(coined_label);
  return Scattering1D{l.sigma, l.j};
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

std::vector<BasisLabel> projector(Model model, int j) {
  if (model == Model::coined) {
    return {Coined1D{j, -1}, Coined1D{j, +1}};
  }
  // the two states on the bond between j−1 and j
  return {Scattering1D{+1, j}, Scattering1D{-1, j - 1}};
}

std::vector<BasisLabel> cross_projector(Model evolved_model, int j) {
  if (evolved_model == Model::scattering) {
    // E-preimage of the coined site projector at j
    return {Scattering1D{-1, j}, Scattering1D{+1, j}};
  }
  // E-image of the scattering bond projector at j
  return {Coined1D{j, +1}, Coined1D{j - 1, -1}};
}

namespace {

int bond_index(const Scattering1D& l) { return l.sigma > 0 ? l.j : l.j + 1; }

}  // namespace

ProbabilityGrid<int> site_probabilities(const WaveFunction& coined_state) {
  ProbabilityGrid<int> grid;
  for (const auto& e : coined_state.entries()) grid[as_coined(e.label).j] += abs2(e.amp);
  return grid;
}

ProbabilityGrid<int> bond_probabilities(const WaveFunction& scattering_state) {
  ProbabilityGrid<int> grid;
  for (const auto& e : scattering_state.entries()) {
    grid[bond_index(as_scattering(e.label))] += abs2(e.amp);
  }
  return grid;
}

ProbabilityGrid<int> cross_site_probabilities(const WaveFunction& scattering_state) {
  return site_probabilities(map_e(scattering_state));
}

ProbabilityGrid<int> cross_bond_probabilities(const WaveFunction& coined_state) {
  return bond_probabilities(map_e_dagger(coined_state));
}

std::vector<BasisLabel> window_labels(Model model, int radius) {
  std::vector<BasisLabel> labels;
  labels.reserve(2 * (2 * static_cast<std::size_t>(radius) + 1));
  for (int j = -radius; j <= radius; ++j) {
    for (int sigma : {-1, +1}) {
      if (model == Model::coined) {
        labels.push_back(Coined1D{j, sigma});
      } else {
        labels.push_back(Scattering1D{sigma, j});
      }
    }
  }
  return labels;
}

}  // namespace qwalk::line

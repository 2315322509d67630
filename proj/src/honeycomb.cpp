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

#include "qwalk/honeycomb.hpp"

#include <cmath>
#include <tuple>
#include <utility>

namespace qwalk::honeycomb {

namespace {

const CoinedHoney& as_coined(const BasisLabel& label) {
  const auto* l = std::get_if<CoinedHoney>(&label);
  if (!l) throw ModelMismatchError("model/lattice mismatch: expected a coined honeycomb label");
  return *l;
}

const ScatteringHoney& as_scattering(const BasisLabel& label) {
  const auto* l = std::get_if<ScatteringHoney>(&label);
  if (!l) {
    throw ModelMismatchError("model/lattice mismatch: expected a scattering honeycomb label");
  }
  return *l;
}

void require_sigma(int sigma) {
  if (sigma < 0 || sigma > 2) throw ParameterError("honeycomb sigma must be in 0..2");
}

}  // namespace

int mod2(long long x) {
  const int m = static_cast<int>(x % 2);
  return m < 0 ? m + 2 : m;
}

int mod3(long long x) {
  const int m = static_cast<int>(x % 3);
  return m < 0 ? m + 3 : m;
}

int phi(int k, int sigma) {
  require_sigma(sigma);
  const int row_sign = mod2(k) == 0 ? 1 : -1;  // (−1)^k
  return mod3(sigma - row_sign);
}

Site step_site(Site site, int sigma) {
  require_sigma(sigma);
  // site class: offset of sigma against [j + [k]₂]₃ decides the direction
  const int cls = mod3(static_cast<long long>(site.j) + mod2(site.k));
  const int d = mod3(sigma - cls);
  const int row_sign = mod2(site.k) == 0 ? 1 : -1;  // (−1)^k
  switch (d) {
    case 0: return {site.j, site.k + row_sign};      // vertical bond
    case 1: return {site.j - 1, site.k - row_sign};  // diagonal, j decreasing
    default: return {site.j + 1, site.k - row_sign};  // diagonal, j increasing
  }
}

std::pair<Site, int> bond_partner(Site site, int sigma) {
  const int out = phi(site.k, sigma);
  return {step_site(site, out), out};
}

BondKey bond_of(Site site, int sigma) {
  require_sigma(sigma);
  const auto [other, other_sigma] = bond_partner(site, sigma);
  const auto mine = std::tuple(site.j, site.k, sigma);
  const auto theirs = std::tuple(other.j, other.k, other_sigma);
  if (mine <= theirs) return {site.j, site.k, sigma};
  return {other.j, other.k, other_sigma};
}

Field make_field(Matrix default_matrix) { return Field(3, std::move(default_matrix)); }

StepOperator coined_step(const Field& field) {
  return StepOperator(LabelKind::coined_honeycomb, [field](const BasisLabel& label) {
    const auto& l = as_coined(label);
    const Matrix& m = field.at({l.j, l.k});
    StepTerms terms;
    for (int out = 0; out < 3; ++out) {
      const Complex amp = m.at(out, l.sigma);
      if (amp == 0.0) continue;
      const Site target = step_site({l.j, l.k}, out);
      terms.push(CoinedHoney{target.j, target.k, out}, amp);
    }
    return terms;
  });
}

StepOperator scattering_step(const Field& field) {
  return StepOperator(LabelKind::scattering_honeycomb, [field](const BasisLabel& label) {
    const auto& l = as_scattering(label);
    const Matrix& m = field.at({l.j, l.k});
    StepTerms terms;
    // β = φ_k(σ) is the reflection back along the incoming bond; the other
    // two outgoing directions are transmissions. All three read column σ.
    for (int out = 0; out < 3; ++out) {
      const Complex amp = m.at(out, l.sigma);
      if (amp == 0.0) continue;
      const Site target = step_site({l.j, l.k}, out);
      terms.push(ScatteringHoney{out, target.j, target.k}, amp);
    }
    return terms;
  });
}

BasisLabel e_map_label(const BasisLabel& scattering_label) {
  const auto& l = as_scattering(scattering_label);
  return CoinedHoney{l.j, l.k, l.sigma};
}

BasisLabel e_dagger_label(const BasisLabel& coined_label) {
  const auto& l = as_coined(coined_label);
  return ScatteringHoney{l.sigma, l.j, l.k};
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

ProbabilityGrid<BondKey> bond_probabilities(const WaveFunction& scattering_state) {
  ProbabilityGrid<BondKey> grid;
  for (const auto& e : scattering_state.entries()) {
    const auto& l = as_scattering(e.label);
    grid[bond_of({l.j, l.k}, l.sigma)] += abs2(e.amp);
  }
  return grid;
}

ProbabilityGrid<Site> cross_site_probabilities(const WaveFunction& scattering_state) {
  return site_probabilities(map_e(scattering_state));
}

ProbabilityGrid<BondKey> cross_bond_probabilities(const WaveFunction& coined_state) {
  return bond_probabilities(map_e_dagger(coined_state));
}

WaveFunction preset_initial_state(Model model) {
  if (model == Model::scattering) {
    return WaveFunction::from_terms({{ScatteringHoney{1, 0, 0}, 1.0}});
  }
  return WaveFunction::from_terms({{CoinedHoney{0, 0, 1}, 1.0}});
}

std::vector<BasisLabel> window_labels(Model model, int radius) {
  std::vector<BasisLabel> labels;
  const std::size_t side = 2 * static_cast<std::size_t>(radius) + 1;
  labels.reserve(3 * side * side);
  for (int j = -radius; j <= radius; ++j) {
    for (int k = -radius; k <= radius; ++k) {
      for (int sigma = 0; sigma < 3; ++sigma) {
        if (model == Model::coined) {
          labels.push_back(CoinedHoney{j, k, sigma});
        } else {
          labels.push_back(ScatteringHoney{sigma, j, k});
        }
      }
    }
  }
  return labels;
}

std::pair<double, double> plot_xy(const Site& s) {
  const int parity = mod2(s.k);
  const double x = 0.5 * std::sqrt(3.0) * s.j;
  const double y = 1.5 * ((s.k - parity) / 2) + parity;
  return {x, y};
}

std::pair<double, double> plot_xy(const BondKey& b) {
  const auto [a_x, a_y] = plot_xy(Site{b.j, b.k});
  const auto [other, other_sigma] = bond_partner({b.j, b.k}, b.sigma);
  const auto [b_x, b_y] = plot_xy(other);
  return {0.5 * (a_x + b_x), 0.5 * (a_y + b_y)};
}

}  // namespace qwalk::honeycomb

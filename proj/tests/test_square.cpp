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

#include <cmath>

#include "doctest.h"
#include "qwalk/coins.hpp"
#include "qwalk/line1d.hpp"
#include "qwalk/square.hpp"
#include "support.hpp"

using namespace qwalk;

namespace {

const double kInvSqrt2 = std::sqrt(0.5);

}  // namespace

TEST_CASE("the direction-pair association") {
  CHECK(square::sigma_pair_to_coin(+1, +1) == 1);
  CHECK(square::sigma_pair_to_coin(-1, +1) == 2);
  CHECK(square::sigma_pair_to_coin(-1, -1) == 3);
  CHECK(square::sigma_pair_to_coin(+1, -1) == 4);
  CHECK_THROWS_AS(square::sigma_pair_to_coin(0, 1), ParameterError);
  for (int sigma = 1; sigma <= 4; ++sigma) {
    const auto [sx, sy] = square::coin_to_sigma_pair(sigma);
    CHECK(square::sigma_pair_to_coin(sx, sy) == sigma);
  }
  CHECK_THROWS_AS(square::coin_to_sigma_pair(5), ParameterError);
}

TEST_CASE("natural step: identity coin shifts along the coin direction") {
  const auto op = square::coined_step(square::make_field(Matrix::identity(4)));
  const auto out = apply_step(WaveFunction::from_terms({{CoinedSquare{0, 0, 2}, 1.0}}), op);
  REQUIRE(out.size() == 1);
  CHECK(out.amplitude(CoinedSquare{0, 1, 2}) == Complex(1.0));
}

TEST_CASE("natural step: the decoupled Hadamard never mixes the axis pairs") {
  const auto op =
      square::coined_step(square::make_field(coins::catalog("decoupled-hadamard4").matrix));
  const auto psi0 = WaveFunction::from_terms(
      {{CoinedSquare{0, 0, 1}, kInvSqrt2}, {CoinedSquare{0, 0, 3}, Complex(0, kInvSqrt2)}});
  const auto out = evolve(psi0, op, 8);
  for (const auto& e : out.entries()) {
    const auto& l = std::get<CoinedSquare>(e.label);
    CHECK((l.sigma == 1 || l.sigma == 3));
    CHECK(l.k == 0);
  }
}

TEST_CASE("natural step: one Grover step from the reference state") {
  const auto op = square::coined_step(square::make_field(coins::catalog("grover4").matrix));
  const auto out = apply_step(square::preset_initial_state(Model::coined), op);
  const auto grid = square::site_probabilities(out);
  CHECK(grid.size() == 4);
  CHECK(grid.count({+1, 0}) == 1);
  CHECK(grid.count({-1, 0}) == 1);
  CHECK(grid.count({0, +1}) == 1);
  CHECK(grid.count({0, -1}) == 1);
  CHECK(grid_sum(grid) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("diagonal step: identity coin moves along the diagonal") {
  const auto op = square::diagonal_step(square::make_field(Matrix::identity(4)));
  const auto out = apply_step(WaveFunction::from_terms({{CoinedSquare{0, 0, 1}, 1.0}}), op);
  REQUIRE(out.size() == 1);
  CHECK(out.amplitude(CoinedSquare{1, 1, 1}) == Complex(1.0));
}

TEST_CASE("diagonal step: the pattern is the natural one rotated by pi/4") {
  for (const auto& name : {"decoupled-hadamard4", "hadamard4", "grover4", "dft4"}) {
    const auto field = square::make_field(coins::catalog(name).matrix);
    const auto natural = square::coined_step(field);
    const auto diagonal = square::diagonal_step(field);
    for (int n = 0; n <= 6; ++n) {
      const auto nat = square::site_probabilities(
          evolve(square::preset_initial_state(Model::coined), natural, n));
      const auto diag = square::site_probabilities(
          evolve(square::preset_initial_state(Model::coined), diagonal, n));
      ProbabilityGrid<Site> rotated;
      for (const auto& [site, p] : nat) rotated[square::rotate_natural_to_diagonal(site)] = p;
      CHECK(grid_max_abs_diff(rotated, diag) <= 1e-12);
    }
  }
}

TEST_CASE("diagonal step: norm is preserved over 20 steps") {
  const auto op = square::diagonal_step(square::make_field(coins::catalog("grover4").matrix));
  const auto out = evolve(square::preset_initial_state(Model::coined), op, 20);
  CHECK(std::abs(norm_sq(out) - 1.0) <= 1e-12);
}

TEST_CASE("scattering step: identity matrix transmits along +x") {
  const auto op = square::scattering_step(square::make_field(Matrix::identity(4)));
  const auto out = apply_step(WaveFunction::from_terms({{ScatteringSquare{+1, +1, 0, 0}, 1.0}}),
                              op);
  REQUIRE(out.size() == 1);
  CHECK(out.amplitude(ScatteringSquare{+1, +1, 1, 0}) == Complex(1.0));
}

TEST_CASE("scattering step: the (+,-) outgoing pair lands at (j, k-1)") {
  const auto op = square::scattering_step(square::make_field(Matrix::identity(4)));
  const auto out = apply_step(WaveFunction::from_terms({{ScatteringSquare{+1, -1, 2, 5}, 1.0}}),
                              op);
  REQUIRE(out.size() == 1);
  CHECK(out.amplitude(ScatteringSquare{+1, -1, 2, 4}) == Complex(1.0));
}

TEST_CASE("scattering step: the Grover column for the ++ state") {
  const auto op = square::scattering_step(square::make_field(coins::catalog("grover4").matrix));
  const auto out = apply_step(WaveFunction::from_terms({{ScatteringSquare{+1, +1, 0, 0}, 1.0}}),
                              op);
  REQUIRE(out.size() == 4);
  CHECK(testing::dist(out.amplitude(ScatteringSquare{-1, -1, -1, 0}), Complex(0.5)) < 1e-15);
  CHECK(testing::dist(out.amplitude(ScatteringSquare{+1, +1, +1, 0}), Complex(-0.5)) < 1e-15);
  CHECK(testing::dist(out.amplitude(ScatteringSquare{+1, -1, 0, -1}), Complex(0.5)) < 1e-15);
  CHECK(testing::dist(out.amplitude(ScatteringSquare{-1, +1, 0, +1}), Complex(0.5)) < 1e-15);
}

TEST_CASE("map_e on the square lattice") {
  const auto psi = WaveFunction::from_terms({{ScatteringSquare{-1, +1, 2, -1}, Complex(0, 1)}});
  const auto mapped = square::map_e(psi);
  REQUIRE(mapped.size() == 1);
  CHECK(mapped.amplitude(CoinedSquare{2, -1, 2}) == Complex(0, 1));

  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = testing::random_state(LabelKind::scattering_square, rng);
    const auto round = square::map_e_dagger(square::map_e(s));
    REQUIRE(round.size() == s.size());
    for (const auto& e : s.entries()) CHECK(round.amplitude(e.label) == e.amp);
  }
}

TEST_CASE("equivalence: U_s = E†U_cE on a radius-4 window") {
  const auto window = square::window_labels(Model::scattering, 4);
  for (const auto& name : {"decoupled-hadamard4", "hadamard4", "grover4", "dft4"}) {
    const auto field = square::make_field(coins::catalog(name).matrix);
    const double dev =
        conjugation_max_deviation(square::scattering_step(field), square::coined_step(field),
                                  square::e_map_label, square::e_dagger_label, window);
    INFO(name);
    CHECK(dev <= 1e-12);
  }
}

TEST_CASE("bond bookkeeping for the scattering grid") {
  CHECK(square::bond_of(ScatteringSquare{+1, +1, 0, 0}) ==
        square::BondId{0, 0, square::Orientation::horizontal});
  CHECK(square::bond_of(ScatteringSquare{-1, -1, -1, 0}) ==
        square::BondId{0, 0, square::Orientation::horizontal});
  CHECK(square::bond_of(ScatteringSquare{-1, +1, 0, 0}) ==
        square::BondId{0, 0, square::Orientation::vertical});
  CHECK(square::bond_of(ScatteringSquare{+1, -1, 0, -1}) ==
        square::BondId{0, 0, square::Orientation::vertical});

  const auto fresh = WaveFunction::from_terms({{ScatteringSquare{+1, +1, 0, 0}, 1.0}});
  const auto grid = square::bond_probabilities(fresh);
  REQUIRE(grid.size() == 1);
  CHECK(grid.at({0, 0, square::Orientation::horizontal}) == 1.0);
}

TEST_CASE("cross recovery at n = 20 with the decoupled Hadamard") {
  const auto field = square::make_field(coins::catalog("decoupled-hadamard4").matrix);
  const auto coined_n = evolve(square::preset_initial_state(Model::coined),
                               square::coined_step(field), 20);
  const auto scattering_n = evolve(square::preset_initial_state(Model::scattering),
                                   square::scattering_step(field), 20);
  CHECK(grid_max_abs_diff(square::site_probabilities(coined_n),
                          square::cross_site_probabilities(scattering_n)) <= 1e-10);
  CHECK(grid_max_abs_diff(square::bond_probabilities(scattering_n),
                          square::cross_bond_probabilities(coined_n)) <= 1e-10);
  CHECK(grid_sum(square::site_probabilities(coined_n)) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(grid_sum(square::bond_probabilities(scattering_n)) ==
        doctest::Approx(1.0).epsilon(1e-10));
  // the two native representations still disagree as distributions
  CHECK(grid_max_abs_diff(square::site_probabilities(coined_n),
                          testing::anchored_bond_mass(square::bond_probabilities(scattering_n))) >
        1e-6);
}

TEST_CASE("the decoupled Hadamard walk factorizes onto the axes (1D oracle)") {
  const int n = 20;
  const auto grid = square::site_probabilities(
      evolve(square::preset_initial_state(Model::coined),
             square::coined_step(square::make_field(coins::catalog("decoupled-hadamard4").matrix)),
             n));

  // oracle: the 1D Hadamard walk from (|+> + i|−>)/√2, run with the line module
  const auto line_field = line::make_field(coins::catalog("hadamard2").matrix);
  const auto psi1d = WaveFunction::from_terms(
      {{Coined1D{0, +1}, kInvSqrt2}, {Coined1D{0, -1}, Complex(0, kInvSqrt2)}});
  const auto p1d = line::site_probabilities(evolve(psi1d, line::coined_step(line_field), n));

  ProbabilityGrid<Site> expected;
  for (const auto& [j, p] : p1d) {
    expected[{j, 0}] += 0.5 * p;  // the x axis carries half of the weight
    expected[{0, j}] += 0.5 * p;  // the y axis carries the other half
  }
  CHECK(grid_max_abs_diff(grid, expected) <= 1e-12);
  for (const auto& [site, p] : grid) {
    CHECK((site.j == 0 || site.k == 0));
  }
}

TEST_CASE("witness: native square grids differ for the 4x4 Hadamard at n = 3") {
  const auto field = square::make_field(coins::catalog("hadamard4").matrix);
  const auto coined_n = evolve(square::preset_initial_state(Model::coined),
                               square::coined_step(field), 3);
  const auto scattering_n = evolve(square::preset_initial_state(Model::scattering),
                                   square::scattering_step(field), 3);
  const double witness =
      grid_max_abs_diff(square::site_probabilities(coined_n),
                        testing::anchored_bond_mass(square::bond_probabilities(scattering_n)));
  CHECK(witness > 1e-6);
}

TEST_CASE("evolve: 20 Grover steps keep total probability at 1") {
  const auto op = square::scattering_step(square::make_field(coins::catalog("grover4").matrix));
  const auto out = evolve(square::preset_initial_state(Model::scattering), op, 20);
  CHECK(grid_sum(square::bond_probabilities(out)) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("plot coordinates: sites on integers, bonds on midpoints") {
  CHECK(square::plot_xy(Site{2, -1}) == std::pair(2.0, -1.0));
  CHECK(square::plot_xy(square::BondId{0, 0, square::Orientation::horizontal}) ==
        std::pair(-0.5, 0.0));
  CHECK(square::plot_xy(square::BondId{0, 0, square::Orientation::vertical}) ==
        std::pair(0.0, -0.5));
}

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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "qwalk/cli/runner.hpp"

using namespace qwalk;
namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "qwalk_cli_tests" / name;
  fs::remove_all(dir);
  return dir;
}

const std::string kSquareConfig =
    "lattice = square\n"
    "model = coined\n"
    "matrix.name = grover4\n"
    "steps = 4\n"
    "initial.preset = square-paper\n"
    "output = both\n";

}  // namespace

TEST_CASE("parse_config_text reads a full config and applies defaults") {
  const auto config = cli::parse_config_text(kSquareConfig);
  CHECK(config.lattice == Lattice::square);
  CHECK(config.model == Model::coined);
  CHECK(config.steps == 4);
  CHECK(config.output == cli::OutputKind::both);
  CHECK(config.matrix_name == "grover4");
  CHECK(config.initial_preset == "square-paper");

  const auto defaults = cli::parse_config_text(
      "lattice = line\nmodel = coined\nmatrix.name = hadamard2\ninitial.0 = 0 1 1 0\n");
  CHECK(defaults.steps == 20);
  CHECK(defaults.output == cli::OutputKind::both);
}

TEST_CASE("config validation produces field-level errors") {
  using cli::parse_config_text;
  // unknown values and keys
  CHECK_THROWS_WITH_AS(parse_config_text("lattice = cubic\nmodel = coined\n"),
                       doctest::Contains("lattice"), cli::ConfigError);
  CHECK_THROWS_WITH_AS(
      parse_config_text("lattice = line\nmodel = coined\nmatrix.name = hadamard2\n"
                        "initial.preset = square-paper\ntypo = 1\n"),
      doctest::Contains("initial.preset"), cli::ConfigError);
  CHECK_THROWS_WITH_AS(parse_config_text("lattice = line\nlattice = line\n"),
                       doctest::Contains("duplicate"), cli::ConfigError);
  // matrix is required and must fit the lattice
  CHECK_THROWS_WITH_AS(
      parse_config_text("lattice = line\nmodel = coined\ninitial.0 = 0 1 1 0\n"),
      doctest::Contains("matrix"), cli::ConfigError);
  CHECK_THROWS_WITH_AS(
      parse_config_text("lattice = square\nmodel = coined\nmatrix.name = grover3\n"
                        "initial.preset = square-paper\n"),
      doctest::Contains("dimension"), cli::ConfigError);
  // the scattering model does not exist on the diagonal lattice
  CHECK_THROWS_WITH_AS(
      parse_config_text("lattice = square-diagonal\nmodel = scattering\n"
                        "matrix.name = grover4\ninitial.preset = square-paper\n"),
      doctest::Contains("square-diagonal"), cli::ConfigError);
}

TEST_CASE("a non-unitary custom matrix is rejected at load time") {
  const std::string text =
      "lattice = line\n"
      "model = scattering\n"
      "matrix.dim = 2\n"
      "matrix.row.0 = 1 0  0 0\n"
      "matrix.row.1 = 1 0  0 0\n"
      "initial.0 = 1 0 1 0\n";
  CHECK_THROWS_WITH_AS(cli::parse_config_text(text), doctest::Contains("unitary"),
                       cli::ConfigError);
}

TEST_CASE("inline matrices and initial terms round through the parser") {
  const double h = std::sqrt(0.5);
  std::ostringstream text;
  text.precision(17);
  text << "lattice = line\nmodel = coined\n"
       << "matrix.dim = 2\n"
       << "matrix.row.0 = (" << h << ",0) (" << h << ",0)\n"
       << "matrix.row.1 = (" << h << ",0) (" << -h << ",0)\n"
       << "initial.0 = 0 1 " << h << " 0\n"
       << "initial.1 = 0 -1 0 " << h << "\n";
  const auto config = cli::parse_config_text(text.str());
  CHECK(config.matrix_name == "inline");
  CHECK(config.matrix.at(1, 1).real() == doctest::Approx(-h));
  const auto psi = cli::initial_state(config);
  CHECK(psi.size() == 2);
  CHECK(psi.amplitude(Coined1D{0, -1}).imag() == doctest::Approx(h));
}

TEST_CASE("initial states must be normalized within 1e-9") {
  const std::string text =
      "lattice = line\nmodel = coined\nmatrix.name = hadamard2\n"
      "initial.0 = 0 1 0.5 0\n";
  const auto config = cli::parse_config_text(text);
  CHECK_THROWS_WITH_AS(cli::initial_state(config), doctest::Contains("norm"), cli::ConfigError);
}

TEST_CASE("per-site overrides reach the step operator") {
  const std::string text =
      "lattice = line\nmodel = coined\nmatrix.name = hadamard2\n"
      "override.0.site = 1\n"
      "override.0.dim = 2\n"
      "override.0.row.0 = 1 0  0 0\n"
      "override.0.row.1 = 0 0  -1 0\n"
      "initial.0 = 0 1 1 0\n";
  const auto config = cli::parse_config_text(text);
  REQUIRE(config.overrides.size() == 1);
  const auto op = cli::build_step(config);
  // after the first Hadamard split, site 1 applies diag(1,-1), so the right
  // branch flies ballistically: |amp| stays 1/√2 (it would be 1/2 without the
  // override)
  const auto psi = evolve(cli::initial_state(config), op, 2);
  CHECK(std::abs(psi.amplitude(Coined1D{2, 1})) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("run_experiment writes complete, reproducible grids") {
  const auto config = cli::parse_config_text(kSquareConfig);
  const auto dir_a = fresh_dir("run_a");
  const auto dir_b = fresh_dir("run_b");
  const auto a = cli::run_experiment(config, {dir_a.string(), std::nullopt});
  const auto b = cli::run_experiment(config, {dir_b.string(), std::nullopt});

  CHECK(a.native_sum == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(a.cross_sum == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(fs::exists(dir_a / "native.csv"));
  CHECK(fs::exists(dir_a / "cross.csv"));
  CHECK(fs::exists(dir_a / "meta.txt"));

  // byte-identical grid files across runs of the same config
  CHECK(slurp((dir_a / "native.csv").string()) == slurp((dir_b / "native.csv").string()));
  CHECK(slurp((dir_a / "cross.csv").string()) == slurp((dir_b / "cross.csv").string()));

  const std::string native = slurp((dir_a / "native.csv").string());
  CHECK(native.rfind("x,y,position_kind,j,k,orientation,probability\n", 0) == 0);
  // at most (2n+1)^2 populated sites after n steps
  const auto rows = static_cast<long>(std::count(native.begin(), native.end(), '\n')) - 1;
  CHECK(rows <= 9 * 9);
  CHECK(slurp((dir_a / "meta.txt").string()).find("config_hash = ") != std::string::npos);
}

TEST_CASE("run_experiment with steps = 0 projects the initial state") {
  const auto config = cli::parse_config_text(kSquareConfig);
  const auto dir = fresh_dir("run_zero");
  const auto result = cli::run_experiment(config, {dir.string(), 0});
  const std::string native = slurp((dir / "native.csv").string());
  // the whole distribution is one site row at the origin
  CHECK(native == "x,y,position_kind,j,k,orientation,probability\n0,0,site,0,0,-,1\n");
  CHECK(result.norm_sq_final == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("verify: unitarity, equivalence and cross-recovery pass on catalog setups") {
  const auto square_config = cli::parse_config_text(kSquareConfig);
  auto options = cli::VerifyOptions{};
  options.check = cli::CheckKind::unitarity;
  options.window_radius = 4;
  CHECK(cli::run_verify(square_config, options).passed);

  options.check = cli::CheckKind::equivalence;
  const auto eq = cli::run_verify(square_config, options);
  CHECK(eq.passed);
  CHECK(eq.report_text.find("result = pass") != std::string::npos);

  const auto dft_config = cli::parse_config_text(
      "lattice = square\nmodel = scattering\nmatrix.name = dft4\n"
      "initial.preset = square-paper\n");
  CHECK(cli::run_verify(dft_config, options).passed);

  options.check = cli::CheckKind::cross_recovery;
  CHECK(cli::run_verify(square_config, options).passed);

  // an unachievable tolerance reports a failure instead of throwing; the
  // Hadamard columns carry a ~2e-16 rounding residue (unlike Grover's exact
  // ±1/2 entries)
  const auto line_config = cli::parse_config_text(
      "lattice = line\nmodel = coined\nmatrix.name = hadamard2\ninitial.0 = 0 1 1 0\n");
  options.check = cli::CheckKind::unitarity;
  options.tol = 1e-18;
  const auto failed = cli::run_verify(line_config, options);
  CHECK_FALSE(failed.passed);
  CHECK(failed.report_text.find("result = fail") != std::string::npos);
}

TEST_CASE("verify: equivalence is rejected on the square-diagonal lattice") {
  const auto config = cli::parse_config_text(
      "lattice = square-diagonal\nmodel = coined\nmatrix.name = grover4\n"
      "initial.preset = square-paper\noutput = native-grid\n");
  auto options = cli::VerifyOptions{};
  options.check = cli::CheckKind::equivalence;
  CHECK_THROWS_AS(cli::run_verify(config, options), cli::ConfigError);
  options.check = cli::CheckKind::unitarity;
  CHECK(cli::run_verify(config, options).passed);
}

TEST_CASE("config hashes depend on the config text") {
  const auto a = cli::parse_config_text(kSquareConfig);
  const auto b = cli::parse_config_text(kSquareConfig + "# trailing comment\n");
  CHECK(cli::config_hash(a).size() == 16);
  CHECK(cli::config_hash(a) != cli::config_hash(b));
  CHECK(cli::config_hash(a) == cli::config_hash(cli::parse_config_text(kSquareConfig)));
}

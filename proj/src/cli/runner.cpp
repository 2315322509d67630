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

#include "qwalk/cli/runner.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qwalk/honeycomb.hpp"
#include "qwalk/line1d.hpp"
#include "qwalk/square.hpp"

namespace qwalk::cli {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct GridRow {
  double x = 0.0;
  double y = 0.0;
  std::string kind;         // "site" or "bond"
  int j = 0;
  int k = 0;
  std::string orientation;  // "-", "h", "v", or the honeycomb bond sigma
  double probability = 0.0;
};

std::vector<GridRow> site_rows_line(const ProbabilityGrid<int>& grid) {
  std::vector<GridRow> rows;
  for (const auto& [j, p] : grid) rows.push_back({double(j), 0.0, "site", j, 0, "-", p});
  return rows;
}

std::vector<GridRow> bond_rows_line(const ProbabilityGrid<int>& grid) {
  std::vector<GridRow> rows;
  for (const auto& [j, p] : grid) rows.push_back({j - 0.5, 0.0, "bond", j, 0, "-", p});
  return rows;
}

std::vector<GridRow> site_rows_square(const ProbabilityGrid<Site>& grid) {
  std::vector<GridRow> rows;
  for (const auto& [s, p] : grid) {
    const auto [x, y] = square::plot_xy(s);
    rows.push_back({x, y, "site", s.j, s.k, "-", p});
  }
  return rows;
}

std::vector<GridRow> bond_rows_square(const ProbabilityGrid<square::BondId>& grid) {
  std::vector<GridRow> rows;
  for (const auto& [b, p] : grid) {
    const auto [x, y] = square::plot_xy(b);
    rows.push_back({x, y, "bond", b.j, b.k, square::to_string(b.orientation), p});
  }
  return rows;
}

std::vector<GridRow> site_rows_honeycomb(const ProbabilityGrid<Site>& grid) {
  std::vector<GridRow> rows;
  for (const auto& [s, p] : grid) {
    const auto [x, y] = honeycomb::plot_xy(s);
    rows.push_back({x, y, "site", s.j, s.k, "-", p});
  }
  return rows;
}

std::vector<GridRow> bond_rows_honeycomb(const ProbabilityGrid<honeycomb::BondKey>& grid) {
  std::vector<GridRow> rows;
  for (const auto& [b, p] : grid) {
    const auto [x, y] = honeycomb::plot_xy(b);
    rows.push_back({x, y, "bond", b.j, b.k, std::to_string(b.sigma), p});
  }
  return rows;
}

double write_grid_csv(const std::string& path, const std::vector<GridRow>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write output file: " + path);
  out << "x,y,position_kind,j,k,orientation,probability\n";
  double sum = 0.0;
  for (const auto& r : rows) {
    out << fmt(r.x) << ',' << fmt(r.y) << ',' << r.kind << ',' << r.j << ',' << r.k << ','
        << r.orientation << ',' << fmt(r.probability) << '\n';
    sum += r.probability;
  }
  return sum;
}

//! native grid of the evolved model, as generic rows
std::vector<GridRow> native_rows(const ExperimentConfig& config, const WaveFunction& psi) {
  switch (config.lattice) {
    case Lattice::line:
      return config.model == Model::coined ? site_rows_line(line::site_probabilities(psi))
                                           : bond_rows_line(line::bond_probabilities(psi));
    case Lattice::square:
    case Lattice::square_diagonal:
      return config.model == Model::coined ? site_rows_square(square::site_probabilities(psi))
                                           : bond_rows_square(square::bond_probabilities(psi));
    case Lattice::honeycomb:
      return config.model == Model::coined
                 ? site_rows_honeycomb(honeycomb::site_probabilities(psi))
                 : bond_rows_honeycomb(honeycomb::bond_probabilities(psi));
  }
  throw ConfigError("unsupported lattice");
}

//! the other model's grid, recovered from the evolved state via cross projectors
std::vector<GridRow> cross_rows(const ExperimentConfig& config, const WaveFunction& psi) {
  switch (config.lattice) {
    case Lattice::line:
      return config.model == Model::coined
                 ? bond_rows_line(line::cross_bond_probabilities(psi))
                 : site_rows_line(line::cross_site_probabilities(psi));
    case Lattice::square:
      return config.model == Model::coined
                 ? bond_rows_square(square::cross_bond_probabilities(psi))
                 : site_rows_square(square::cross_site_probabilities(psi));
    case Lattice::square_diagonal:
      throw ConfigError("the square-diagonal lattice has no cross grid");
    case Lattice::honeycomb:
      return config.model == Model::coined
                 ? bond_rows_honeycomb(honeycomb::cross_bond_probabilities(psi))
                 : site_rows_honeycomb(honeycomb::cross_site_probabilities(psi));
  }
  throw ConfigError("unsupported lattice");
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& config, const RunOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const int steps = options.steps_override.value_or(config.steps);
  if (steps < 0) throw ConfigError("steps: must be nonnegative");

  const WaveFunction psi0 = initial_state(config);
  const StepOperator op = build_step(config);
  const WaveFunction psi = evolve(psi0, op, steps);

  namespace fs = std::filesystem;
  fs::create_directories(options.out_dir);

  RunResult result;
  result.norm_sq_final = norm_sq(psi);
  if (config.output == OutputKind::native || config.output == OutputKind::both) {
    const std::string path = (fs::path(options.out_dir) / "native.csv").string();
    result.native_sum = write_grid_csv(path, native_rows(config, psi));
    result.files_written.push_back(path);
  }
  if (config.output == OutputKind::cross || config.output == OutputKind::both) {
    const std::string path = (fs::path(options.out_dir) / "cross.csv").string();
    result.cross_sum = write_grid_csv(path, cross_rows(config, psi));
    result.files_written.push_back(path);
  }

  const auto elapsed = std::chrono::steady_clock::now() - started;
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  const std::string meta_path = (fs::path(options.out_dir) / "meta.txt").string();
  std::ofstream meta(meta_path, std::ios::binary);
  if (!meta) throw ConfigError("cannot write output file: " + meta_path);
  meta << "config_hash = " << config_hash(config) << '\n'
       << "lattice = " << to_string(config.lattice) << '\n'
       << "model = " << to_string(config.model) << '\n'
       << "matrix = " << config.matrix_name << '\n'
       << "steps = " << steps << '\n'
       << "norm_sq = " << fmt(result.norm_sq_final) << '\n';
  if (result.native_sum >= 0.0) meta << "native_sum = " << fmt(result.native_sum) << '\n';
  if (result.cross_sum >= 0.0) meta << "cross_sum = " << fmt(result.cross_sum) << '\n';
  meta << "runtime_ms = " << ms << '\n';
  result.files_written.push_back(meta_path);
  return result;
}

std::string to_string(CheckKind check) {
  switch (check) {
    case CheckKind::unitarity: return "unitarity";
    case CheckKind::equivalence: return "equivalence";
    case CheckKind::cross_recovery: return "cross-recovery";
  }
  return "?";
}

namespace {

VerifyResult verify_unitarity(const ExperimentConfig& config, const VerifyOptions& options) {
  const double tol = options.tol.value_or(1e-12);
  const StepOperator op = build_step(config);
  std::vector<BasisLabel> window;
  switch (config.lattice) {
    case Lattice::line: window = line::window_labels(config.model, options.window_radius); break;
    case Lattice::square:
    case Lattice::square_diagonal:
      window = square::window_labels(config.model, options.window_radius);
      break;
    case Lattice::honeycomb:
      window = honeycomb::window_labels(config.model, options.window_radius);
      break;
  }
  const UnitarityReport report = verify_unitary_on_window(op, window, tol);
  VerifyResult result;
  result.passed = report.passed;
  result.max_deviation = report.max_deviation;
  result.tol = tol;
  std::ostringstream text;
  text << "window_size = " << window.size() << '\n'
       << "offending_pairs = " << report.offending.size() << '\n';
  result.report_text = text.str();
  return result;
}

VerifyResult verify_equivalence(const ExperimentConfig& config, const VerifyOptions& options) {
  const double tol = options.tol.value_or(1e-12);
  const StepOperator us = build_step_for_model(config, Model::scattering);
  const StepOperator uc = build_step_for_model(config, Model::coined);
  std::vector<BasisLabel> window;
  LabelMap e_map, e_dagger;
  switch (config.lattice) {
    case Lattice::line:
      window = line::window_labels(Model::scattering, options.window_radius);
      e_map = line::e_map_label;
      e_dagger = line::e_dagger_label;
      break;
    case Lattice::square:
      window = square::window_labels(Model::scattering, options.window_radius);
      e_map = square::e_map_label;
      e_dagger = square::e_dagger_label;
      break;
    case Lattice::honeycomb:
      window = honeycomb::window_labels(Model::scattering, options.window_radius);
      e_map = honeycomb::e_map_label;
      e_dagger = honeycomb::e_dagger_label;
      break;
    case Lattice::square_diagonal:
      throw ConfigError("equivalence is undefined for the square-diagonal lattice");
  }
  VerifyResult result;
  result.tol = tol;
  result.max_deviation = conjugation_max_deviation(us, uc, e_map, e_dagger, window);
  result.passed = result.max_deviation <= tol;
  std::ostringstream text;
  text << "window_size = " << window.size() << '\n';
  result.report_text = text.str();
  return result;
}

VerifyResult verify_cross_recovery(const ExperimentConfig& config, const VerifyOptions& options) {
  const double tol = options.tol.value_or(1e-10);
  const int steps = options.steps_override.value_or(config.steps);
  if (config.lattice == Lattice::square_diagonal) {
    throw ConfigError("cross-recovery is undefined for the square-diagonal lattice");
  }

  const WaveFunction own_initial = initial_state(config);
  WaveFunction coined0, scattering0;
  const auto to_coined = [&](const WaveFunction& s) {
    switch (config.lattice) {
      case Lattice::line: return line::map_e(s);
      case Lattice::square: return square::map_e(s);
      default: return honeycomb::map_e(s);
    }
  };
  const auto to_scattering = [&](const WaveFunction& c) {
    switch (config.lattice) {
      case Lattice::line: return line::map_e_dagger(c);
      case Lattice::square: return square::map_e_dagger(c);
      default: return honeycomb::map_e_dagger(c);
    }
  };
  if (config.model == Model::coined) {
    coined0 = own_initial;
    scattering0 = to_scattering(own_initial);
  } else {
    scattering0 = own_initial;
    coined0 = to_coined(own_initial);
  }

  const WaveFunction coined_final = evolve(coined0, build_step_for_model(config, Model::coined), steps);
  const WaveFunction scattering_final =
      evolve(scattering0, build_step_for_model(config, Model::scattering), steps);

  double site_dev = 0.0, bond_dev = 0.0;
  switch (config.lattice) {
    case Lattice::line:
      site_dev = grid_max_abs_diff(line::site_probabilities(coined_final),
                                   line::cross_site_probabilities(scattering_final));
      bond_dev = grid_max_abs_diff(line::bond_probabilities(scattering_final),
                                   line::cross_bond_probabilities(coined_final));
      break;
    case Lattice::square:
      site_dev = grid_max_abs_diff(square::site_probabilities(coined_final),
                                   square::cross_site_probabilities(scattering_final));
      bond_dev = grid_max_abs_diff(square::bond_probabilities(scattering_final),
                                   square::cross_bond_probabilities(coined_final));
      break;
    default:
      site_dev = grid_max_abs_diff(honeycomb::site_probabilities(coined_final),
                                   honeycomb::cross_site_probabilities(scattering_final));
      bond_dev = grid_max_abs_diff(honeycomb::bond_probabilities(scattering_final),
                                   honeycomb::cross_bond_probabilities(coined_final));
      break;
  }

  VerifyResult result;
  result.tol = tol;
  result.max_deviation = std::max(site_dev, bond_dev);
  result.passed = result.max_deviation <= tol;
  std::ostringstream text;
  text << "steps = " << steps << '\n'
       << "site_grid_deviation = " << fmt(site_dev) << '\n'
       << "bond_grid_deviation = " << fmt(bond_dev) << '\n';
  result.report_text = text.str();
  return result;
}

}  // namespace

VerifyResult run_verify(const ExperimentConfig& config, const VerifyOptions& options) {
  VerifyResult result;
  switch (options.check) {
    case CheckKind::unitarity: result = verify_unitarity(config, options); break;
    case CheckKind::equivalence: result = verify_equivalence(config, options); break;
    case CheckKind::cross_recovery: result = verify_cross_recovery(config, options); break;
  }
  std::ostringstream text;
  text << "check = " << to_string(options.check) << '\n'
       << "lattice = " << to_string(config.lattice) << '\n'
       << "model = " << to_string(config.model) << '\n'
       << "matrix = " << config.matrix_name << '\n'
       << result.report_text << "tol = " << fmt(result.tol) << '\n'
       << "max_deviation = " << fmt(result.max_deviation) << '\n'
       << "result = " << (result.passed ? "pass" : "fail") << '\n';
  result.report_text = text.str();
  return result;
}

}  // namespace qwalk::cli

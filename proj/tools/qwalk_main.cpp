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

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qwalk/cli/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalidInput = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qwalk: discrete-time quantum walk simulator (coined and scattering models)"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "out";
  std::string check_name = "unitarity";
  int window_radius = 5;
  std::optional<int> steps_override;
  std::optional<double> tol;

  CLI::App* run = app.add_subcommand("run", "evolve a walk and emit probability grids");
  run->add_option("--config", config_path, "experiment config file")->required();
  run->add_option("--out", out_dir, "output directory (default: out)");
  run->add_option("--steps", steps_override, "override the configured step count");

  CLI::App* verify = app.add_subcommand("verify", "run a consistency check, exit 1 on failure");
  verify->add_option("--config", config_path, "experiment config file")->required();
  verify->add_option("--check", check_name, "unitarity | equivalence | cross-recovery")
      ->required();
  verify->add_option("--window", window_radius, "window radius for operator checks (default 5)");
  verify->add_option("--tol", tol, "tolerance override");
  verify->add_option("--steps", steps_override, "override the configured step count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  try {
    const auto config = qwalk::cli::load_config_file(config_path);
    if (run->parsed()) {
      qwalk::cli::RunOptions options{out_dir, steps_override};
      const auto result = qwalk::cli::run_experiment(config, options);
      for (const auto& file : result.files_written) std::cout << "wrote " << file << '\n';
      return kExitOk;
    }
    qwalk::cli::VerifyOptions options;
    if (check_name == "unitarity") {
      options.check = qwalk::cli::CheckKind::unitarity;
    } else if (check_name == "equivalence") {
      options.check = qwalk::cli::CheckKind::equivalence;
    } else if (check_name == "cross-recovery") {
      options.check = qwalk::cli::CheckKind::cross_recovery;
    } else {
      std::cerr << "error: unknown check '" << check_name << "'\n";
      return kExitInvalidInput;
    }
    options.window_radius = window_radius;
    options.tol = tol;
    options.steps_override = steps_override;
    const auto result = qwalk::cli::run_verify(config, options);
    std::cout << result.report_text;
    return result.passed ? kExitOk : kExitCheckFailed;
  } catch (const qwalk::ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const qwalk::ModelMismatchError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

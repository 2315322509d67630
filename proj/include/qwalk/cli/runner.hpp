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

#include <optional>
#include <string>
#include <vector>

#include "qwalk/cli/config.hpp"

namespace qwalk::cli {

struct RunOptions {
  std::string out_dir;
  std::optional<int> steps_override;
};

struct RunResult {
  std::vector<std::string> files_written;
  double norm_sq_final = 0.0;
  double native_sum = -1.0;  //!< −1 when the grid was not requested
  double cross_sum = -1.0;
};

//! Evolves the configured walk and writes the requested probability grids as
//! headered CSV (columns x,y,position_kind,j,k,orientation,probability, rows
//! sorted by key) plus a meta.txt sidecar. Grid files are byte-reproducible
//! for identical configs.
RunResult run_experiment(const ExperimentConfig& config, const RunOptions& options);

enum class CheckKind { unitarity, equivalence, cross_recovery };

struct VerifyOptions {
  CheckKind check = CheckKind::unitarity;
  int window_radius = 5;
  std::optional<double> tol;  //!< defaults: 1e-12 (unitarity, equivalence), 1e-10 (cross-recovery)
  std::optional<int> steps_override;
};

struct VerifyResult {
  bool passed = false;
  double max_deviation = 0.0;
  double tol = 0.0;
  std::string report_text;  //!< machine-readable key=value lines
};

//! Runs one of the verification checks:
//!  - unitarity: column orthonormality of the configured step on a window
//!  - equivalence: ‖U_s b − E†U_c E b‖ over a window of scattering labels
//!  - cross-recovery: native grids equal the cross-projected grids computed
//!    from the other model's evolution, entrywise
VerifyResult run_verify(const ExperimentConfig& config, const VerifyOptions& options);

std::string to_string(CheckKind check);

}  // namespace qwalk::cli

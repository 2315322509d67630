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

#include <string>
#include <vector>

#include "qwalk/grid.hpp"
#include "qwalk/matrix.hpp"
#include "qwalk/step.hpp"
#include "qwalk/wavefunction.hpp"

namespace qwalk::cli {

//! configuration problem, reported with the offending key
class ConfigError : public ParameterError {
 public:
  explicit ConfigError(const std::string& what) : ParameterError(what) {}
};

enum class OutputKind { native, cross, both };

//! An experiment description loaded from a flat key-value config file.
//!
//! Recognized keys (dotted sections, `#` comments):
//!   lattice = line | square | square-diagonal | honeycomb
//!   model = coined | scattering
//!   steps = <nonnegative int, default 20>
//!   output = native-grid | cross-grid | both           (default both)
//!   matrix.name = <catalog name>        or inline:
//!   matrix.dim = 2|3|4
//!   matrix.row.R = re im  re im  ...                   (row-major pairs)
//!   initial.preset = square-paper | honeycomb-paper    or inline terms:
//!   initial.N = <label fields> re im                   (N = 0,1,2,...)
//!   override.N.site = j [k]                            (optional per-site matrices)
//!   override.N.name / override.N.dim / override.N.row.R
//!
//! Inline label fields follow the model's label layout:
//!   line coined: j sigma          line scattering: sigma j
//!   square coined: j k sigma      square scattering: sx sy j k
//!   honeycomb coined: j k sigma   honeycomb scattering: sigma j k
struct ExperimentConfig {
  Lattice lattice = Lattice::line;
  Model model = Model::coined;
  int steps = 20;
  OutputKind output = OutputKind::both;

  std::string matrix_name;  //!< catalog name, or "inline"
  Matrix matrix{2};

  struct Override {
    Site site;  //!< line lattice uses site.j only
    Matrix matrix;
  };
  std::vector<Override> overrides;

  std::string initial_preset;  //!< empty when inline terms are given
  std::vector<WaveFunction::Entry> initial_terms;

  std::string source_text;  //!< raw config text, hashed into run metadata
};

ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);

//! label kind of states evolved under this lattice/model combination
LabelKind expected_kind(Lattice lattice, Model model);

//! Builds the configured initial state in the representation of
//! config.model. Enforces that the state is normalized within 1e-9.
WaveFunction initial_state(const ExperimentConfig& config);

//! the configured step operator (config.model)
StepOperator build_step(const ExperimentConfig& config);

//! step operator of either model over the configured field; rejects the
//! scattering model on the square-diagonal lattice
StepOperator build_step_for_model(const ExperimentConfig& config, Model model);

//! FNV-1a hash of the raw config text, as 16 hex digits
std::string config_hash(const ExperimentConfig& config);

}  // namespace qwalk::cli

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

#include "qwalk/matrix.hpp"

namespace qwalk::coins {

//! a named transition matrix from the built-in catalog
struct MatrixSpec {
  std::string name;
  Matrix matrix;
};

//! Looks up a catalog matrix by name. Available entries:
//!   dim 2: hadamard2
//!   dim 4 (square lattice): decoupled-hadamard4, hadamard4, grover4, dft4
//!   dim 3 (honeycomb lattice): unb3, bia3, dht3, grover3, dft3
//! Unknown names (there is, for instance, no 3×3 Hadamard) raise ParameterError.
MatrixSpec catalog(const std::string& name);

std::vector<std::string> catalog_names();
std::vector<std::string> catalog_names(int dim);

}  // namespace qwalk::coins

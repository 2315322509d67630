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

#include <complex>
#include <stdexcept>
#include <string>

namespace qwalk {

using Complex = std::complex<double>;

//! |c|^2 without the square root detour of std::abs
inline double abs2(Complex c) { return c.real() * c.real() + c.imag() * c.imag(); }

//! which discrete-time walk formulation a state or operator belongs to
enum class Model { coined, scattering };

//! lattice topologies supported by the simulator
enum class Lattice { line, square, square_diagonal, honeycomb };

std::string to_string(Model model);
std::string to_string(Lattice lattice);

//! sparse-state entries with |amp| below this are dropped after each step
inline constexpr double kAmpPruneThreshold = 1e-15;

//! raised when states, operators or projectors from different lattices/models are mixed
class ModelMismatchError : public std::invalid_argument {
 public:
  explicit ModelMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

//! raised on invalid values: out-of-range quantum numbers, non-unitary
//! matrices, unknown catalog names, malformed inputs
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qwalk

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

#include "qwalk/label.hpp"

#include <cstdlib>

namespace qwalk {

std::string to_string(Model model) { return model == Model::coined ? "coined" : "scattering"; }

std::string to_string(Lattice lattice) {
  switch (lattice) {
    case Lattice::line: return "line";
    case Lattice::square: return "square";
    case Lattice::square_diagonal: return "square-diagonal";
    case Lattice::honeycomb: return "honeycomb";
  }
  return "?";
}

Model model_of(LabelKind kind) {
  switch (kind) {
    case LabelKind::coined_1d:
    case LabelKind::coined_square:
    case LabelKind::coined_honeycomb: return Model::coined;
    default: return Model::scattering;
  }
}

Lattice lattice_of(LabelKind kind) {
  switch (kind) {
    case LabelKind::coined_1d:
    case LabelKind::scattering_1d: return Lattice::line;
    case LabelKind::coined_square:
    case LabelKind::scattering_square: return Lattice::square;
    default: return Lattice::honeycomb;
  }
}

std::string to_string(LabelKind kind) {
  return to_string(model_of(kind)) + "/" + to_string(lattice_of(kind));
}

namespace detail {

std::uint64_t pack_out_of_range(int v) {
  throw ParameterError("lattice coordinate out of the supported range: " + std::to_string(v));
}

}  // namespace detail

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw ParameterError(std::string("invalid basis label: ") + what);
}

bool is_pm(int sigma) { return sigma == -1 || sigma == +1; }

}  // namespace

void validate_label(const BasisLabel& label) {
  std::visit(
      [](const auto& l) {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, Coined1D> || std::is_same_v<T, Scattering1D>) {
          require(is_pm(l.sigma), "line sigma must be -1 or +1");
        } else if constexpr (std::is_same_v<T, CoinedSquare>) {
          require(l.sigma >= 1 && l.sigma <= 4, "square coin sigma must be in 1..4");
        } else if constexpr (std::is_same_v<T, ScatteringSquare>) {
          require(is_pm(l.sx) && is_pm(l.sy), "square direction signs must be -1 or +1");
        } else {
          require(l.sigma >= 0 && l.sigma <= 2, "honeycomb sigma must be in 0..2");
        }
      },
      label);
  packed_key(label);  // coordinate range check
}

std::string to_string(const BasisLabel& label) {
  return std::visit(
      [](const auto& l) -> std::string {
        using T = std::decay_t<decltype(l)>;
        const auto sgn = [](int s) { return s > 0 ? std::string("+") : std::string("-"); };
        if constexpr (std::is_same_v<T, Coined1D>) {
          return "|" + std::to_string(l.j) + ">⊗|" + sgn(l.sigma) + ">";
        } else if constexpr (std::is_same_v<T, Scattering1D>) {
          return "|" + sgn(l.sigma) + ", " + std::to_string(l.j) + ">";
        } else if constexpr (std::is_same_v<T, CoinedSquare>) {
          return "|(" + std::to_string(l.j) + "," + std::to_string(l.k) + ")>⊗|" +
                 std::to_string(l.sigma) + ">";
        } else if constexpr (std::is_same_v<T, ScatteringSquare>) {
          return "|" + sgn(l.sx) + sgn(l.sy) + ", (" + std::to_string(l.j) + "," +
                 std::to_string(l.k) + ")>";
        } else if constexpr (std::is_same_v<T, CoinedHoney>) {
          return "|(" + std::to_string(l.j) + "," + std::to_string(l.k) + ")>⊗|" +
                 std::to_string(l.sigma) + ">";
        } else {
          return "|" + std::to_string(l.sigma) + ", (" + std::to_string(l.j) + "," +
                 std::to_string(l.k) + ")>";
        }
      },
      label);
}

}  // namespace qwalk

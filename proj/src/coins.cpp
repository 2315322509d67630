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

#include "qwalk/coins.hpp"

#include <cmath>
#include <initializer_list>
#include <numbers>

namespace qwalk::coins {

namespace {

Matrix make(int dim, std::initializer_list<Complex> entries) {
  Matrix m(dim);
  auto it = entries.begin();
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m.at(r, c) = *it++;
  return m;
}

Matrix hadamard2() {
  const double h = std::sqrt(0.5);
  return make(2, {h, h,
                  h, -h});
}

// 4x4 matrices, rows/columns in the [3,1,4,2] coin order

Matrix decoupled_hadamard4() {
  const double h = std::sqrt(0.5);
  return make(4, {h, h, 0, 0,
                  h, -h, 0, 0,
                  0, 0, h, h,
                  0, 0, h, -h});
}

Matrix hadamard4() {
  const double q = 0.5;
  return make(4, {q, q, q, q,
                  q, -q, q, -q,
                  q, q, -q, -q,
                  q, -q, -q, q});
}

Matrix grover4() {
  const double q = 0.5;
  return make(4, {-q, q, q, q,
                  q, -q, q, q,
                  q, q, -q, q,
                  q, q, q, -q});
}

Matrix dft4() {
  const double q = 0.5;
  const Complex i{0.0, 1.0};
  return make(4, {q, q, q, q,
                  q, q * i, -q, -q * i,
                  q, -q, q, -q,
                  q, -q * i, -q, q * i});
}

// 3x3 matrices for the honeycomb lattice

Matrix unb3() {
  const double s = 1.0 / std::sqrt(3.0);
  const Complex w = s * std::polar(1.0, -std::numbers::pi / 3.0);
  return make(3, {-s, w, w,
                  w, -s, w,
                  w, w, -s});
}

Matrix bia3() {
  const double r3 = std::sqrt(3.0);
  const double a = 1.0 / 3.0;
  const double m = (1.0 - r3) / 3.0;
  const double p = (1.0 + r3) / 3.0;
  return make(3, {a, m, p,
                  p, a, m,
                  m, p, a});
}

Matrix dht3() {
  const double s = 1.0 / (2.0 * std::sqrt(3.0));
  const double a = 2.0 * s;
  const double m = (-1.0 + std::sqrt(3.0)) * s;
  const double p = (-1.0 - std::sqrt(3.0)) * s;
  return make(3, {a, a, a,
                  a, m, p,
                  a, p, m});
}

Matrix grover3() {
  const double a = -1.0 / 3.0;
  const double b = 2.0 / 3.0;
  return make(3, {a, b, b,
                  b, a, b,
                  b, b, a});
}

Matrix dft3() {
  const double s = 1.0 / std::sqrt(3.0);
  const Complex w = s * std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const Complex wc = s * std::polar(1.0, -2.0 * std::numbers::pi / 3.0);
  return make(3, {w, s, wc,
                  s, s, s,
                  wc, s, w});
}

}  // namespace

MatrixSpec catalog(const std::string& name) {
  if (name == "hadamard2") return {name, hadamard2()};
  if (name == "decoupled-hadamard4") return {name, decoupled_hadamard4()};
  if (name == "hadamard4") return {name, hadamard4()};
  if (name == "grover4") return {name, grover4()};
  if (name == "dft4") return {name, dft4()};
  if (name == "unb3") return {name, unb3()};
  if (name == "bia3") return {name, bia3()};
  if (name == "dht3") return {name, dht3()};
  if (name == "grover3") return {name, grover3()};
  if (name == "dft3") return {name, dft3()};
  std::string known;
  for (const auto& n : catalog_names()) known += (known.empty() ? "" : ", ") + n;
  throw ParameterError("unknown catalog matrix '" + name + "' (known: " + known + ")");
}

std::vector<std::string> catalog_names() {
  return {"hadamard2", "decoupled-hadamard4", "hadamard4", "grover4", "dft4",
          "unb3", "bia3", "dht3", "grover3", "dft3"};
}

std::vector<std::string> catalog_names(int dim) {
  std::vector<std::string> out;
  for (const auto& name : catalog_names()) {
    if (catalog(name).matrix.dim() == dim) out.push_back(name);
  }
  return out;
}

}  // namespace qwalk::coins

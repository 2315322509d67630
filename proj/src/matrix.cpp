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

#include "qwalk/matrix.hpp"

#include <cmath>
#include <string>

namespace qwalk {

Matrix::Matrix(int dim) : dim_(dim) {
  if (dim < 2 || dim > 4) {
    throw ParameterError("matrix dimension must be 2, 3 or 4, got " + std::to_string(dim));
  }
}

Matrix Matrix::identity(int dim) {
  Matrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

UnitarityCheck check_unitary(const Matrix& m, double tol) {
  const int d = m.dim();
  double worst = 0.0;
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      Complex dot = 0.0;  // (M†M)_{rc} = Σ_l conj(M_{lr}) M_{lc}
      for (int l = 0; l < d; ++l) dot += std::conj(m.at(l, r)) * m.at(l, c);
      const double target = (r == c) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(dot - target));
    }
  }
  return {worst <= tol, worst};
}

}  // namespace qwalk

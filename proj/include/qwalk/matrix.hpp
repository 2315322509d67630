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

#include <array>
#include <cassert>

#include "qwalk/types.hpp"

namespace qwalk {

//! Dense complex square matrix of dimension 2, 3 or 4 (the coordination
//! numbers of the supported lattices). Row-major storage.
class Matrix {
 public:
  explicit Matrix(int dim);

  static Matrix identity(int dim);

  int dim() const { return dim_; }

  Complex& at(int r, int c) {
    assert(r >= 0 && r < dim_ && c >= 0 && c < dim_);
    return m_[static_cast<std::size_t>(r * dim_ + c)];
  }
  const Complex& at(int r, int c) const {
    assert(r >= 0 && r < dim_ && c >= 0 && c < dim_);
    return m_[static_cast<std::size_t>(r * dim_ + c)];
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int dim_;
  std::array<Complex, 16> m_{};
};

struct UnitarityCheck {
  bool ok = false;
  double max_deviation = 0.0;
};

//! entrywise max |M†M − I|; ok iff it stays within tol
UnitarityCheck check_unitary(const Matrix& m, double tol);

}  // namespace qwalk

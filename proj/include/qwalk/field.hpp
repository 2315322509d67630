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

#include <map>
#include <string>
#include <utility>

#include "qwalk/matrix.hpp"

namespace qwalk {

//! Assignment of a unitary d×d transition matrix to every lattice site:
//! a default matrix plus sparse per-site overrides. Serves as the coin
//! field C^(site) or the scattering field Γ^(site). Every stored matrix is
//! checked for the required dimension and unitarity on insertion.
template <class SiteKey>
class TransitionField {
 public:
  TransitionField(int dim, Matrix default_matrix, double unitarity_tol = 1e-12)
      : dim_(dim), tol_(unitarity_tol), default_(checked(std::move(default_matrix))) {}

  int dim() const { return dim_; }

  void set(const SiteKey& site, Matrix m) { overrides_.insert_or_assign(site, checked(std::move(m))); }

  const Matrix& at(const SiteKey& site) const {
    if (overrides_.empty()) return default_;
    auto it = overrides_.find(site);
    return it == overrides_.end() ? default_ : it->second;
  }

  const Matrix& default_matrix() const { return default_; }
  const std::map<SiteKey, Matrix>& overrides() const { return overrides_; }

 private:
  Matrix checked(Matrix m) const {
    if (m.dim() != dim_) {
      throw ParameterError("transition matrix dimension " + std::to_string(m.dim()) +
                           " does not match the lattice coordination number " +
                           std::to_string(dim_));
    }
    const auto check = check_unitary(m, tol_);
    if (!check.ok) {
      throw ParameterError("transition matrix is not unitary (max deviation " +
                           std::to_string(check.max_deviation) + ")");
    }
    return m;
  }

  int dim_;
  double tol_;
  Matrix default_;
  std::map<SiteKey, Matrix> overrides_;
};

}  // namespace qwalk

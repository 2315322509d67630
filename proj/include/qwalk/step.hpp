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
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "qwalk/wavefunction.hpp"

namespace qwalk {

//! The image of one basis state under a step operator: at most four
//! (label, amplitude) pairs with distinct labels.
class StepTerms {
 public:
  void push(const BasisLabel& label, Complex amp);

  int size() const { return size_; }
  const std::pair<BasisLabel, Complex>& operator[](int i) const {
    return terms_[static_cast<std::size_t>(i)];
  }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.begin() + size_; }

 private:
  std::array<std::pair<BasisLabel, Complex>, 4> terms_{};
  int size_ = 0;
};

//! One-step evolution operator U as a pure rule on basis labels. The rule
//! must act within a single state space (the operator's domain kind).
class StepOperator {
 public:
  using Rule = std::function<StepTerms(const BasisLabel&)>;

  StepOperator(LabelKind domain, Rule rule) : domain_(domain), rule_(std::move(rule)) {}

  LabelKind domain() const { return domain_; }
  StepTerms apply(const BasisLabel& label) const { return rule_(label); }

 private:
  LabelKind domain_;
  Rule rule_;
};

//! Linear extension of U to a sparse state. Accumulation into each output
//! bucket is label-ordered, so results are reproducible bit for bit.
WaveFunction apply_step(const WaveFunction& psi, const StepOperator& op);

//! n-fold application of U; n = 0 returns psi unchanged
WaveFunction evolve(const WaveFunction& psi, const StepOperator& op, int steps);

//! Σ over the projector's labels of |amplitude|²
double probability_of(const WaveFunction& psi, std::span<const BasisLabel> projector);

struct UnitarityReport {
  double max_deviation = 0.0;
  double tol = 0.0;
  bool passed = false;
  //! label pairs whose column inner product deviates from δ_ij by more than tol
  std::vector<std::pair<BasisLabel, BasisLabel>> offending;
};

//! Checks ⟨U b_i | U b_j⟩ = δ_ij over all pairs from the window. Columns of U
//! have finite support, so the inner products involve no truncation even at
//! the window edge.
UnitarityReport verify_unitary_on_window(const StepOperator& op,
                                         std::span<const BasisLabel> window, double tol);

using LabelMap = std::function<BasisLabel(const BasisLabel&)>;

//! Max over window labels b of ‖U_direct b − backward(U_conjugated(forward b))‖.
//! With forward = E, backward = E† this measures ‖U_s b − E†U_c E b‖.
double conjugation_max_deviation(const StepOperator& u_direct, const StepOperator& u_conjugated,
                                 const LabelMap& forward, const LabelMap& backward,
                                 std::span<const BasisLabel> window);

}  // namespace qwalk

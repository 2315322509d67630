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
#include <vector>

#include "qwalk/label.hpp"

namespace qwalk {

class StepOperator;

//! Sparse quantum state: basis label -> complex amplitude.
//!
//! Entries are kept sorted by label order, with duplicates merged and
//! amplitudes below kAmpPruneThreshold dropped. All labels of a nonempty
//! state belong to one lattice/model (homogeneity).
class WaveFunction {
 public:
  struct Entry {
    BasisLabel label;
    Complex amp;
  };

  //! the zero state
  WaveFunction() = default;

  //! Builds a state from arbitrary (label, amplitude) terms. Validates the
  //! labels, enforces homogeneity, merges duplicates in label order, prunes.
  static WaveFunction from_terms(std::vector<Entry> terms);

  //! trusted constructor: terms already sorted by label, unique, pruned
  static WaveFunction from_sorted(std::vector<Entry> terms);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  //! label kind shared by all entries; nullopt for the zero state
  std::optional<LabelKind> kind() const;

  const std::vector<Entry>& entries() const { return entries_; }

  //! amplitude at a label, zero if absent
  Complex amplitude(const BasisLabel& label) const;

  //! the same state scaled to unit norm; throws ParameterError on the zero state
  WaveFunction normalized() const;

 private:
  friend WaveFunction evolve(const WaveFunction& psi, const StepOperator& op, int steps);

  //! storage of an expiring state, recycled between evolution steps
  static std::vector<Entry> reclaim(WaveFunction&& psi) { return std::move(psi.entries_); }

  std::vector<Entry> entries_;
};

//! Σ |amp|²
double norm_sq(const WaveFunction& psi);

//! ⟨bra|ket⟩, conjugate-linear in the first argument
Complex inner_product(const WaveFunction& bra, const WaveFunction& ket);

WaveFunction scale(const WaveFunction& psi, Complex factor);
WaveFunction add(const WaveFunction& psi, const WaveFunction& phi);

}  // namespace qwalk

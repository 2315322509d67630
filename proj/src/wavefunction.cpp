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

#include "qwalk/wavefunction.hpp"

#include <algorithm>
#include <cmath>

namespace qwalk {

WaveFunction WaveFunction::from_terms(std::vector<Entry> terms) {
  if (terms.empty()) return {};
  const LabelKind kind = kind_of(terms.front().label);
  for (const auto& t : terms) {
    validate_label(t.label);
    if (kind_of(t.label) != kind) {
      throw ModelMismatchError("model/lattice mismatch: state mixes " + to_string(kind) +
                               " and " + to_string(kind_of(t.label)) + " labels");
    }
  }
  std::stable_sort(terms.begin(), terms.end(), [](const Entry& a, const Entry& b) {
    return packed_key(a.label) < packed_key(b.label);
  });
  std::vector<Entry> merged;
  merged.reserve(terms.size());
  for (const auto& t : terms) {
    if (!merged.empty() && merged.back().label == t.label) {
      merged.back().amp += t.amp;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Entry& e) { return std::abs(e.amp) < kAmpPruneThreshold; });
  WaveFunction psi;
  psi.entries_ = std::move(merged);
  return psi;
}

WaveFunction WaveFunction::from_sorted(std::vector<Entry> terms) {
  WaveFunction psi;
  psi.entries_ = std::move(terms);
  return psi;
}

std::optional<LabelKind> WaveFunction::kind() const {
  if (entries_.empty()) return std::nullopt;
  return kind_of(entries_.front().label);
}

Complex WaveFunction::amplitude(const BasisLabel& label) const {
  const std::uint64_t key = packed_key(label);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                             [](const Entry& e, std::uint64_t k) { return packed_key(e.label) < k; });
  if (it == entries_.end() || packed_key(it->label) != key) return 0.0;
  return it->amp;
}

WaveFunction WaveFunction::normalized() const {
  const double n2 = norm_sq(*this);
  if (n2 <= 0.0) throw ParameterError("cannot normalize the zero state");
  return scale(*this, 1.0 / std::sqrt(n2));
}

double norm_sq(const WaveFunction& psi) {
  double total = 0.0;
  for (const auto& e : psi.entries()) total += abs2(e.amp);
  return total;
}

Complex inner_product(const WaveFunction& bra, const WaveFunction& ket) {
  if (!bra.empty() && !ket.empty() && bra.kind() != ket.kind()) {
    throw ModelMismatchError("model/lattice mismatch in inner product");
  }
  Complex dot = 0.0;
  auto ib = bra.entries().begin();
  auto ik = ket.entries().begin();
  while (ib != bra.entries().end() && ik != ket.entries().end()) {
    const std::uint64_t kb = packed_key(ib->label);
    const std::uint64_t kk = packed_key(ik->label);
    if (kb < kk) {
      ++ib;
    } else if (kk < kb) {
      ++ik;
    } else {
      dot += std::conj(ib->amp) * ik->amp;
      ++ib;
      ++ik;
    }
  }
  return dot;
}

WaveFunction scale(const WaveFunction& psi, Complex factor) {
  std::vector<WaveFunction::Entry> out;
  out.reserve(psi.size());
  for (const auto& e : psi.entries()) {
    const Complex amp = e.amp * factor;
    if (std::abs(amp) >= kAmpPruneThreshold) out.push_back({e.label, amp});
  }
  return WaveFunction::from_sorted(std::move(out));
}

WaveFunction add(const WaveFunction& psi, const WaveFunction& phi) {
  if (!psi.empty() && !phi.empty() && psi.kind() != phi.kind()) {
    throw ModelMismatchError("model/lattice mismatch in state sum");
  }
  std::vector<WaveFunction::Entry> out;
  out.reserve(psi.size() + phi.size());
  auto ia = psi.entries().begin();
  auto ib = phi.entries().begin();
  const auto push = [&out](const WaveFunction::Entry& e) {
    if (std::abs(e.amp) >= kAmpPruneThreshold) out.push_back(e);
  };
  while (ia != psi.entries().end() || ib != phi.entries().end()) {
    if (ib == phi.entries().end()) {
      push(*ia++);
    } else if (ia == psi.entries().end()) {
      push(*ib++);
    } else {
      const std::uint64_t ka = packed_key(ia->label);
      const std::uint64_t kb = packed_key(ib->label);
      if (ka < kb) {
        push(*ia++);
      } else if (kb < ka) {
        push(*ib++);
      } else {
        push({ia->label, ia->amp + ib->amp});
        ++ia;
        ++ib;
      }
    }
  }
  return WaveFunction::from_sorted(std::move(out));
}

}  // namespace qwalk

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

#include "qwalk/step.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>

namespace qwalk {

void StepTerms::push(const BasisLabel& label, Complex amp) {
  if (size_ >= 4) throw ParameterError("a step operator column may hold at most four terms");
  terms_[static_cast<std::size_t>(size_)] = {label, amp};
  ++size_;
}

namespace {

struct Contribution {
  std::uint64_t key;
  Complex amp;
};

// scratch buffers kept across steps; per-thread so concurrent evolutions
// stay independent
struct Workspace {
  std::vector<Contribution> contribs;
  std::vector<std::uint32_t> keys_a;
  std::vector<std::uint32_t> keys_b;
  std::vector<Complex> amps_a;
  std::vector<Complex> amps_b;
  std::vector<std::uint32_t> counts_low;
  std::vector<std::uint32_t> counts_high;

  void shrink_if_oversized(std::size_t need) {
    if (keys_a.capacity() > 8 * (need + 64)) {
      contribs.shrink_to_fit();
      keys_a.shrink_to_fit();
      keys_b.shrink_to_fit();
      amps_a.shrink_to_fit();
      amps_b.shrink_to_fit();
    }
  }
};

Workspace& workspace() {
  thread_local Workspace ws;
  return ws;
}

void check_domain(const WaveFunction& psi, const StepOperator& op) {
  if (!psi.empty() && *psi.kind() != op.domain()) {
    throw ModelMismatchError("model/lattice mismatch: state is " + to_string(*psi.kind()) +
                             " but the operator acts on " + to_string(op.domain()));
  }
}

constexpr std::size_t kRadixCutoff = 4096;

int bit_width_u32(std::uint32_t v) {
  int bits = 0;
  while (v != 0) {
    v >>= 1;
    ++bits;
  }
  return bits;
}

std::vector<WaveFunction::Entry> make_output(std::vector<WaveFunction::Entry>* recycled,
                                             std::size_t capacity) {
  std::vector<WaveFunction::Entry> out;
  if (recycled) out = std::move(*recycled);
  out.clear();
  out.reserve(capacity);
  return out;
}

//! generic path: 64-bit keys, stable comparison sort, label-ordered buckets
WaveFunction apply_step_sorted(const WaveFunction& psi, const StepOperator& op,
                               std::vector<WaveFunction::Entry>* recycled) {
  Workspace& ws = workspace();
  ws.contribs.clear();
  ws.contribs.reserve(psi.size() * 4);
  for (const auto& e : psi.entries()) {
    for (const auto& [label, amp] : op.apply(e.label)) {
      ws.contribs.push_back({packed_key(label), e.amp * amp});
    }
  }
  std::stable_sort(ws.contribs.begin(), ws.contribs.end(),
                   [](const Contribution& a, const Contribution& b) { return a.key < b.key; });
  std::vector<WaveFunction::Entry> out = make_output(recycled, ws.contribs.size());
  std::size_t i = 0;
  while (i < ws.contribs.size()) {
    const std::uint64_t key = ws.contribs[i].key;
    Complex sum = 0.0;
    for (; i < ws.contribs.size() && ws.contribs[i].key == key; ++i) sum += ws.contribs[i].amp;
    if (std::abs(sum) >= kAmpPruneThreshold) out.push_back({unpack_key(key), sum});
  }
  return WaveFunction::from_sorted(std::move(out));
}

//! Fast path for large steps: dense 32-bit keys relative to the input
//! bounds and a stable two-pass radix sort. Returns nullopt whenever an
//! assumption fails (mixed kinds, displacement beyond one site, window too
//! wide); the caller then falls back to the comparison sort. Bucket
//! accumulation order is identical to the generic path, so both produce the
//! same bits.
std::optional<WaveFunction> apply_step_radix(const WaveFunction& psi, const StepOperator& op,
                                             std::vector<WaveFunction::Entry>* recycled) {
  using namespace detail;
  const LabelKind kind = *psi.kind();

  int min_j = 0, max_j = 0, min_k = 0, max_k = 0;
  bool first = true;
  for (const auto& e : psi.entries()) {
    int j = 0, k = 0, dir = 0;
    if (!label_fields(e.label, kind, j, k, dir)) return std::nullopt;
    if (first) {
      min_j = max_j = j;
      min_k = max_k = k;
      first = false;
    } else {
      min_j = std::min(min_j, j);
      max_j = std::max(max_j, j);
      min_k = std::min(min_k, k);
      max_k = std::max(max_k, k);
    }
  }
  // one extra site of slack: a step rule may move at most one site for this
  // path to apply
  constexpr int kCoordLimit = (1 << (kCoordBits - 1)) - 2;
  if (min_j <= -kCoordLimit || max_j >= kCoordLimit || min_k <= -kCoordLimit ||
      max_k >= kCoordLimit) {
    return std::nullopt;
  }
  min_j -= 1;
  min_k -= 1;
  const std::uint32_t range_j = static_cast<std::uint32_t>(max_j + 1 - min_j);
  const std::uint32_t range_k = static_cast<std::uint32_t>(max_k + 1 - min_k);
  const int bits_k = bit_width_u32(range_k);
  const int bits_total = bit_width_u32(range_j) + bits_k + kDirBits;
  if (bits_total > 32) return std::nullopt;
  const int shift_j = bits_k + kDirBits;

  Workspace& ws = workspace();
  ws.keys_a.clear();
  ws.amps_a.clear();
  ws.keys_a.reserve(psi.size() * 4);
  ws.amps_a.reserve(psi.size() * 4);
  for (const auto& e : psi.entries()) {
    for (const auto& [label, amp] : op.apply(e.label)) {
      int j = 0, k = 0, dir = 0;
      if (!label_fields(label, kind, j, k, dir)) return std::nullopt;
      const std::uint32_t dj = static_cast<std::uint32_t>(j - min_j);
      const std::uint32_t dk = static_cast<std::uint32_t>(k - min_k);
      if (dj > range_j || dk > range_k) return std::nullopt;
      ws.keys_a.push_back((dj << shift_j) | (dk << kDirBits) |
                          static_cast<std::uint32_t>(dir));
      ws.amps_a.push_back(e.amp * amp);
    }
  }

  const std::size_t n = ws.keys_a.size();
  const int low_bits = std::min(16, (bits_total + 1) / 2);
  const int high_bits = bits_total - low_bits;
  const std::uint32_t low_mask = (1u << low_bits) - 1;
  ws.counts_low.assign(std::size_t{1} << low_bits, 0u);
  ws.counts_high.assign(std::size_t{1} << high_bits, 0u);

  for (const auto key : ws.keys_a) ++ws.counts_low[key & low_mask];
  std::uint32_t running = 0;
  for (auto& c : ws.counts_low) {
    const std::uint32_t m = c;
    c = running;
    running += m;
  }
  ws.keys_b.resize(n);
  ws.amps_b.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t key = ws.keys_a[i];
    const std::uint32_t pos = ws.counts_low[key & low_mask]++;
    ws.keys_b[pos] = key;
    ws.amps_b[pos] = ws.amps_a[i];
    ++ws.counts_high[key >> low_bits];
  }
  running = 0;
  for (auto& c : ws.counts_high) {
    const std::uint32_t m = c;
    c = running;
    running += m;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t key = ws.keys_b[i];
    const std::uint32_t pos = ws.counts_high[key >> low_bits]++;
    ws.keys_a[pos] = key;
    ws.amps_a[pos] = ws.amps_b[i];
  }

  std::vector<WaveFunction::Entry> out = make_output(recycled, n);
  const std::uint32_t dk_mask = (1u << bits_k) - 1;
  std::size_t i = 0;
  while (i < n) {
    const std::uint32_t key = ws.keys_a[i];
    Complex sum = 0.0;
    for (; i < n && ws.keys_a[i] == key; ++i) sum += ws.amps_a[i];
    if (std::abs(sum) >= kAmpPruneThreshold) {
      const int j = min_j + static_cast<int>(key >> shift_j);
      const int k = min_k + static_cast<int>((key >> kDirBits) & dk_mask);
      out.push_back({label_from_fields(kind, j, k, static_cast<int>(key & kDirMask)), sum});
    }
  }
  ws.shrink_if_oversized(n);
  return WaveFunction::from_sorted(std::move(out));
}

WaveFunction step_once(const WaveFunction& psi, const StepOperator& op,
                       std::vector<WaveFunction::Entry>* recycled) {
  check_domain(psi, op);
  if (psi.empty()) return psi;
  if (psi.size() * 4 >= kRadixCutoff) {
    if (auto fast = apply_step_radix(psi, op, recycled)) return std::move(*fast);
  }
  return apply_step_sorted(psi, op, recycled);
}

}  // namespace

WaveFunction apply_step(const WaveFunction& psi, const StepOperator& op) {
  return step_once(psi, op, nullptr);
}

WaveFunction evolve(const WaveFunction& psi, const StepOperator& op, int steps) {
  if (steps < 0) throw ParameterError("step count must be nonnegative");
  WaveFunction state = psi;
  std::vector<WaveFunction::Entry> spare;
  for (int n = 0; n < steps; ++n) {
    WaveFunction next = step_once(state, op, &spare);
    spare = WaveFunction::reclaim(std::move(state));
    state = std::move(next);
  }
  return state;
}

double probability_of(const WaveFunction& psi, std::span<const BasisLabel> projector) {
  const auto kind = psi.kind();
  double total = 0.0;
  for (const auto& label : projector) {
    if (kind && kind_of(label) != *kind) {
      throw ModelMismatchError("model/lattice mismatch: projector label " + to_string(label) +
                               " does not match the state");
    }
    total += abs2(psi.amplitude(label));
  }
  return total;
}

namespace {

using SparseColumn = std::vector<std::pair<std::uint64_t, Complex>>;

SparseColumn column_of(const StepOperator& op, const BasisLabel& label) {
  SparseColumn col;
  for (const auto& [out, amp] : op.apply(label)) col.emplace_back(packed_key(out), amp);
  std::sort(col.begin(), col.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return col;
}

Complex sparse_dot(const SparseColumn& a, const SparseColumn& b) {
  Complex dot = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      dot += std::conj(ia->second) * ib->second;
      ++ia;
      ++ib;
    }
  }
  return dot;
}

}  // namespace

UnitarityReport verify_unitary_on_window(const StepOperator& op,
                                         std::span<const BasisLabel> window, double tol) {
  if (window.empty()) throw ParameterError("unitarity window must be nonempty");
  std::vector<SparseColumn> columns;
  columns.reserve(window.size());
  for (const auto& label : window) columns.push_back(column_of(op, label));

  UnitarityReport report;
  report.tol = tol;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    for (std::size_t j = i; j < columns.size(); ++j) {
      const Complex dot = sparse_dot(columns[i], columns[j]);
      const double target = (i == j) ? 1.0 : 0.0;
      const double dev = std::abs(dot - target);
      report.max_deviation = std::max(report.max_deviation, dev);
      if (dev > tol) report.offending.emplace_back(window[i], window[j]);
    }
  }
  report.passed = report.max_deviation <= tol;
  return report;
}

double conjugation_max_deviation(const StepOperator& u_direct, const StepOperator& u_conjugated,
                                 const LabelMap& forward, const LabelMap& backward,
                                 std::span<const BasisLabel> window) {
  double worst = 0.0;
  for (const auto& label : window) {
    std::map<std::uint64_t, Complex> diff;
    for (const auto& [out, amp] : u_direct.apply(label)) diff[packed_key(out)] += amp;
    for (const auto& [out, amp] : u_conjugated.apply(forward(label))) {
      diff[packed_key(backward(out))] -= amp;
    }
    double norm2 = 0.0;
    for (const auto& [key, amp] : diff) norm2 += abs2(amp);
    worst = std::max(worst, std::sqrt(norm2));
  }
  return worst;
}

}  // namespace qwalk

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

#include <compare>
#include <cstdint>
#include <string>
#include <tuple>
#include <variant>

#include "qwalk/types.hpp"

namespace qwalk {

// Basis labels for the six state spaces (three lattices, two formulations).
// Comparison order matches packed_key() so that all orderings agree.

//! coined line walk: site j, coin sigma ∈ {-1,+1}
struct Coined1D {
  int j;
  int sigma;
  friend bool operator==(const Coined1D&, const Coined1D&) = default;
  friend auto operator<=>(const Coined1D& a, const Coined1D& b) {
    return std::tie(a.j, a.sigma) <=> std::tie(b.j, b.sigma);
  }
};

//! scattering line walk: direction sigma ∈ {-1,+1} incoming to site j
struct Scattering1D {
  int sigma;
  int j;
  friend bool operator==(const Scattering1D&, const Scattering1D&) = default;
  friend auto operator<=>(const Scattering1D& a, const Scattering1D& b) {
    return std::tie(a.j, a.sigma) <=> std::tie(b.j, b.sigma);
  }
};

//! coined square walk: site (j,k), coin sigma ∈ {1,2,3,4}
struct CoinedSquare {
  int j;
  int k;
  int sigma;
  friend bool operator==(const CoinedSquare&, const CoinedSquare&) = default;
  friend auto operator<=>(const CoinedSquare& a, const CoinedSquare& b) {
    return std::tie(a.j, a.k, a.sigma) <=> std::tie(b.j, b.k, b.sigma);
  }
};

//! scattering square walk: direction pair (sx,sy) ∈ {-1,+1}² incoming to site (j,k)
struct ScatteringSquare {
  int sx;
  int sy;
  int j;
  int k;
  friend bool operator==(const ScatteringSquare&, const ScatteringSquare&) = default;
  friend auto operator<=>(const ScatteringSquare& a, const ScatteringSquare& b) {
    return std::tie(a.j, a.k, a.sx, a.sy) <=> std::tie(b.j, b.k, b.sx, b.sy);
  }
};

//! coined honeycomb walk: site (j,k), coin sigma ∈ {0,1,2}
struct CoinedHoney {
  int j;
  int k;
  int sigma;
  friend bool operator==(const CoinedHoney&, const CoinedHoney&) = default;
  friend auto operator<=>(const CoinedHoney& a, const CoinedHoney& b) {
    return std::tie(a.j, a.k, a.sigma) <=> std::tie(b.j, b.k, b.sigma);
  }
};

//! scattering honeycomb walk: direction sigma ∈ {0,1,2} incoming to site (j,k)
struct ScatteringHoney {
  int sigma;
  int j;
  int k;
  friend bool operator==(const ScatteringHoney&, const ScatteringHoney&) = default;
  friend auto operator<=>(const ScatteringHoney& a, const ScatteringHoney& b) {
    return std::tie(a.j, a.k, a.sigma) <=> std::tie(b.j, b.k, b.sigma);
  }
};

using BasisLabel = std::variant<Coined1D, Scattering1D, CoinedSquare, ScatteringSquare,
                                CoinedHoney, ScatteringHoney>;

//! tag identifying the state space a label lives in (== variant index)
enum class LabelKind : std::uint8_t {
  coined_1d = 0,
  scattering_1d = 1,
  coined_square = 2,
  scattering_square = 3,
  coined_honeycomb = 4,
  scattering_honeycomb = 5,
};

inline LabelKind kind_of(const BasisLabel& label) {
  return static_cast<LabelKind>(label.index());
}

Model model_of(LabelKind kind);
Lattice lattice_of(LabelKind kind);
std::string to_string(LabelKind kind);

namespace detail {

// key layout: | tag:3 | j+offset:26 | k+offset:26 | dir:4 |
inline constexpr int kDirBits = 4;
inline constexpr int kCoordBits = 26;
inline constexpr int kKShift = kDirBits;
inline constexpr int kJShift = kDirBits + kCoordBits;
inline constexpr int kTagShift = kDirBits + 2 * kCoordBits;
inline constexpr std::int64_t kCoordOffset = std::int64_t{1} << (kCoordBits - 1);
inline constexpr std::uint64_t kCoordMask = (std::uint64_t{1} << kCoordBits) - 1;
inline constexpr std::uint64_t kDirMask = (std::uint64_t{1} << kDirBits) - 1;

std::uint64_t pack_out_of_range(int v);  // throws ParameterError

inline std::uint64_t pack_coord(int v) {
  const std::int64_t shifted = static_cast<std::int64_t>(v) + kCoordOffset;
  if (shifted < 0 || shifted > static_cast<std::int64_t>(kCoordMask)) {
    return pack_out_of_range(v);
  }
  return static_cast<std::uint64_t>(shifted);
}

inline int unpack_coord(std::uint64_t bits) {
  return static_cast<int>(static_cast<std::int64_t>(bits) - kCoordOffset);
}

inline std::uint64_t compose(LabelKind kind, int j, int k, int dir) {
  return (static_cast<std::uint64_t>(kind) << kTagShift) | (pack_coord(j) << kJShift) |
         (pack_coord(k) << kKShift) | static_cast<std::uint64_t>(dir);
}

inline int sign_bit(int sigma) { return sigma > 0 ? 1 : 0; }
inline int bit_sign(int bit) { return bit != 0 ? +1 : -1; }

//! raw (j, k, dir) fields of a label, using the same dir encoding as
//! packed_key; false if the label is not of the expected kind
inline bool label_fields(const BasisLabel& label, LabelKind expected, int& j, int& k, int& dir) {
  if (static_cast<LabelKind>(label.index()) != expected) return false;
  switch (expected) {
    case LabelKind::coined_1d: {
      const auto& l = *std::get_if<Coined1D>(&label);
      j = l.j; k = 0; dir = sign_bit(l.sigma);
      return true;
    }
    case LabelKind::scattering_1d: {
      const auto& l = *std::get_if<Scattering1D>(&label);
      j = l.j; k = 0; dir = sign_bit(l.sigma);
      return true;
    }
    case LabelKind::coined_square: {
      const auto& l = *std::get_if<CoinedSquare>(&label);
      j = l.j; k = l.k; dir = l.sigma;
      return true;
    }
    case LabelKind::scattering_square: {
      const auto& l = *std::get_if<ScatteringSquare>(&label);
      j = l.j; k = l.k; dir = (sign_bit(l.sx) << 1) | sign_bit(l.sy);
      return true;
    }
    case LabelKind::coined_honeycomb: {
      const auto& l = *std::get_if<CoinedHoney>(&label);
      j = l.j; k = l.k; dir = l.sigma;
      return true;
    }
    default: {
      const auto& l = *std::get_if<ScatteringHoney>(&label);
      j = l.j; k = l.k; dir = l.sigma;
      return true;
    }
  }
}

//! inverse of label_fields
inline BasisLabel label_from_fields(LabelKind kind, int j, int k, int dir) {
  switch (kind) {
    case LabelKind::coined_1d: return Coined1D{j, bit_sign(dir)};
    case LabelKind::scattering_1d: return Scattering1D{bit_sign(dir), j};
    case LabelKind::coined_square: return CoinedSquare{j, k, dir};
    case LabelKind::scattering_square:
      return ScatteringSquare{bit_sign((dir >> 1) & 1), bit_sign(dir & 1), j, k};
    case LabelKind::coined_honeycomb: return CoinedHoney{j, k, dir};
    default: return ScatteringHoney{dir, j, k};
  }
}

}  // namespace detail

//! Order-preserving 64-bit encoding: (kind, j, k, direction). The induced
//! order equals operator< on BasisLabel. Coordinates must stay within ±2^25.
inline std::uint64_t packed_key(const BasisLabel& label) {
  using namespace detail;
  switch (static_cast<LabelKind>(label.index())) {
    case LabelKind::coined_1d: {
      const auto& l = *std::get_if<Coined1D>(&label);
      return compose(LabelKind::coined_1d, l.j, 0, sign_bit(l.sigma));
    }
    case LabelKind::scattering_1d: {
      const auto& l = *std::get_if<Scattering1D>(&label);
      return compose(LabelKind::scattering_1d, l.j, 0, sign_bit(l.sigma));
    }
    case LabelKind::coined_square: {
      const auto& l = *std::get_if<CoinedSquare>(&label);
      return compose(LabelKind::coined_square, l.j, l.k, l.sigma);
    }
    case LabelKind::scattering_square: {
      const auto& l = *std::get_if<ScatteringSquare>(&label);
      return compose(LabelKind::scattering_square, l.j, l.k,
                     (sign_bit(l.sx) << 1) | sign_bit(l.sy));
    }
    case LabelKind::coined_honeycomb: {
      const auto& l = *std::get_if<CoinedHoney>(&label);
      return compose(LabelKind::coined_honeycomb, l.j, l.k, l.sigma);
    }
    default: {
      const auto& l = *std::get_if<ScatteringHoney>(&label);
      return compose(LabelKind::scattering_honeycomb, l.j, l.k, l.sigma);
    }
  }
}

//! inverse of packed_key
inline BasisLabel unpack_key(std::uint64_t key) {
  using namespace detail;
  if ((key >> kTagShift) > 5) throw ParameterError("corrupt packed label key");
  return label_from_fields(static_cast<LabelKind>(key >> kTagShift),
                           unpack_coord((key >> kJShift) & kCoordMask),
                           unpack_coord((key >> kKShift) & kCoordMask),
                           static_cast<int>(key & kDirMask));
}

//! throws ParameterError if a quantum number is out of range for its variant
void validate_label(const BasisLabel& label);

std::string to_string(const BasisLabel& label);

}  // namespace qwalk

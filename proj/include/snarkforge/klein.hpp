// Copyright 2026 The Snarkforge Authors.
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

// The Klein four-group Z2 x Z2 and the three edge colors (its nonzero
// elements). An element (z1, z2) is stored as the two-bit value 2*z1 + z2,
// which makes group addition a bitwise xor.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "snarkforge/errors.hpp"

namespace snarkforge {

class GroupElement {
 public:
  constexpr GroupElement() = default;
  constexpr GroupElement(int z1, int z2) : bits_(static_cast<std::uint8_t>(((z1 & 1) << 1) | (z2 & 1))) {}

  static constexpr GroupElement from_bits(std::uint8_t bits) {
    return GroupElement((bits >> 1) & 1, bits & 1);
  }

  constexpr int z1() const { return (bits_ >> 1) & 1; }
  constexpr int z2() const { return bits_ & 1; }
  constexpr std::uint8_t bits() const { return bits_; }
  constexpr bool is_zero() const { return bits_ == 0; }

  friend constexpr GroupElement operator+(GroupElement x, GroupElement y) {
    return from_bits(x.bits_ ^ y.bits_);
  }
  GroupElement& operator+=(GroupElement y) {
    bits_ ^= y.bits_;
    return *this;
  }
  friend constexpr bool operator==(GroupElement, GroupElement) = default;

 private:
  std::uint8_t bits_ = 0;
};

inline constexpr GroupElement kZero{0, 0};
inline constexpr GroupElement kA{0, 1};
inline constexpr GroupElement kB{1, 0};
inline constexpr GroupElement kC{1, 1};

constexpr GroupElement group_add(GroupElement x, GroupElement y) { return x + y; }

// A nonzero group element.
enum class Color : std::uint8_t { a = 1, b = 2, c = 3 };

inline constexpr std::array<Color, 3> kColors = {Color::a, Color::b, Color::c};

constexpr GroupElement to_group(Color c) {
  return GroupElement::from_bits(static_cast<std::uint8_t>(c));
}

constexpr int color_index(Color c) { return static_cast<int>(c) - 1; }

// The color distinct from both x and y (x != y).
constexpr Color third_color(Color x, Color y) {
  return static_cast<Color>(static_cast<std::uint8_t>(x) ^ static_cast<std::uint8_t>(y));
}

inline char color_char(Color c) { return "?abc"[static_cast<int>(c)]; }

inline std::string group_name(GroupElement g) {
  return g.is_zero() ? "0" : std::string(1, "?abc"[g.bits()]);
}

inline Color parse_color(std::string_view s) {
  if (s == "a") return Color::a;
  if (s == "b") return Color::b;
  if (s == "c") return Color::c;
  throw DomainError("not a color: " + std::string(s));
}

}  // namespace snarkforge

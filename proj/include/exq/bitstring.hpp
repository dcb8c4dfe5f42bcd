// Copyright 2026 The exq Authors
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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace exq {

/// An input x = x_0 ... x_{n-1} in {0,1}^n. Text form lists x_0 first.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::vector<std::uint8_t> bits);

  /// Parses a string of '0'/'1' characters.
  static BitString parse(std::string_view text);
  /// Bit i of `mask` becomes x_i. Requires n <= 64.
  static BitString from_mask(std::uint64_t mask, std::size_t n);
  static BitString zeros(std::size_t n);
  static BitString ones(std::size_t n);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  unsigned operator[](std::size_t i) const noexcept { return bits_[i]; }
  /// Bounds-checked access.
  unsigned at(std::size_t i) const;
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  std::size_t weight() const noexcept;
  BitString substr(std::size_t offset, std::size_t length) const;
  std::uint64_t to_mask() const;
  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace exq

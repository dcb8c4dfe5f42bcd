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

#include "exq/bitstring.hpp"

#include <algorithm>
#include <numeric>

#include "exq/error.hpp"

namespace exq {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_)
    if (b > 1)
      throw Error(ErrorKind::InvalidParameter, "bit value must be 0 or 1");
}

BitString BitString::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1')
      throw Error(ErrorKind::Parse,
                  "bit string may only contain '0' and '1': '" +
                      std::string(text) + "'");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BitString(std::move(bits));
}

BitString BitString::from_mask(std::uint64_t mask, std::size_t n) {
  if (n > 64)
    throw Error(ErrorKind::InvalidDimension, "from_mask supports n <= 64");
  std::vector<std::uint8_t> bits(n);
  for (std::size_t i = 0; i < n; ++i)
    bits[i] = static_cast<std::uint8_t>((mask >> i) & 1u);
  return BitString(std::move(bits));
}

BitString BitString::zeros(std::size_t n) {
  return BitString(std::vector<std::uint8_t>(n, 0));
}

BitString BitString::ones(std::size_t n) {
  return BitString(std::vector<std::uint8_t>(n, 1));
}

unsigned BitString::at(std::size_t i) const {
  if (i >= bits_.size())
    throw Error(ErrorKind::OutOfRange, "bit index " + std::to_string(i) +
                                           " out of range for length " +
                                           std::to_string(bits_.size()));
  return bits_[i];
}

std::size_t BitString::weight() const noexcept {
  return static_cast<std::size_t>(
      std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

BitString BitString::substr(std::size_t offset, std::size_t length) const {
  if (offset > bits_.size() || length > bits_.size() - offset)
    throw Error(ErrorKind::OutOfRange, "substring out of range");
  BitString out;
  out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(offset),
                   bits_.begin() + static_cast<std::ptrdiff_t>(offset + length));
  return out;
}

std::uint64_t BitString::to_mask() const {
  if (bits_.size() > 64)
    throw Error(ErrorKind::InvalidDimension, "to_mask supports n <= 64");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    m |= static_cast<std::uint64_t>(bits_[i]) << i;
  return m;
}

std::string BitString::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) s[i] = '1';
  return s;
}

}  // namespace exq

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
#include "test_util.hpp"

using namespace exq;

TEST_CASE("BitString parsing and access") {
  const auto x = BitString::parse("10110");
  CHECK(x.size() == 5);
  CHECK(x[0] == 1);
  CHECK(x[1] == 0);
  CHECK(x.weight() == 3);
  CHECK(x.to_string() == "10110");
  CHECK(x.at(4) == 0);
  EXQ_CHECK_THROWS_KIND(x.at(5), ErrorKind::OutOfRange);
  EXQ_CHECK_THROWS_KIND(BitString::parse("10a"), ErrorKind::Parse);
  EXQ_CHECK_THROWS_KIND(BitString(std::vector<std::uint8_t>{0, 2}), ErrorKind::InvalidParameter);
  CHECK(BitString::parse("").empty());
}

TEST_CASE("BitString masks put x_i at bit i") {
  CHECK(BitString::from_mask(0b0001, 4).to_string() == "1000");
  CHECK(BitString::from_mask(0b0110, 4).to_string() == "0110");
  for (std::uint64_t m = 0; m < 64; ++m) CHECK(BitString::from_mask(m, 6).to_mask() == m);
  CHECK(BitString::from_mask(~0ull, 64).weight() == 64);
  EXQ_CHECK_THROWS_KIND(BitString::from_mask(0, 65), ErrorKind::InvalidDimension);
}

TEST_CASE("BitString substr, zeros, ones") {
  const auto x = BitString::parse("110100");
  CHECK(x.substr(2, 3).to_string() == "010");
  CHECK(x.substr(6, 0).empty());
  EXQ_CHECK_THROWS_KIND(x.substr(4, 3), ErrorKind::OutOfRange);
  CHECK(BitString::zeros(3).to_string() == "000");
  CHECK(BitString::ones(3).to_string() == "111");
  CHECK(BitString::ones(3) == BitString::parse("111"));
}

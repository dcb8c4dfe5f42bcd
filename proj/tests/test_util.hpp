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

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "doctest.h"
#include "exq/error.hpp"
#include "exq/linalg.hpp"

namespace exq::testing {

/// Runs `fn` and reports the ErrorKind it threw, or nothing.
template <class Fn>
std::optional<ErrorKind> thrown_kind(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

#define EXQ_CHECK_THROWS_KIND(expr, kind) \
  CHECK(::exq::testing::thrown_kind([&] { (void)(expr); }) == (kind))

inline std::vector<Complex> random_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> d;
  std::vector<Complex> v(n);
  for (auto& c : v) c = {d(gen), d(gen)};
  return v;
}

inline StateVector random_state(std::size_t n, std::uint64_t seed) {
  auto v = random_vector(n, seed);
  double s = 0;
  for (auto& c : v) s += std::norm(c);
  for (auto& c : v) c /= std::sqrt(s);
  return StateVector(std::move(v));
}

}  // namespace exq::testing

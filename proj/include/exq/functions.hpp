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

// Symmetric functions f(x) = F(|x|) given by their univariate table, and
// the brute-force evaluator every algorithm is checked against.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "exq/bitstring.hpp"

namespace exq {

/// Output labels are small non-negative integer codes.
using Label = long;

struct SymmetricFunction {
  std::size_t n = 0;
  /// F(0), ..., F(n).
  std::vector<Label> labels;

  /// Throws unless labels has exactly n + 1 entries, all non-negative.
  SymmetricFunction(std::size_t n, std::vector<Label> labels);

  Label at_weight(std::size_t w) const { return labels.at(w); }
  friend bool operator==(const SymmetricFunction&,
                         const SymmetricFunction&) = default;
};

std::size_t hamming_weight(const BitString& x);

Label eval_symmetric(const SymmetricFunction& f, const BitString& x);

/// True iff F(0) = F(k) and F(n-k) = F(n). Requires 1 <= k <= n.
bool validate_nonevasive_promise(const SymmetricFunction& f, std::size_t k);

struct FunctionFamily {
  enum class Kind { Mod, Exact, ExactPair, Threshold, Parity };
  Kind kind;
  long p1 = 0;
  long p2 = 0;

  static FunctionFamily mod(long m) { return {Kind::Mod, m, 0}; }
  static FunctionFamily exact(long k) { return {Kind::Exact, k, 0}; }
  static FunctionFamily exact_pair(long k, long l) { return {Kind::ExactPair, k, l}; }
  static FunctionFamily threshold(long k) { return {Kind::Threshold, k, 0}; }
  static FunctionFamily parity() { return {Kind::Parity, 0, 0}; }
};

/// MOD(m): 1 <= m. EXACT(k): 0 <= k <= n. EXACT(k,l): 0 <= k < l <= n.
/// TH(k): 0 <= k <= n. PARITY: any n.
SymmetricFunction builtin_table(const FunctionFamily& family, std::size_t n);

/// A table with labels drawn uniformly from [0, alphabet) and then patched
/// so that F(0) = F(k) and F(n-k) = F(n). Deterministic in `seed`.
SymmetricFunction random_promise_table(std::size_t n, std::size_t k,
                                       std::uint64_t seed, Label alphabet = 3);

// Function-spec text format:
//   n=<int>
//   F=<comma-separated n+1 integers>
SymmetricFunction parse_function_spec(std::string_view text);
std::string format_function_spec(const SymmetricFunction& f);
SymmetricFunction load_function_spec(const std::filesystem::path& path);

}  // namespace exq

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

// Known exact query complexities and lower bounds, in integer arithmetic.

#pragma once

#include <optional>
#include <string>

namespace exq {

enum class BoundFamily { Parity, Exact, Threshold, Mod, ExactPair };

const char* to_string(BoundFamily family);

struct BoundRecord {
  BoundFamily family;
  long n;
  long p1 = 0;
  long p2 = 0;
  long lower;
  std::optional<long> upper;
  /// Citation tag for where the value comes from.
  std::string source;
};

/// ceil(n (1 - 1/m)) = n - floor(n/m). Requires 1 < m <= n.
long lb_mod(long n, long m);

/// max{n-k, l} - 1. Requires 0 <= k < l <= n and l - k >= 2.
long lb_exact_kl(long n, long k, long l);

/// Exact value when it is known, std::nullopt otherwise.
///   Parity         ceil(n/2)
///   Exact(k)       max{k, n-k}
///   Threshold(k)   max{k, n-k+1}
///   Mod(m)         n - floor(n/m)   (0 for m = 1)
///   ExactPair(k,l) max{n-k, l} - 1  for k = 0, k = 1 and l = n-1, or
///                  l - k in {2, 3}
std::optional<long> known_exact_value(BoundFamily family, long n, long p1 = 0,
                                      long p2 = 0);

BoundRecord bound_record(BoundFamily family, long n, long p1 = 0, long p2 = 0);

}  // namespace exq

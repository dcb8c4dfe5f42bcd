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

#include "exq/bounds.hpp"

#include <algorithm>

#include "exq/error.hpp"

namespace exq {
namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(ErrorKind::InvalidParameter, msg);
}

}  // namespace

const char* to_string(BoundFamily family) {
  switch (family) {
    case BoundFamily::Parity:
      return "PARITY";
    case BoundFamily::Exact:
      return "EXACT_k";
    case BoundFamily::Threshold:
      return "TH_k";
    case BoundFamily::Mod:
      return "MOD_m";
    case BoundFamily::ExactPair:
      return "EXACT_kl";
  }
  return "unknown";
}

long lb_mod(long n, long m) {
  require(m > 1 && m <= n, "lb_mod needs 1 < m <= n");
  return n - n / m;
}

long lb_exact_kl(long n, long k, long l) {
  require(k >= 0 && k < l && l <= n && l - k >= 2,
          "lb_exact_kl needs 0 <= k < l <= n and l - k >= 2");
  return std::max(n - k, l) - 1;
}

std::optional<long> known_exact_value(BoundFamily family, long n, long p1,
                                      long p2) {
  require(n >= 1, "known_exact_value needs n >= 1");
  switch (family) {
    case BoundFamily::Parity:
      return (n + 1) / 2;
    case BoundFamily::Exact:
      require(p1 >= 0 && p1 <= n, "EXACT_k needs 0 <= k <= n");
      return std::max(p1, n - p1);
    case BoundFamily::Threshold:
      require(p1 >= 0 && p1 <= n, "TH_k needs 0 <= k <= n");
      return std::max(p1, n - p1 + 1);
    case BoundFamily::Mod:
      require(p1 >= 1 && p1 <= n, "MOD_m needs 1 <= m <= n");
      return p1 == 1 ? 0 : lb_mod(n, p1);
    case BoundFamily::ExactPair: {
      const long lb = lb_exact_kl(n, p1, p2);
      if (p1 == 0 || (p1 == 1 && p2 == n - 1) || p2 - p1 <= 3) return lb;
      return std::nullopt;
    }
  }
  throw Error(ErrorKind::InvalidParameter, "unknown bound family");
}

BoundRecord bound_record(BoundFamily family, long n, long p1, long p2) {
  BoundRecord r{family, n, p1, p2, 0, std::nullopt, {}};
  switch (family) {
    case BoundFamily::Parity:
      r.lower = *known_exact_value(family, n);
      r.upper = r.lower;
      r.source = "CEMM98,FGGS98,BBC+01";
      break;
    case BoundFamily::Exact:
    case BoundFamily::Threshold:
      r.lower = *known_exact_value(family, n, p1);
      r.upper = r.lower;
      r.source = "AIS13";
      break;
    case BoundFamily::Mod:
      r.lower = *known_exact_value(family, n, p1);
      r.upper = r.lower;
      r.source = "CMO+21 (lower); MOD algorithm (upper)";
      break;
    case BoundFamily::ExactPair: {
      r.lower = lb_exact_kl(n, p1, p2);
      const auto v = known_exact_value(family, n, p1, p2);
      r.upper = v ? *v : std::max(n - p1, p2) + 1;
      r.source = v ? "AIN17 (lower); EXACT_kl algorithms (upper)" : "AIN17";
      break;
    }
  }
  return r;
}

}  // namespace exq

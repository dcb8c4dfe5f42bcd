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

// Verification sweeps: run an algorithm family on every input (or a seeded
// uniform sample), compare against the brute-force symmetric evaluator, and
// aggregate query counts and exactness evidence.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exq/algorithms.hpp"
#include "exq/bitstring.hpp"
#include "exq/functions.hpp"

namespace exq {

/// Off-peak measurement mass above which a run is not considered exact.
inline constexpr double kExactnessTol = 1e-9;
/// Failure lists in reports keep at most this many entries.
inline constexpr std::size_t kMaxReportedFailures = 100;
inline constexpr std::size_t kDefaultExhaustiveCap = 24;
inline constexpr int kReportSchemaVersion = 1;

enum class Family { Mod, Exact0L, Exact1, NonEvasive };

std::string_view to_string(Family family);
/// Accepts "mod", "exact0l", "exact1" (alias "exact1top"), "nonevasive";
/// case-insensitive.
Family parse_family(std::string_view name);

struct SweepConfig {
  Family family = Family::Mod;
  std::size_t n = 0;
  /// MOD modulus.
  std::size_t m = 0;
  /// EXACT_{0,l} parameter.
  std::size_t l = 0;
  /// Non-evasive promise parameter.
  std::size_t k = 0;
  /// Non-evasive univariate table F(0..n).
  std::vector<Label> func;

  friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

struct SweepMode {
  enum class Kind { Exhaustive, Sampled };
  Kind kind = Kind::Exhaustive;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  static SweepMode exhaustive() { return {}; }
  static SweepMode sampled(std::uint64_t count, std::uint64_t seed) {
    return {Kind::Sampled, count, seed};
  }
  friend bool operator==(const SweepMode&, const SweepMode&) = default;
};

struct SweepOptions {
  std::size_t threads = 1;
  std::size_t exhaustive_cap = kDefaultExhaustiveCap;
  /// Record wall time. Off by default so reports are byte-reproducible.
  bool timing = false;
  Backend backend = Backend::Factorized;
};

struct Failure {
  std::string input;
  Label expected = 0;
  Label got = 0;
  std::string reason;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct SweepReport {
  SweepConfig config;
  SweepMode mode;
  std::uint64_t inputs_checked = 0;
  /// Total failures; `failures` holds the first kMaxReportedFailures in
  /// input order.
  std::uint64_t failure_count = 0;
  std::vector<Failure> failures;
  std::size_t max_queries_observed = 0;
  std::size_t min_queries_observed = 0;
  /// Query budget: an exact count for MOD, an upper bound otherwise.
  std::size_t bound = 0;
  bool bound_is_exact = false;
  /// Known lower bound on the exact query complexity, when one applies.
  std::optional<long> lower_bound;
  double exactness_worst = 0.0;
  double fully_simulated_fraction = 1.0;
  double wall_time = 0.0;

  bool passed() const noexcept { return failure_count == 0; }
  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

/// Checks parameters and fills in bound / lower_bound for a config.
SweepReport prepare_report(const SweepConfig& config, const SweepMode& mode);

SweepReport sweep(const SweepConfig& config, const SweepMode& mode,
                  const SweepOptions& options = {});

/// The standard battery for n in [2, max_n]: MOD for every m in [2, n],
/// EXACT_{0,l} for every l in [2, n] (n >= 3), EXACT_{1,n-1} (n >= 4), and
/// the non-evasive evaluator on `tables_per_k` seeded promise tables for
/// every k in [1, n] (n >= 3).
std::vector<SweepReport> sweep_all(std::size_t max_n, const SweepMode& mode,
                                   const SweepOptions& options = {},
                                   std::size_t tables_per_k = 3);

/// Runs one input with a step-by-step narrative. Params that do not apply
/// to the family are ignored.
std::string trace(const SweepConfig& config, const BitString& x);

enum class ReportFormat { Csv, Json };
ReportFormat parse_report_format(std::string_view name);

/// Column order of the CSV form.
std::string_view csv_header();
std::string reports_to_csv(const std::vector<SweepReport>& reports);
std::string reports_to_json(const std::vector<SweepReport>& reports);
std::vector<SweepReport> reports_from_json(std::string_view text);

/// Writes the reports; throws Io when the path is not writable.
void report_emit(const std::vector<SweepReport>& reports, ReportFormat format,
                 const std::filesystem::path& path);

}  // namespace exq

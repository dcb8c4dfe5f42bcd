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

#include <cmath>
#include <numbers>

#include "exq/query_model.hpp"
#include "test_util.hpp"

using namespace exq;

namespace {

UnitaryMatrix diag_dense(const DiagonalOperator& d) { return d.dense(); }

// Reference entry e^{i b theta x_{(j-a) mod n}} computed with std::polar.
Complex shifted_entry(const BitString& x, std::size_t a, std::size_t j, std::size_t b) {
  const std::size_t n = x.size();
  const double theta = 2 * std::numbers::pi / static_cast<double>(n);
  return std::polar(1.0, theta * static_cast<double>(b * x[(j + n - a) % n]));
}

}  // namespace

TEST_CASE("standard_oracle") {
  CHECK(standard_oracle(BitString::zeros(4)).max_abs_diff(UnitaryMatrix::identity(16)) == 0.0);

  // n=2, x="10": |0,0> <-> |0,1>, |1,b> fixed. Column c holds the image of |c>.
  const auto o = standard_oracle(BitString::parse("10"));
  CHECK(o.at(1, 0) == Complex(1, 0));
  CHECK(o.at(0, 1) == Complex(1, 0));
  CHECK(o.at(2, 2) == Complex(1, 0));
  CHECK(o.at(3, 3) == Complex(1, 0));

  for (std::size_t n = 1; n <= 8; ++n)
    for (std::uint64_t m = 0; m < (1ull << n); ++m) {
      const auto x = BitString::from_mask(m, n);
      const auto u = standard_oracle(x);
      REQUIRE(u.is_permutation());
      // |i,b> -> |i, b + x_i mod n>
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < n; ++b)
          CHECK(u.at(i * n + (b + x[i]) % n, i * n + b) == Complex(1, 0));
    }
}

TEST_CASE("phase_oracle entries") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto d = phase_oracle(BitString::zeros(n));
    for (std::size_t i = 0; i < n * n; ++i) CHECK(d.exponent(i) == 0);
  }
  const auto d = phase_oracle(BitString::parse("0100"));
  CHECK(std::abs(d.entry(1 * 4 + 2) - Complex(-1, 0)) <= kEntryTol);
  CHECK(d.modulus() == 4);
  CHECK(d.dim() == 16);
}

TEST_CASE("conjugation identity: (I x F) O_x (I x F^dagger) is the phase oracle") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CAPTURE(n);
    double worst = 0;
    for (std::uint64_t m = 0; m < (1ull << n); ++m) {
      const auto x = BitString::from_mask(m, n);
      const auto dense = dense_phase_oracle(x);
      worst = std::max(worst, dense.max_abs_diff(diag_dense(phase_oracle(x))));
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t b = 0; b < n; ++b)
          worst = std::max(worst, std::abs(dense.at(j * n + b, j * n + b) -
                                           shifted_entry(x, 0, j, b)));
    }
    CHECK(worst <= kNormTol);
  }
}

TEST_CASE("shift identity: (U_a x I) O^_x (U_-a x I) is the shifted phase oracle") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CAPTURE(n);
    double worst = 0;
    for (std::uint64_t m = 0; m < (1ull << n); ++m) {
      const auto x = BitString::from_mask(m, n);
      for (std::size_t a = 0; a < n; ++a) {
        const auto diag = shifted_phase_oracle(x, a);
        worst = std::max(worst, dense_shifted_phase_oracle(x, a).max_abs_diff(diag.dense()));
        const auto q = dense_query_operator(x, a);
        worst = std::max(worst, q.max_abs_diff(diag.dense()));
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t b = 0; b < n; ++b)
            worst = std::max(worst, std::abs(diag.entry(j * n + b) - shifted_entry(x, a, j, b)));
      }
    }
    CHECK(worst <= kNormTol);
  }
}

TEST_CASE("shift_operator") {
  CHECK(shift_operator(4, 0).max_abs_diff(UnitaryMatrix::identity(4)) == 0.0);
  const auto u = shift_operator(3, 1);
  CHECK(u.at(1, 0) == Complex(1, 0));
  CHECK(u.at(2, 1) == Complex(1, 0));
  CHECK(u.at(0, 2) == Complex(1, 0));
  CHECK((shift_operator(5, 2) * shift_operator(5, 3)).max_abs_diff(UnitaryMatrix::identity(5)) == 0.0);
  EXQ_CHECK_THROWS_KIND(shift_operator(0, 0), ErrorKind::InvalidDimension);
}

TEST_CASE("shifted_phase_oracle") {
  const auto x = BitString::parse("10110");
  CHECK(shifted_phase_oracle(x, 0) == phase_oracle(x));
  const auto d = shifted_phase_oracle(BitString::parse("100"), 1);
  CHECK(std::abs(d.entry(1 * 3 + 1) - std::polar(1.0, 2 * std::numbers::pi / 3)) <= kEntryTol);
  for (std::size_t n = 2; n <= 7; ++n)
    for (std::size_t a = 1; a < n; ++a)
      CHECK(shifted_phase_oracle(BitString::ones(n), a) == shifted_phase_oracle(BitString::ones(n), 0));
  const auto angles = d.angles();
  REQUIRE(angles.size() == 9);
  CHECK(std::abs(angles[4] - 2 * std::numbers::pi / 3) <= 1e-15);
}

TEST_CASE("POVM completeness and measurement") {
  for (std::size_t n = 1; n <= 16; ++n) CHECK(povm_completeness_deviation(n) <= kNormTol);

  const auto m = povm_measure(phi_state(5, 2), 7);
  CHECK(m.outcome == 2);
  REQUIRE(m.distribution.size() == 5);
  for (std::size_t j = 0; j < 5; ++j) CHECK(std::abs(m.distribution[j] - (j == 2 ? 1.0 : 0.0)) <= kEntryTol);
  CHECK(m.off_peak_mass() <= kEntryTol);

  CHECK(povm_measure(StateVector::uniform(6), 1).outcome == 0);

  const auto mix = StateVector({(phi_state(4, 0)[0] + phi_state(4, 1)[0]) / std::sqrt(2.0),
                                (phi_state(4, 0)[1] + phi_state(4, 1)[1]) / std::sqrt(2.0),
                                (phi_state(4, 0)[2] + phi_state(4, 1)[2]) / std::sqrt(2.0),
                                (phi_state(4, 0)[3] + phi_state(4, 1)[3]) / std::sqrt(2.0)});
  const auto p = fourier_distribution(mix);
  const double want[] = {0.5, 0.5, 0, 0};
  for (std::size_t j = 0; j < 4; ++j) CHECK(std::abs(p[j] - want[j]) <= kEntryTol);

  EXQ_CHECK_THROWS_KIND(povm_measure(StateVector::zero(3), 1), ErrorKind::NotNormalized);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto s = testing::random_state(7, seed);
    const auto d = fourier_distribution(s);
    double sum = 0;
    for (double v : d) sum += v;
    CHECK(std::abs(sum - 1) <= kNormTol);
    CHECK(povm_measure(s, seed).outcome == povm_measure(s, seed).outcome);
  }
}

TEST_CASE("sample_outcome follows the distribution") {
  const std::vector<double> d{0.25, 0.0, 0.75};
  std::size_t counts[3] = {};
  for (std::uint64_t seed = 0; seed < 4000; ++seed) ++counts[sample_outcome(d, seed)];
  CHECK(counts[1] == 0);
  CHECK(counts[0] > 800);
  CHECK(counts[0] < 1200);
  EXQ_CHECK_THROWS_KIND(sample_outcome({}, 0), ErrorKind::InvalidDimension);
}

TEST_CASE("QueryLedger") {
  auto l = ledger_charge(QueryLedger{}, ChargeKind::Simulated, 1, "q");
  CHECK(l.simulated() == 1);
  CHECK(l.cost_modeled() == 0);

  const auto c = ledger_charge(QueryLedger{}, ChargeKind::CostModeled, 3, "AIN17 EXACT_{1,4}^5");
  CHECK(c.cost_modeled() == 3);
  CHECK(c.simulated() == 0);
  CHECK(c.trace().front().kind == StepKind::CostModeled);

  auto two = ledger_charge(ledger_charge(QueryLedger{}, ChargeKind::Simulated, 2, "a"),
                           ChargeKind::Simulated, 2, "b");
  CHECK(two.simulated() == 4);
  CHECK(two.trace().size() == 2);
  CHECK(two.consistent());

  QueryLedger r;
  r.charge(ChargeKind::Simulated, 1, "x", {3}, StepKind::ClassicalBit);
  r.record(StepKind::Measurement, "fourier", {2, 1});
  r.record(StepKind::Note, "early exit");
  CHECK(r.total() == 1);
  CHECK(r.trace().size() == 3);
  CHECK(r.consistent());
  CHECK(r.trace()[0].render() == "classical-bit x(3) x1");

  EXQ_CHECK_THROWS_KIND(r.charge(ChargeKind::Simulated, 0, "zero"), ErrorKind::InvalidParameter);
  EXQ_CHECK_THROWS_KIND(r.charge(ChargeKind::CostModeled, 1, "bad", {}, StepKind::Query),
                        ErrorKind::InvalidParameter);
  EXQ_CHECK_THROWS_KIND(r.record(StepKind::Query, "bad"), ErrorKind::InvalidParameter);
  EXQ_CHECK_THROWS_KIND(r.charge(ChargeKind::Simulated, 1, "p", {1, 2, 3, 4}), ErrorKind::InvalidParameter);
}

TEST_CASE("CompositeState factorized and full forms agree") {
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::uint64_t m = 0; m < (1ull << n); ++m) {
      const auto x = BitString::from_mask(m, n);
      auto f = CompositeState::factorized(StateVector::uniform(n), 0);
      auto g = CompositeState::full(n, f.to_full());
      for (std::size_t a = 1; a < n; ++a) {
        f.shift_phase_register(1);
        g.shift_phase_register(1);
        f.apply_shifted_phase_oracle(x, a);
        g.apply_shifted_phase_oracle(x, a);
        CHECK(f.to_full().max_abs_diff(g.storage()) <= 1e-12);
        const auto prof = g.phase_profile();
        CHECK(prof.dominant_b == a);
        CHECK(prof.leak <= 1e-12);
      }
    }
}

TEST_CASE("CompositeState dense application matches the diagonal path") {
  const auto x = BitString::parse("1101");
  auto g = CompositeState::full(4, CompositeState::factorized(StateVector::uniform(4), 2).to_full());
  auto h = g;
  g.apply_shifted_phase_oracle(x, 3);
  h.apply_dense(dense_query_operator(x, 3));
  CHECK(g.storage().max_abs_diff(h.storage()) <= kNormTol);

  auto f = CompositeState::factorized(StateVector::uniform(4), 0);
  EXQ_CHECK_THROWS_KIND(f.apply_dense(UnitaryMatrix::identity(16)), ErrorKind::InvalidParameter);
  EXQ_CHECK_THROWS_KIND(CompositeState::full(9, StateVector::uniform(81)), ErrorKind::InvalidDimension);
  EXQ_CHECK_THROWS_KIND(f.apply_shifted_phase_oracle(BitString::parse("101"), 1),
                        ErrorKind::DimensionMismatch);
}

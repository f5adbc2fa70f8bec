// Copyright 2026 The asymlp Authors
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
#include <vector>

#include <gtest/gtest.h>

#include "asymlp/error.hpp"
#include "asymlp/fnorms.hpp"
#include "asymlp/operators.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

namespace asymlp {
namespace {

Grid line(double h, std::int64_t offset, std::int64_t count) {
  return Grid({Axis{h, offset, count}});
}

TEST(NormParamsTest, RejectsExponentsBelowOne) {
  EXPECT_THROW(NormParams{0.5}.validate(), Error);
  EXPECT_THROW(NormParams{HUGE_VAL}.validate(), Error);
  EXPECT_THROW(NormParams{NAN}.validate(), Error);
  EXPECT_NO_THROW(NormParams{1.0}.validate());
}

TEST(FNormTest, HandValues) {
  const double v[] = {3, -0.5, 0, 0.25};
  const auto f = GridFunction::from_values(line(0.5, 0, 4), v);
  // min(|f|,1) = {1, .5, 0, .25}, cells of width 1/2.
  EXPECT_DOUBLE_EQ(alpha_integral(f, {1.0}), 0.875);
  EXPECT_DOUBLE_EQ(alpha_integral(f, {2.0}), 0.5 * (1 + 0.25 + 0.0625));
  EXPECT_DOUBLE_EQ(lp_norm(f, {1.0}), 1.875);
  EXPECT_DOUBLE_EQ(lp_norm(f, {2.0}), std::sqrt(0.5 * (9 + 0.25 + 0.0625)));
}

TEST(FNormTest, DivergentTailsAreNotMembers) {
  // 1/x tail: in the space for p > 1 only.
  const auto tail = TailSpec::power_law(1, 1, 1);
  const auto f = GridFunction::constant(line(0.5, -2, 4), 0.0, tail);
  EXPECT_FALSE(is_member(f, {1.0}));
  EXPECT_TRUE(is_member(f, {2.0}));
  EXPECT_TRUE(std::isinf(lp_norm(f, {1.0})));
  try {
    alpha_norm(f, {1.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotIntegrable);
  }
  EXPECT_THROW(require_member(f, {1.0}), Error);
  // Two unit tails beyond |x| = 1, each integrating r^-2 to 1.
  EXPECT_DOUBLE_EQ(alpha_integral(f, {2.0}), 2.0);
}

TEST(FNormTest, ClampedAgreesWithOracle) {
  gen::Engine e(21);
  for (int i = 0; i < 200; ++i) {
    const auto f = i % 2 ? gen::function_with_tail(e) : gen::function(e);
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      ASSERT_NEAR(alpha_norm(f, {p}), oracle::alpha_norm(f, p), 1e-12);
      const double lp = lp_norm(f, {p});
      ASSERT_NEAR(lp, oracle::lp_norm(f, p), 1e-12 * std::max(1.0, lp));
    }
  }
}

TEST(FNormTest, DistanceAgreesWithPointwiseOracle) {
  gen::Engine e(22);
  for (int i = 0; i < 150; ++i) {
    auto [f, g] = gen::pair(e);
    for (double p : {1.0, 2.0}) {
      ASSERT_NEAR(alpha_distance(f, g, {p}), oracle::alpha_distance(f, g, p),
                  1e-12)
          << i;
      ASSERT_NEAR(alpha_distance_pow(f, g, {p}),
                  oracle::difference_integral(f, g, p, true), 1e-12);
    }
  }
}

TEST(FNormTest, DistanceIsSymmetricAndZeroOnSelf) {
  gen::Engine e(23);
  for (int i = 0; i < 100; ++i) {
    auto [f, g] = gen::pair(e);
    EXPECT_EQ(alpha_distance(f, f, {1.0}), 0.0);
    EXPECT_NEAR(alpha_distance(f, g, {1.5}), alpha_distance(g, f, {1.5}), 1e-15);
  }
}

TEST(ConvergenceTest, ReportsDistancesAndMonotonicity) {
  const auto zero = GridFunction::zero(line(0.25, 0, 4));
  std::vector<GridFunction> seq;
  for (double c : {1.0, 0.5, 0.75, 0.01})
    seq.push_back(GridFunction::constant(line(0.25, 0, 4), c));
  const auto r = alpha_converges(seq, zero, {1.0}, 0.05);
  ASSERT_EQ(r.distances.size(), 4u);
  EXPECT_DOUBLE_EQ(r.distances[1], 0.5);
  EXPECT_FALSE(r.monotone);
  EXPECT_EQ(r.first_increase, 2);
  EXPECT_TRUE(r.converged);
  EXPECT_THROW(alpha_converges({}, zero, {1.0}, 0.1), Error);
}

}  // namespace
}  // namespace asymlp

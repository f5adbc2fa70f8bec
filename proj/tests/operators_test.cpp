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
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "asymlp/error.hpp"
#include "asymlp/fnorms.hpp"
#include "asymlp/operators.hpp"
#include "asymlp/quadrature.hpp"
#include "asymlp/resample.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

namespace asymlp {
namespace {

Grid line(double h, std::int64_t offset, std::int64_t count) {
  return Grid({Axis{h, offset, count}});
}

TEST(CommonRefinementTest, RationalRatios) {
  const auto c = common_refinement(0.25, 1.0 / 6.0);
  ASSERT_TRUE(c.has_value());
  EXPECT_NEAR(c->spacing, 1.0 / 12.0, 1e-17);
  EXPECT_EQ(c->factor_a, 3);
  EXPECT_EQ(c->factor_b, 2);
  const auto same = common_refinement(0.125, 0.125);
  ASSERT_TRUE(same.has_value());
  EXPECT_EQ(same->factor_a, 1);
  EXPECT_EQ(same->factor_b, 1);
}

TEST(CommonRefinementTest, IrrationalRatioHasNone) {
  EXPECT_FALSE(common_refinement(1.0, std::numbers::pi).has_value());
  EXPECT_FALSE(common_refinement(1.0, std::sqrt(2.0)).has_value());
}

TEST(ResampleTest, RefinePreservesIntegrals) {
  gen::Engine e(11);
  for (int i = 0; i < 50; ++i) {
    const auto f = gen::function_1d(e);
    const std::int64_t k[] = {gen::integer(e, 1, 5)};
    const double h[] = {f.grid().axis(0).spacing / static_cast<double>(k[0])};
    const auto r = refine(f, k, h);
    EXPECT_NEAR(oracle::alpha_integral(r, 1.0), oracle::alpha_integral(f, 1.0),
                1e-12);
    EXPECT_EQ(r.grid().axis(0).count, f.grid().axis(0).count * k[0]);
  }
}

TEST(ResampleTest, EmbedRestrictTrim) {
  const double v[] = {0, 0, 1, 2, 0};
  const auto f = GridFunction::from_values(line(0.5, 0, 5), v);
  const auto t = trim(f);
  EXPECT_EQ(t.grid().axis(0).offset, 2);
  EXPECT_EQ(t.grid().axis(0).count, 2);
  const Interval big[] = {{-1.0, 4.0}};
  const auto g = embed(f, big);
  EXPECT_EQ(g.grid().axis(0).count, 10);
  EXPECT_EQ(g(1.7), 2.0);
  EXPECT_EQ(g(-0.5), 0.0);
  const Interval small[] = {{1.0, 1.5}};
  const auto r = restrict_to_box(f, small);
  EXPECT_EQ(r.dense_values(), std::vector<double>({1.0}));
}

TEST(ResampleTest, CombineMatchesPointwise) {
  gen::Engine e(12);
  for (int i = 0; i < 200; ++i) {
    auto [f, g] = gen::pair(e);
    const auto s = combine(f, g, BinaryOp::kAdd);
    const auto d = combine(f, g, BinaryOp::kSubtract);
    for (int t = 0; t < 20; ++t) {
      std::vector<double> x(f.dim());
      for (auto& xi : x) xi = gen::uniform(e, -25.0, 25.0);
      ASSERT_NEAR(s(x), f(x) + g(x), 1e-12);
      ASSERT_NEAR(d(x), f(x) - g(x), 1e-12);
    }
  }
}

TEST(ResampleTest, IncompatibleInputsAreRejected) {
  const auto f = GridFunction::constant(line(1.0, 0, 2), 1.0);
  const auto g = GridFunction::constant(Grid({Axis{std::numbers::pi, 0, 2}}), 1.0);
  try {
    combine(f, g, BinaryOp::kAdd);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::kIncompatible);
  }
  const auto f2 = GridFunction::constant(Grid({Axis{1, 0, 2}, Axis{1, 0, 2}}), 1.0);
  EXPECT_THROW(combine(f, f2, BinaryOp::kAdd), Error);
}

TEST(ResampleTest, TailsCombineWhenGeometryMatches) {
  const auto ta = TailSpec::power_law(3, 2, 1);
  const auto tb = TailSpec::power_law(1, 2, 1);
  const auto f = GridFunction::constant(line(0.5, -2, 4), 1.0, ta);
  const auto g = GridFunction::constant(line(0.25, -4, 8), 0.5, tb);
  const auto d = subtract(f, g);
  EXPECT_EQ(d.tail().coefficient, 2.0);
  EXPECT_DOUBLE_EQ(d(5.0), 2.0 / 25.0);
  const auto tc = TailSpec::power_law(1, 3, 1);
  const auto h = GridFunction::constant(line(0.5, -2, 4), 1.0, tc);
  EXPECT_THROW(subtract(f, h), Error);
}

TEST(OperatorsTest, TranslateMovesBox) {
  const double v[] = {1, 2, 3};
  const auto f = GridFunction::from_values(line(0.25, 0, 3), v);
  const auto t = translate(f, 0.5);
  // tau_y f(x) = f(x + y)
  EXPECT_EQ(t(-0.4), f(0.1));
  EXPECT_EQ(t(0.1), f(0.6));
  EXPECT_EQ(t.grid().axis(0).offset, -2);
  EXPECT_THROW(translate(f, 0.1), Error);
  const auto tail = TailSpec::power_law(1, 2, 1);
  EXPECT_THROW(translate(GridFunction::constant(line(0.5, -2, 4), 1.0, tail), 0.5),
               Error);
  const std::int64_t cells[] = {3};
  EXPECT_EQ(shift_cells(f, cells), translate(f, 0.75));
}

TEST(OperatorsTest, TruncateClampScale) {
  const double v[] = {-5, -0.5, 0.25, 3};
  const auto f = GridFunction::from_values(line(1, 0, 4), v);
  EXPECT_EQ(truncate(f, 2).dense_values(), std::vector<double>({-2, -0.5, 0.25, 2}));
  EXPECT_EQ(clamp_unit(f).dense_values(), std::vector<double>({1, 0.5, 0.25, 1}));
  EXPECT_EQ(scale(f, -2).dense_values(), std::vector<double>({10, 1, -0.5, -6}));
  EXPECT_THROW(truncate(f, -1), Error);
  const auto tail = TailSpec::power_law(4, 1, 1);
  const auto g = GridFunction::constant(line(0.5, -2, 4), 0.0, tail);
  EXPECT_EQ(truncate(g, 2).tail().cap, 2.0);
  EXPECT_EQ(clamp_unit(g).tail().cap, 1.0);
  EXPECT_EQ(truncate(g, 2)(1.5), 2.0);
  EXPECT_EQ(truncate(g, 2)(8.0), 0.5);
}

TEST(OperatorsTest, AddSubtractAreInverse) {
  gen::Engine e(13);
  for (int i = 0; i < 100; ++i) {
    auto [f, g] = gen::pair(e);
    const auto back = subtract(add(f, g), g);
    EXPECT_LT(alpha_distance(back, f, {1.0}), 1e-12);
  }
}

}  // namespace
}  // namespace asymlp

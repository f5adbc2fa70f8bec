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


// Randomised checks of the invariants each module promises. Seeds are fixed;
// a failure message carries the iteration so the case can be replayed.

#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "asymlp/bounded_domain.hpp"
#include "asymlp/criteria.hpp"
#include "asymlp/fnorms.hpp"
#include "asymlp/nets.hpp"
#include "asymlp/operators.hpp"
#include "asymlp/quadrature.hpp"
#include "support/corpus.hpp"
#include "support/generators.hpp"

namespace asymlp {
namespace {

constexpr double kPs[] = {1.0, 1.5, 2.0, 3.0};

MeasurableSet random_set(gen::Engine& e, const Grid& g) {
  std::vector<bool> mask(static_cast<std::size_t>(g.cell_count()));
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = gen::coin(e, 0.4);
  return MeasurableSet::from_mask(g, mask);
}

TEST(GridProperties, IndicatorQuadratureIsExact) {
  gen::Engine e(101);
  for (int it = 0; it < 200; ++it) {
    const Grid g = gen::function(e).grid();
    const MeasurableSet s = random_set(e, g);
    const GridFunction chi = indicator(s);
    for (const Transform& t :
         {Transform::power(1.0), Transform::power(2.5),
          Transform::clamp_power(1.7), Transform::threshold(0.5)}) {
      const double want = t(1.0) * s.measure();
      EXPECT_NEAR(integrate_transformed(chi, t).value, want,
                  1e-12 * std::max(1.0, want))
          << it;
    }
    // Identity for the clamped norm.
    EXPECT_NEAR(std::pow(alpha_norm(chi, {2.0}), 2.0), s.measure(), 1e-12);
  }
}

TEST(GridProperties, MeasureIsAdditiveOnDisjointSets) {
  gen::Engine e(102);
  for (int it = 0; it < 200; ++it) {
    const Grid g = gen::function(e).grid();
    std::vector<bool> a(static_cast<std::size_t>(g.cell_count()));
    std::vector<bool> b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto r = gen::integer(e, 0, 2);
      a[i] = r == 1;
      b[i] = r == 2;
    }
    const auto sa = MeasurableSet::from_mask(g, a);
    const auto sb = MeasurableSet::from_mask(g, b);
    const auto u = sa.united(sb);
    EXPECT_EQ(u.cell_count(), sa.cell_count() + sb.cell_count()) << it;
    EXPECT_NEAR(u.measure(), sa.measure() + sb.measure(), 1e-15 * u.measure());
    EXPECT_GE(sa.measure(), 0.0);
  }
}

TEST(GridProperties, SuperlevelIsMonotoneAndChebyshev) {
  gen::Engine e(103);
  for (int it = 0; it < 300; ++it) {
    const auto f = it % 4 == 0 ? gen::function_with_tail(e) : gen::function(e);
    double prev = HUGE_VAL;
    for (double m = 0.05; m < 12.0; m *= 1.3) {
      const double s = superlevel_measure(f, m);
      EXPECT_LE(s, prev) << it;
      prev = s;
      for (double p : kPs) {
        const Integral in = integrate_transformed(f, Transform::power(p));
        if (in.finite())
          EXPECT_LE(s, in.value / std::pow(m, p) * (1 + 1e-12) + 1e-15) << it;
      }
    }
  }
}

TEST(FNormProperties, DominationAndDistanceBound) {
  gen::Engine e(104);
  for (int it = 0; it < 300; ++it) {
    auto [f, g] = gen::pair(e);
    for (double p : kPs) {
      EXPECT_LE(alpha_norm(f, {p}), lp_norm(f, {p}) * (1 + 1e-12) + 1e-15);
      // |{|f - g| > 1}| is bounded by the clamped distance to the p.
      EXPECT_LE(superlevel_measure(subtract(f, g), 1.0),
                alpha_distance_pow(f, g, {p}) + 1e-12);
    }
  }
}

TEST(OperatorProperties, TranslationIsAnIsometry) {
  gen::Engine e(105);
  for (int it = 0; it < 300; ++it) {
    const auto f = gen::function(e);
    std::vector<std::int64_t> cells(f.dim());
    for (auto& c : cells) c = gen::integer(e, -50, 50);
    std::vector<double> y(f.dim());
    for (std::size_t j = 0; j < y.size(); ++j)
      y[j] = static_cast<double>(cells[j]) * f.grid().axis(j).spacing;
    const auto t = translate(f, y);
    for (double p : kPs) {
      EXPECT_EQ(alpha_norm(t, {p}), alpha_norm(f, {p}));
      EXPECT_EQ(lp_norm(t, {p}), lp_norm(f, {p}));
    }
    for (auto& yi : y) yi = -yi;
    EXPECT_EQ(translate(t, y), f) << it;
  }
}

TEST(OperatorProperties, TruncationIsPointwiseLipschitz) {
  gen::Engine e(106);
  for (int it = 0; it < 300; ++it) {
    auto [f, g] = gen::pair(e);
    const double m = gen::uniform(e, 0.0, 8.0);
    const auto d = subtract(truncate(f, m), truncate(g, m));
    const auto raw = subtract(f, g);
    ASSERT_EQ(d.grid(), raw.grid());
    const auto dv = d.dense_values();
    const auto rv = raw.dense_values();
    for (std::size_t i = 0; i < dv.size(); ++i)
      EXPECT_LE(std::abs(dv[i]), std::abs(rv[i]) + 1e-12) << it;
    // Values at exactly M are kept.
    const double v[] = {m, -m};
    const auto at = GridFunction::from_values(Grid({Axis{1, 0, 2}}), v);
    EXPECT_EQ(truncate(at, m), at);
  }
}

TEST(CriteriaProperties, WitnessesAreMonotoneInEps) {
  const double eps_grid[] = {0.1, 0.25, 0.5, 0.9};
  for (const auto& entry : corpus::named()) {
    for (std::size_t a = 0; a < std::size(eps_grid); ++a) {
      for (auto* check : {&check_tail, &check_translation, &check_level}) {
        const auto e = check(entry.family, eps_grid[a], {});
        if (!e.pass()) continue;
        for (std::size_t b = a + 1; b < std::size(eps_grid); ++b)
          EXPECT_TRUE(reverify(entry.family, e, eps_grid[b]))
              << entry.name << " " << to_string(e.condition);
      }
    }
  }
}

TEST(CriteriaProperties, TotallyBoundedSubfamiliesPassEverything) {
  const auto u = corpus::from_spec("u:k=1..64,p=1");
  gen::Engine e(107);
  for (int it = 0; it < 10; ++it) {
    std::vector<GridFunction> pick;
    for (int j = 0; j < 12; ++j)
      pick.push_back(u.members[static_cast<std::size_t>(gen::integer(e, 0, 63))]);
    const auto fam = make_family(pick, {1.0});
    for (double eps : {0.1, 0.25, 0.5}) {
      EXPECT_TRUE(check_tail(fam, eps).pass());
      EXPECT_TRUE(check_translation(fam, eps).pass());
      EXPECT_TRUE(check_level(fam, eps).pass());
    }
  }
}

TEST(CriteriaProperties, LpTranslationPassImpliesClampedPass) {
  gen::Engine e(108);
  for (int it = 0; it < 40; ++it) {
    std::vector<GridFunction> members;
    for (int j = 0; j < 4; ++j) members.push_back(truncate(gen::function_1d(e), 1.0));
    auto fam = make_family(members, {gen::coin(e) ? 1.0 : 2.0});
    for (double eps : {0.5, 1.0, 2.0}) {
      ScanOptions opt;
      opt.shifts = {1.0 / 48, 8};
      const auto lp = check_kr_lp(fam, eps, opt)[1];
      const auto cl = check_translation(fam, eps, opt);
      if (lp.pass()) {
        ASSERT_TRUE(cl.pass()) << it;
        EXPECT_GE(*cl.witness, *lp.witness);
      }
    }
  }
}

TEST(NetProperties, GreedyCentersAreSeparated) {
  for (const auto& entry : corpus::full()) {
    const auto d = pairwise_distances(entry.family);
    for (double eps : {0.25, 0.5, 1.0}) {
      const EpsNet net = greedy_net(entry.family, eps);
      for (std::size_t a = 0; a < net.center_members.size(); ++a)
        for (std::size_t b = a + 1; b < net.center_members.size(); ++b)
          EXPECT_GE(d(net.center_members[a], net.center_members[b]), eps)
              << entry.name;
    }
  }
}

TEST(BoundedDomainProperties, EquiboundedCertificateIsCellExact) {
  gen::Engine e(109);
  for (int it = 0; it < 40; ++it) {
    std::vector<GridFunction> members;
    for (int j = 0; j < 5; ++j) members.push_back(gen::function_1d(e));
    const auto fam = make_family(members, {1.0});
    const auto c = almost_equibounded_certificate(fam, 2.0);
    if (!c.pass) continue;
    for (std::size_t i = 0; i < fam.size(); ++i) {
      const auto& f = fam.members[i];
      const auto& s = c.exceptional.sets[i];
      EXPECT_LT(s.measure(), 2.0);
      const auto v = f.dense_values();
      for (std::int64_t k = 0; k < f.grid().cell_count(); ++k)
        if (!s.contains_cell(k))
          EXPECT_LE(std::abs(v[static_cast<std::size_t>(k)]), *c.level);
    }
  }
}

TEST(BoundedDomainProperties, UnitExponentSeminormOnBoundedSets) {
  gen::Engine e(110);
  for (int it = 0; it < 100; ++it) {
    const auto f = gen::function_1d(e);
    double direct = 0.0;
    for (double v : f.dense_values()) direct += std::min(std::abs(v), 1.0);
    direct *= f.grid().axis(0).spacing;
    EXPECT_NEAR(alpha_norm(f, {1.0}), direct, 1e-12);
  }
}

}  // namespace
}  // namespace asymlp

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


#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "asymlp/error.hpp"
#include "asymlp/examples.hpp"
#include "asymlp/nets.hpp"
#include "support/corpus.hpp"

namespace asymlp {
namespace {

using corpus::from_spec;

TEST(NetsTest, GreedyAssignsWithinRadius) {
  const auto fam = from_spec("u:k=1..32,p=1");
  const EpsNet net = greedy_net(fam, 0.5);
  ASSERT_EQ(net.assignment.size(), fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) {
    EXPECT_LT(net.assigned_distance[i], 0.5);
    EXPECT_EQ(net.centers[net.assignment[i]],
              fam.members[net.center_members[net.assignment[i]]]);
  }
  EXPECT_EQ(net.center_members.front(), 0u);
  EXPECT_TRUE(std::is_sorted(net.center_members.begin(), net.center_members.end()));
  EXPECT_TRUE(verify_covering(fam, net).pass);
}

TEST(NetsTest, PairwiseMatrixIsSymmetric) {
  const auto fam = from_spec("h:k=1..6,kgrid=8");
  const auto d = pairwise_distances(fam);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    EXPECT_EQ(d(i, i), 0.0);
    for (std::size_t j = 0; j < fam.size(); ++j) EXPECT_EQ(d(i, j), d(j, i));
  }
  EXPECT_DOUBLE_EQ(d(0, 3), 0.5);
}

TEST(NetsTest, VerifyCoveringCatchesBadNets) {
  const auto fam = from_spec("g:k=1..4");
  EpsNet net = greedy_net(fam, 0.5);
  ASSERT_EQ(net.size(), 4u);
  net.assignment[2] = 0;  // g_3 is far from g_1
  const auto c = verify_covering(fam, net);
  EXPECT_FALSE(c.pass);
  EXPECT_EQ(c.worst_member, 2u);
  EXPECT_LT(c.worst_slack, 0.0);
  net.assignment[2] = 17;
  EXPECT_THROW(verify_covering(fam, net), Error);
  net.assignment.pop_back();
  EXPECT_THROW(verify_covering(fam, net), Error);
}

TEST(NetsTest, LpMetricNet) {
  const auto fam = from_spec("f:k=1..8,p=1");
  const EpsNet net = greedy_net(fam, 0.5, Metric::kLp);
  // L^1 distances between the bumps are |j - k|; clamped ones are all 1.
  EXPECT_EQ(net.size(), 8u);
  EXPECT_EQ(greedy_net(fam, 0.5).size(), 8u);
  EXPECT_EQ(greedy_net(fam, 1.5, Metric::kLp).size(), 4u);
  EXPECT_EQ(greedy_net(fam, 1.5).size(), 1u);
  EXPECT_TRUE(verify_covering(fam, net).pass);
}

TEST(NetsTest, CoveringProfiles) {
  const auto u = from_spec("u:k=1..128,p=1");
  const std::size_t sizes[] = {8, 64, 128};
  const auto pu = covering_profile(u, 0.5, sizes);
  EXPECT_EQ(pu[1], pu[2]);
  const auto g = from_spec("g:k=1..20");
  const std::size_t gs[] = {1, 5, 20};
  EXPECT_EQ(covering_profile(g, 0.5, gs), std::vector<std::size_t>({1, 5, 20}));
  const std::size_t too_many[] = {21};
  EXPECT_THROW(covering_profile(g, 0.5, too_many), Error);
}

TEST(NetsTest, TruncationLiftOnEscapingSpike) {
  const auto fam = from_spec("u:k=1..64,p=1");
  for (double eta : {0.5, 0.25}) {
    const EpsNet net = truncation_lift_net(fam, eta);
    ASSERT_TRUE(net.truncation_level.has_value());
    EXPECT_TRUE(verify_covering(fam, net).pass);
    EXPECT_LT(net.max_assigned_distance, eta);
    EXPECT_LT(*net.max_chain_bound, eta);
  }
}

TEST(NetsTest, TruncationLiftReportsLevelOffender) {
  const auto fam = from_spec("f:k=1..100,p=1");
  try {
    truncation_lift_net(fam, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kConditionFailure);
    EXPECT_NE(std::string(e.what()).find("member"), std::string::npos);
  }
}

TEST(NetsTest, RejectsBadRadius) {
  const auto fam = from_spec("g:k=1..3");
  EXPECT_THROW(greedy_net(fam, 0.0), Error);
  EXPECT_THROW(truncation_lift_net(fam, -1.0), Error);
}

}  // namespace
}  // namespace asymlp

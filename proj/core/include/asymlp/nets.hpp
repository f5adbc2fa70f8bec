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

#ifndef ASYMLP_NETS_HPP
#define ASYMLP_NETS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "asymlp/criteria.hpp"
#include "asymlp/family.hpp"

namespace asymlp {

enum class Metric { kAlpha, kLp };

const char* to_string(Metric m) noexcept;

/// Distance between two members in the chosen metric.
double member_distance(const GridFunction& f, const GridFunction& g,
                       const NormParams& params, Metric metric);

/// Row-major symmetric matrix of pairwise distances.
struct DistanceMatrix {
  std::size_t n = 0;
  std::vector<double> d;

  double operator()(std::size_t i, std::size_t j) const { return d[i * n + j]; }
};

DistanceMatrix pairwise_distances(const FamilySpec& family,
                                  Metric metric = Metric::kAlpha);

/// Member-centred balls of radius `radius` covering a family. Centers are
/// stored as functions; `center_members` names the member each one came
/// from (for truncation-lift nets the center is that member truncated).
struct EpsNet {
  double radius = 0.0;
  Metric metric = Metric::kAlpha;
  double p = 1.0;
  std::vector<std::size_t> center_members;
  std::vector<GridFunction> centers;
  std::vector<std::size_t> assignment;        // member -> center slot
  std::vector<double> assigned_distance;      // member -> distance
  double max_assigned_distance = 0.0;

  // Truncation-lift diagnostics.
  std::optional<double> truncation_level;
  std::optional<double> max_chain_bound;  // max of d(f, T_M f) + d_p(T_M f, c)

  std::size_t size() const noexcept { return centers.size(); }
};

/// Picks the lowest-index uncovered member as a new center until every
/// member lies at distance < eps from some center.
EpsNet greedy_net(const FamilySpec& family, double eps,
                  Metric metric = Metric::kAlpha);

struct CoveringCheck {
  bool pass = false;
  double worst_slack = 0.0;  // radius - largest recomputed distance
  std::size_t worst_member = 0;
};

/// Recomputes every assigned distance from scratch.
CoveringCheck verify_covering(const FamilySpec& family, const EpsNet& net);

/// Greedy net sizes over the first K members for each K.
std::vector<std::size_t> covering_profile(const FamilySpec& family,
                                          double eps,
                                          std::span<const std::size_t> sizes);

/// Truncation pipeline: level M with |{|f| > M}| < (eta/2)^p, truncate at M,
/// greedy eta/2-net in L^p, re-verified as an eta-net in the alpha metric.
/// Throws kConditionFailure when no such M is found.
EpsNet truncation_lift_net(const FamilySpec& family, double eta,
                           const ScanOptions& options = {});

}  // namespace asymlp

#endif  // ASYMLP_NETS_HPP

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

#include "asymlp/nets.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "asymlp/error.hpp"
#include "asymlp/operators.hpp"
#include "asymlp/parallel.hpp"

namespace asymlp {

const char* to_string(Metric m) noexcept {
  return m == Metric::kAlpha ? "alpha" : "lp";
}

double member_distance(const GridFunction& f, const GridFunction& g,
                       const NormParams& params, Metric metric) {
  return metric == Metric::kAlpha ? alpha_distance(f, g, params)
                                  : lp_distance(f, g, params);
}

DistanceMatrix pairwise_distances(const FamilySpec& family, Metric metric) {
  family.validate();
  const std::size_t n = family.size();
  DistanceMatrix m{n, std::vector<double>(n * n, 0.0)};
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<double> d(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k) {
    const auto [i, j] = pairs[k];
    d[k] = member_distance(family.members[i], family.members[j],
                           family.params, metric);
  });
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [i, j] = pairs[k];
    m.d[i * n + j] = m.d[j * n + i] = d[k];
  }
  return m;
}

EpsNet greedy_net(const FamilySpec& family, double eps, Metric metric) {
  if (!(eps > 0.0)) fail(ErrorKind::kInvalidArgument, "eps must be > 0");
  family.validate();
  const std::size_t n = family.size();
  EpsNet net;
  net.radius = eps;
  net.metric = metric;
  net.p = family.params.p;
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  net.assignment.assign(n, kUnassigned);
  net.assigned_distance.assign(n, 0.0);
  for (std::size_t c = 0; c < n; ++c) {
    if (net.assignment[c] != kUnassigned) continue;
    const std::size_t slot = net.centers.size();
    net.center_members.push_back(c);
    net.centers.push_back(family.members[c]);
    net.assignment[c] = slot;
    std::vector<std::size_t> open;
    for (std::size_t i = c + 1; i < n; ++i)
      if (net.assignment[i] == kUnassigned) open.push_back(i);
    std::vector<double> d(open.size());
    parallel_for(open.size(), [&](std::size_t k) {
      d[k] = member_distance(family.members[c], family.members[open[k]],
                             family.params, metric);
    });
    for (std::size_t k = 0; k < open.size(); ++k) {
      if (d[k] < eps) {
        net.assignment[open[k]] = slot;
        net.assigned_distance[open[k]] = d[k];
      }
    }
  }
  net.max_assigned_distance = *std::max_element(net.assigned_distance.begin(),
                                                 net.assigned_distance.end());
  return net;
}

CoveringCheck verify_covering(const FamilySpec& family, const EpsNet& net) {
  const std::size_t n = family.size();
  if (net.assignment.size() != n)
    fail(ErrorKind::kInvalidArgument,
         "net assignment does not match the family size");
  for (std::size_t i = 0; i < n; ++i)
    if (net.assignment[i] >= net.centers.size()) {
      std::ostringstream os;
      os << "member " << i << " is assigned to missing center "
         << net.assignment[i];
      fail(ErrorKind::kInvalidArgument, os.str());
    }
  NormParams params = family.params;
  params.p = net.p;
  std::vector<double> d(n);
  parallel_for(n, [&](std::size_t i) {
    d[i] = member_distance(family.members[i], net.centers[net.assignment[i]],
                           params, net.metric);
  });
  CoveringCheck out;
  for (std::size_t i = 1; i < n; ++i)
    if (d[i] > d[out.worst_member]) out.worst_member = i;
  out.worst_slack = net.radius - d[out.worst_member];
  out.pass = std::all_of(d.begin(), d.end(),
                         [&](double x) { return x < net.radius; });
  return out;
}

std::vector<std::size_t> covering_profile(const FamilySpec& family,
                                          double eps,
                                          std::span<const std::size_t> sizes) {
  // Greedy selection scans members in index order, so the net over a prefix
  // is the full net restricted to centers inside that prefix.
  std::size_t largest = 0;
  for (std::size_t k : sizes) largest = std::max(largest, k);
  if (largest > family.size())
    fail(ErrorKind::kInvalidArgument,
         "covering profile asks for more members than the family has");
  const EpsNet net = greedy_net(family.prefix(largest), eps);
  std::vector<std::size_t> out;
  for (std::size_t k : sizes)
    out.push_back(static_cast<std::size_t>(std::count_if(
        net.center_members.begin(), net.center_members.end(),
        [k](std::size_t c) { return c < k; })));
  return out;
}

EpsNet truncation_lift_net(const FamilySpec& family, double eta,
                           const ScanOptions& options) {
  if (!(eta > 0.0)) fail(ErrorKind::kInvalidArgument, "eta must be > 0");
  family.validate();
  const double p = family.params.p;
  const double budget = std::pow(eta / 2.0, p);
  const ConditionEntry level = check_level(family, budget, options);
  if (!level.pass()) {
    std::ostringstream os;
    os << "family violates the level condition at (eta/2)^p = " << budget;
    if (level.offender)
      os << ": member " << level.offender->label << " has |{|f| > "
         << level.offender->at << "}| = " << level.offender->value;
    fail(ErrorKind::kConditionFailure, os.str());
  }
  const double m = *level.witness;

  FamilySpec truncated = family;
  parallel_for(family.size(), [&](std::size_t i) {
    truncated.members[i] = truncate(family.members[i], m);
  });
  const EpsNet lp_net = greedy_net(truncated, eta / 2.0, Metric::kLp);

  EpsNet net;
  net.radius = eta;
  net.metric = Metric::kAlpha;
  net.p = p;
  net.truncation_level = m;
  net.center_members = lp_net.center_members;
  net.centers = lp_net.centers;
  net.assignment = lp_net.assignment;
  const std::size_t n = family.size();
  net.assigned_distance.resize(n);
  std::vector<double> chain(n);
  parallel_for(n, [&](std::size_t i) {
    const GridFunction& c = net.centers[net.assignment[i]];
    net.assigned_distance[i] = alpha_distance(family.members[i], c, family.params);
    chain[i] = alpha_distance(family.members[i], truncated.members[i],
                              family.params) +
               lp_net.assigned_distance[i];
  });
  net.max_assigned_distance =
      *std::max_element(net.assigned_distance.begin(), net.assigned_distance.end());
  net.max_chain_bound = *std::max_element(chain.begin(), chain.end());
  return net;
}

}  // namespace asymlp

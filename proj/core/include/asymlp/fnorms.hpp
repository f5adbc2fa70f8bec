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

#ifndef ASYMLP_FNORMS_HPP
#define ASYMLP_FNORMS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "asymlp/grid.hpp"
#include "asymlp/transform.hpp"

namespace asymlp {

struct NormParams {
  double p = 1.0;

  /// Throws unless 1 <= p < inf.
  void validate() const;
};

/// (integral of |f|^p)^(1/p); +inf when the tail integral diverges.
double lp_norm(const GridFunction& f, const NormParams& params);
/// integral of |f|^p, possibly divergent.
Integral lp_integral(const GridFunction& f, const NormParams& params);

/// integral of min(|f|, 1)^p. Throws kNotIntegrable for non-members.
double alpha_integral(const GridFunction& f, const NormParams& params);
/// ||f||_alpha = ||min(|f|, 1)||_p.
double alpha_norm(const GridFunction& f, const NormParams& params);

/// ||f - g||_alpha on the common refinement of both grids.
double alpha_distance(const GridFunction& f, const GridFunction& g,
                      const NormParams& params);
/// ||f - g||_alpha^p, without the final root.
double alpha_distance_pow(const GridFunction& f, const GridFunction& g,
                          const NormParams& params);
double lp_distance(const GridFunction& f, const GridFunction& g,
                   const NormParams& params);

/// True when the clamp integral of f is finite, i.e. f lies in the space.
bool is_member(const GridFunction& f, const NormParams& params);
void require_member(const GridFunction& f, const NormParams& params);

struct ConvergenceReport {
  std::vector<double> distances;  // d_k for the sequence in order
  double tol = 0.0;
  bool converged = false;         // d_K < tol
  bool monotone = true;           // d_k nonincreasing
  std::int64_t first_increase = -1;
};

/// Distances to `limit` along a finite sequence plus a final-term verdict.
/// Nothing is claimed about the limit beyond the last sampled term.
ConvergenceReport alpha_converges(std::span<const GridFunction> seq,
                                  const GridFunction& limit,
                                  const NormParams& params, double tol);

}  // namespace asymlp

#endif  // ASYMLP_FNORMS_HPP

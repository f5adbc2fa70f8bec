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

#ifndef ASYMLP_EXAMPLES_HPP
#define ASYMLP_EXAMPLES_HPP

#include <cstdint>

#include "asymlp/family.hpp"
#include "asymlp/grid.hpp"

namespace asymlp::examples {

/// k^(1/p) on [0,1].
GridFunction family_f(std::int64_t k, double p, double spacing = 1.0 / 16);

/// Indicator of [k, k+1].
GridFunction family_g(std::int64_t k, double spacing = 1.0 / 16);

/// sign(sin(2^k pi x)) on [0,1] with spacing 2^-k_grid; needs k_grid > k.
GridFunction rademacher(std::int64_t k, int k_grid);
GridFunction family_h(std::int64_t k, int k_grid);

/// The fixed bump 0.5 on [0,1) plus 0.25 on [1,1.5), spacing 1/4.
GridFunction default_phi();

/// phi + k^(1/p) on [k, k+1/k]; the grid is the common refinement.
GridFunction family_u(std::int64_t k, double p, const GridFunction& phi);

/// 1/x on [1/k, inf): cell averages of 1/x on [1/k, onset] and an exact
/// power-law tail beyond. Requires p > 1.
GridFunction family_v(std::int64_t k, double p, double spacing = 0x1p-16,
                      double onset = 1.0);

/// 1/x on (0, inf) on the same grid as family_v. The cell [0, h] holds 1/h,
/// a lower bound of 1/x there; only the clamped value min(|v|, 1) = 1 of that
/// cell enters distance computations.
GridFunction v_limit(double spacing = 0x1p-16, double onset = 1.0);

/// sin(x + a) on [0, length] sampled at cell midpoints, spacing length/n.
GridFunction sin_shift(double a, std::int64_t n,
                       double length = 3.141592653589793);

/// Builds the family named by a generator spec. Names: f, g, h, u, v, sin,
/// zero. The exponent p comes from the spec (key "p") or from `params`.
FamilySpec generate(const GeneratorSpec& spec, NormParams params);

}  // namespace asymlp::examples

#endif  // ASYMLP_EXAMPLES_HPP

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

#ifndef ASYMLP_RESAMPLE_HPP
#define ASYMLP_RESAMPLE_HPP

#include <cstdint>
#include <optional>
#include <span>

#include "asymlp/grid.hpp"

namespace asymlp {

/// h_a = factor_a * spacing and h_b = factor_b * spacing.
struct CommonSpacing {
  double spacing = 0.0;
  std::int64_t factor_a = 1;
  std::int64_t factor_b = 1;
};

/// Coarsest common refinement of two spacings, found by continued fractions
/// on h_a / h_b. Empty when the ratio is not a rational with numerator and
/// denominator below kMaxRefinement (to relative accuracy 1e-12).
std::optional<CommonSpacing> common_refinement(double h_a, double h_b);

inline constexpr std::int64_t kMaxRefinement = std::int64_t{1} << 20;

/// Same function on a grid whose spacing on axis j is divided by factors[j].
/// `spacing` gives the exact new spacings.
GridFunction refine(const GridFunction& f,
                    std::span<const std::int64_t> factors,
                    std::span<const double> spacing);

/// Same function on a larger box with the same spacing (zero fill). A side
/// carrying a power-law tail cannot move.
GridFunction embed(const GridFunction& f, std::span<const Interval> box);

/// Cell values of f on `box` (same spacing), zero tail: the grid part of
/// f * chi_box. The box may not reach past a power-law side of f.
GridFunction restrict_to_box(const GridFunction& f,
                             std::span<const Interval> box);

/// Shrinks the box to the hull of the nonzero cells. Functions with a
/// non-vanishing tail are returned unchanged.
GridFunction trim(const GridFunction& f);

enum class BinaryOp { kAdd, kSubtract };

/// Pointwise f op g on the common refinement of both grids. Power-law tails
/// must either vanish for one operand or share exponent, side and box edge;
/// the result tail is the magnitude |c_f op c_g|.
GridFunction combine(const GridFunction& f, const GridFunction& g,
                     BinaryOp op);

}  // namespace asymlp

#endif  // ASYMLP_RESAMPLE_HPP

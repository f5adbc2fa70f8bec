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

#ifndef ASYMLP_OPERATORS_HPP
#define ASYMLP_OPERATORS_HPP

#include <cstdint>
#include <span>

#include "asymlp/grid.hpp"

namespace asymlp {

/// tau_y f(x) = f(x + y). Each y_j must be a multiple of the spacing on axis
/// j; the box moves with the function so nothing is lost. Functions with a
/// non-vanishing tail are rejected.
GridFunction translate(const GridFunction& f, std::span<const double> y);
GridFunction translate(const GridFunction& f, double y);

/// Same as translate() but with the shift given in cells per axis.
GridFunction shift_cells(const GridFunction& f,
                         std::span<const std::int64_t> cells);

/// T_M(f) = max(-M, min(f, M)), applied cell-wise and to the tail cap.
GridFunction truncate(const GridFunction& f, double m);

/// min(|f|, 1).
GridFunction clamp_unit(const GridFunction& f);

GridFunction add(const GridFunction& f, const GridFunction& g);
GridFunction subtract(const GridFunction& f, const GridFunction& g);
GridFunction scale(const GridFunction& f, double lambda);

}  // namespace asymlp

#endif  // ASYMLP_OPERATORS_HPP

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

#ifndef ASYMLP_QUADRATURE_HPP
#define ASYMLP_QUADRATURE_HPP

#include "asymlp/grid.hpp"
#include "asymlp/measurable_set.hpp"
#include "asymlp/transform.hpp"

namespace asymlp {

/// Indicator of a bounded set, on the set's own grid, with a zero tail.
/// Interval parts that are not whole cells cannot be represented and are
/// rejected, as are unbounded sets.
GridFunction indicator(const MeasurableSet& set);

/// Integral over R^n of T(f). Exact up to round-off for piecewise-constant
/// data: the grid part is (sum of T(value) * cells) * h^n, the tail part is
/// closed form. Divergent tail integrals are reported, not thrown.
Integral integrate_transformed(const GridFunction& f, const Transform& t);

/// Integral of T(f) over {x : |x| > radius} (Euclidean norm).
Integral integrate_outside_ball(const GridFunction& f, const Transform& t,
                                double radius);

/// Integral of T(f) over a box (which may extend beyond the grid).
Integral integrate_on_box(const GridFunction& f, const Transform& t,
                          std::span<const Interval> box);

/// |{x : |f(x)| > m}|, strict inequality.
double superlevel_measure(const GridFunction& f, double m);

/// The set {x : |f(x)| > m} itself.
MeasurableSet superlevel_set(const GridFunction& f, double m);

/// Area of [x0, x1] x [y0, y1] intersected with the closed disk of the given
/// radius centred at the origin.
double rect_disk_area(double x0, double x1, double y0, double y1,
                      double radius);

}  // namespace asymlp

#endif  // ASYMLP_QUADRATURE_HPP

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

#include "asymlp/examples.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "asymlp/error.hpp"
#include "asymlp/operators.hpp"

namespace asymlp::examples {
namespace {

void require_index(std::int64_t k) {
  if (k < 1) fail(ErrorKind::kInvalidArgument, "family index k must be >= 1");
}

GridFunction interval_constant(double lo, double hi, double spacing,
                               double value) {
  const Interval box[1] = {{lo, hi}};
  return GridFunction::constant(Grid::from_box(box, spacing), value);
}

// Average of 1/x over [a, b] for 0 < a < b.
double mean_reciprocal(double a, double b) { return std::log(b / a) / (b - a); }

}  // namespace

GridFunction family_f(std::int64_t k, double p, double spacing) {
  require_index(k);
  return interval_constant(0.0, 1.0, spacing,
                           std::pow(static_cast<double>(k), 1.0 / p));
}

GridFunction family_g(std::int64_t k, double spacing) {
  require_index(k);
  const auto x = static_cast<double>(k);
  return interval_constant(x, x + 1.0, spacing, 1.0);
}

GridFunction rademacher(std::int64_t k, int k_grid) {
  if (k < 0) fail(ErrorKind::kInvalidArgument, "Rademacher index must be >= 0");
  if (k_grid < k + 1 || k_grid > 40) {
    std::ostringstream os;
    os << "Rademacher r_" << k << " needs grid exponent k_grid >= " << k + 1
       << " (got " << k_grid << ")";
    fail(ErrorKind::kInvalidArgument, os.str());
  }
  const std::int64_t block = std::int64_t{1} << (k_grid - k);
  const std::int64_t blocks = std::int64_t{1} << k;
  RunBuilder b;
  for (std::int64_t j = 0; j < blocks; ++j)
    b.append(block, j % 2 == 0 ? 1.0 : -1.0);
  Grid grid({{std::ldexp(1.0, -k_grid), 0, block * blocks}});
  return GridFunction(std::move(grid), std::move(b).take());
}

GridFunction family_h(std::int64_t k, int k_grid) {
  require_index(k);
  return rademacher(k, k_grid);
}

GridFunction default_phi() {
  const double values[] = {0.5, 0.5, 0.5, 0.5, 0.25, 0.25};
  const Interval box[1] = {{0.0, 1.5}};
  return GridFunction::from_values(Grid::from_box(box, 0.25), values);
}

GridFunction family_u(std::int64_t k, double p, const GridFunction& phi) {
  require_index(k);
  const auto x = static_cast<double>(k);
  const double h = 1.0 / x;
  const Grid grid({{h, k * k, 1}});
  const GridFunction bump = GridFunction::constant(grid, std::pow(x, 1.0 / p));
  return add(phi, bump);
}

GridFunction family_v(std::int64_t k, double p, double spacing,
                      double onset) {
  require_index(k);
  if (!(p > 1.0))
    fail(ErrorKind::kInvalidArgument,
         "the 1/x family needs p > 1 (its L^p norm is infinite otherwise)");
  const double start = 1.0 / static_cast<double>(k);
  if (start > onset)
    fail(ErrorKind::kInvalidArgument, "1/k must not exceed the tail onset");
  const Interval box[1] = {{-onset, onset}};
  Grid grid = Grid::from_box(box, spacing);
  const Axis& a = grid.axis(0);
  RunBuilder b;
  for (std::int64_t i = 0; i < a.count; ++i) {
    const double x0 = a.cell_lo(i);
    const double x1 = a.cell_hi(i);
    if (x1 <= start * (1.0 + 1e-12)) {
      b.append(1, 0.0);
    } else if (x0 < start * (1.0 - 1e-12)) {
      b.append(1, std::log(x1 / start) / spacing);
    } else {
      b.append(1, mean_reciprocal(x0, x1));
    }
  }
  return GridFunction(std::move(grid), std::move(b).take(),
                      TailSpec::power_law(1.0, 1.0, onset, TailSide::kRight));
}

GridFunction v_limit(double spacing, double onset) {
  const Interval box[1] = {{-onset, onset}};
  Grid grid = Grid::from_box(box, spacing);
  const Axis& a = grid.axis(0);
  RunBuilder b;
  for (std::int64_t i = 0; i < a.count; ++i) {
    const double x0 = a.cell_lo(i);
    const double x1 = a.cell_hi(i);
    if (x1 <= 0.0) {
      b.append(1, 0.0);
    } else if (x0 <= 0.0) {
      b.append(1, 1.0 / x1);
    } else {
      b.append(1, mean_reciprocal(x0, x1));
    }
  }
  return GridFunction(std::move(grid), std::move(b).take(),
                      TailSpec::power_law(1.0, 1.0, onset, TailSide::kRight));
}

GridFunction sin_shift(double a, std::int64_t n, double length) {
  if (n < 1 || !(length > 0.0))
    fail(ErrorKind::kInvalidArgument, "sin family needs n >= 1 and length > 0");
  const double h = length / static_cast<double>(n);
  std::vector<double> values(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i)
    values[static_cast<std::size_t>(i)] =
        std::sin((static_cast<double>(i) + 0.5) * h + a);
  return GridFunction::from_values(Grid({{h, 0, n}}), values);
}

FamilySpec generate(const GeneratorSpec& spec, NormParams params) {
  if (spec.params.count("p")) params.p = spec.params.at("p");
  params.validate();
  const double p = params.p;
  std::vector<GridFunction> members;
  std::vector<std::int64_t> labels;
  const GridFunction phi = default_phi();
  const int k_grid =
      static_cast<int>(spec.param_or("kgrid", static_cast<double>(spec.k_last + 1)));
  for (std::int64_t k = spec.k_first; k <= spec.k_last; ++k) {
    if (spec.name == "f") {
      members.push_back(family_f(k, p, spec.param_or("h", 1.0 / 16)));
    } else if (spec.name == "g") {
      members.push_back(family_g(k, spec.param_or("h", 1.0 / 16)));
    } else if (spec.name == "h") {
      members.push_back(family_h(k, k_grid));
    } else if (spec.name == "u") {
      members.push_back(family_u(k, p, phi));
    } else if (spec.name == "v") {
      members.push_back(family_v(k, p, spec.param_or("h", 0x1p-16),
                                 spec.param_or("L", 1.0)));
    } else if (spec.name == "sin") {
      const auto n = static_cast<std::int64_t>(spec.param_or("n", 256));
      const double len = spec.param_or("len", std::numbers::pi);
      members.push_back(sin_shift(static_cast<double>(k) * len / n, n, len));
    } else if (spec.name == "zero") {
      const Interval box[1] = {{0.0, 1.0}};
      members.push_back(GridFunction::zero(
          Grid::from_box(box, spec.param_or("h", 0.25))));
    } else {
      fail(ErrorKind::kParse, "unknown generator family '" + spec.name +
                                  "' (expected f, g, h, u, v, sin or zero)");
    }
    labels.push_back(k);
  }
  FamilySpec out;
  out.members = std::move(members);
  out.labels = std::move(labels);
  out.params = params;
  out.generator = spec;
  return out;
}

}  // namespace asymlp::examples

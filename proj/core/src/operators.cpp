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

#include "asymlp/operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "asymlp/error.hpp"
#include "asymlp/resample.hpp"

namespace asymlp {
namespace {

template <class Fn>
GridFunction map_values(const GridFunction& f, Fn fn, TailSpec tail) {
  RunBuilder b;
  for (const Run& r : f.runs()) b.append(r.length(), fn(r.value));
  return GridFunction(f.grid(), std::move(b).take(), tail);
}

}  // namespace

GridFunction shift_cells(const GridFunction& f,
                         std::span<const std::int64_t> cells) {
  if (cells.size() != f.dim())
    fail(ErrorKind::kInvalidArgument, "shift dimension mismatch");
  const bool moves = std::any_of(cells.begin(), cells.end(),
                                 [](std::int64_t m) { return m != 0; });
  if (!moves) return f;
  if (!f.tail().vanishes())
    fail(ErrorKind::kInvalidArgument,
         "cannot translate a function with a power-law tail");
  std::vector<Axis> axes(f.grid().axes().begin(), f.grid().axes().end());
  for (std::size_t j = 0; j < axes.size(); ++j) axes[j].offset -= cells[j];
  return GridFunction(Grid(std::move(axes)),
                      std::vector<Run>(f.runs().begin(), f.runs().end()));
}

GridFunction translate(const GridFunction& f, std::span<const double> y) {
  if (y.size() != f.dim())
    fail(ErrorKind::kInvalidArgument, "shift dimension mismatch");
  std::vector<std::int64_t> cells(y.size());
  for (std::size_t j = 0; j < y.size(); ++j) {
    const double h = f.grid().axis(j).spacing;
    const double q = y[j] / h;
    const double n = std::nearbyint(q);
    if (!std::isfinite(q) ||
        std::abs(q - n) > kAlignTolerance * std::max(1.0, std::abs(q))) {
      std::ostringstream os;
      os << "shift " << y[j] << " is not a multiple of the spacing " << h
         << "; nearest aligned shift is " << n * h;
      fail(ErrorKind::kInvalidArgument, os.str());
    }
    cells[j] = static_cast<std::int64_t>(n);
  }
  return shift_cells(f, cells);
}

GridFunction translate(const GridFunction& f, double y) {
  return translate(f, std::span<const double>(&y, 1));
}

GridFunction truncate(const GridFunction& f, double m) {
  if (!(m >= 0.0) || std::isnan(m))
    fail(ErrorKind::kInvalidArgument, "truncation level must be >= 0");
  TailSpec tail = f.tail();
  if (!tail.vanishes()) tail.cap = std::min(tail.cap, m);
  if (tail.vanishes()) tail = TailSpec::zero();
  return map_values(
      f, [m](double v) { return std::clamp(v, -m, m); }, tail);
}

GridFunction clamp_unit(const GridFunction& f) {
  TailSpec tail = f.tail();
  if (!tail.vanishes()) tail.cap = std::min(tail.cap, 1.0);
  return map_values(
      f, [](double v) { return std::min(std::abs(v), 1.0); }, tail);
}

GridFunction add(const GridFunction& f, const GridFunction& g) {
  return combine(f, g, BinaryOp::kAdd);
}

GridFunction subtract(const GridFunction& f, const GridFunction& g) {
  return combine(f, g, BinaryOp::kSubtract);
}

GridFunction scale(const GridFunction& f, double lambda) {
  if (!std::isfinite(lambda))
    fail(ErrorKind::kInvalidArgument, "scale factor must be finite");
  TailSpec tail = f.tail();
  if (lambda == 0.0 || tail.vanishes()) {
    tail = TailSpec::zero();
  } else {
    tail.coefficient *= std::abs(lambda);
    tail.cap *= std::abs(lambda);
  }
  return map_values(
      f, [lambda](double v) { return lambda * v; }, tail);
}

}  // namespace asymlp

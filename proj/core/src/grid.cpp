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

#include "asymlp/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "asymlp/error.hpp"

namespace asymlp {

std::int64_t snap_to_lattice(double x, double h, const char* what) {
  const double q = x / h;
  const double n = std::nearbyint(q);
  if (!std::isfinite(q) ||
      std::abs(q - n) > kAlignTolerance * std::max(1.0, std::abs(q))) {
    std::ostringstream os;
    os << what << " " << x << " is not a multiple of the spacing " << h;
    fail(ErrorKind::kInvalidArgument, os.str());
  }
  return static_cast<std::int64_t>(n);
}

Grid::Grid(std::vector<Axis> axes) : axes_(std::move(axes)) {
  if (axes_.empty() || axes_.size() > kMaxDim)
    fail(ErrorKind::kInvalidArgument, "grid dimension must be 1 or 2");
  for (const Axis& a : axes_) {
    if (!(std::isfinite(a.spacing) && a.spacing > 0.0))
      fail(ErrorKind::kInvalidArgument, "grid spacing must be finite and > 0");
    if (a.count < 0)
      fail(ErrorKind::kInvalidArgument, "grid cell count must be >= 0");
  }
}

Grid Grid::from_box(std::span<const Interval> box,
                    std::span<const double> spacing) {
  if (box.size() != spacing.size())
    fail(ErrorKind::kInvalidArgument, "box and spacing dimensions differ");
  std::vector<Axis> axes;
  for (std::size_t j = 0; j < box.size(); ++j) {
    const double h = spacing[j];
    if (!(std::isfinite(h) && h > 0.0))
      fail(ErrorKind::kInvalidArgument, "grid spacing must be finite and > 0");
    if (!(box[j].hi >= box[j].lo))
      fail(ErrorKind::kInvalidArgument, "box interval has hi < lo");
    const std::int64_t lo = snap_to_lattice(box[j].lo, h, "box endpoint");
    const std::int64_t hi = snap_to_lattice(box[j].hi, h, "box endpoint");
    axes.push_back({h, lo, hi - lo});
  }
  return Grid(std::move(axes));
}

Grid Grid::from_box(std::span<const Interval> box, double spacing) {
  std::vector<double> h(box.size(), spacing);
  return from_box(box, h);
}

std::int64_t Grid::cell_count() const noexcept {
  std::int64_t n = axes_.empty() ? 0 : 1;
  for (const Axis& a : axes_) n *= a.count;
  return n;
}

double Grid::cell_volume() const noexcept {
  double v = 1.0;
  for (const Axis& a : axes_) v *= a.spacing;
  return v;
}

Box Grid::box() const {
  Box b;
  for (const Axis& a : axes_) b.push_back({a.lo(), a.hi()});
  return b;
}

double Grid::min_spacing() const noexcept {
  double h = HUGE_VAL;
  for (const Axis& a : axes_) h = std::min(h, a.spacing);
  return h;
}

double Grid::radius() const noexcept {
  double s = 0.0;
  for (const Axis& a : axes_) {
    const double m = std::max(std::abs(a.lo()), std::abs(a.hi()));
    s += m * m;
  }
  return std::sqrt(s);
}

void Grid::unflatten(std::int64_t flat, std::int64_t* idx) const noexcept {
  for (std::size_t j = axes_.size(); j-- > 0;) {
    idx[j] = flat % axes_[j].count;
    flat /= axes_[j].count;
  }
}

std::int64_t Grid::flatten(const std::int64_t* idx) const noexcept {
  std::int64_t flat = 0;
  for (std::size_t j = 0; j < axes_.size(); ++j)
    flat = flat * axes_[j].count + idx[j];
  return flat;
}

void RunBuilder::append(std::int64_t length, double value) {
  if (length <= 0) return;
  if (value == 0.0) value = 0.0;  // drop the sign of -0.0
  if (!runs_.empty() && runs_.back().value == value) {
    runs_.back().end += length;
  } else {
    runs_.push_back({end_, end_ + length, value});
  }
  end_ += length;
}

GridFunction::GridFunction(Grid grid, std::vector<Run> runs, TailSpec tail)
    : grid_(std::move(grid)), tail_(tail) {
  if (grid_.dim() == 0)
    fail(ErrorKind::kInvalidArgument, "grid function needs a grid");
  RunBuilder b;
  for (const Run& r : runs) {
    if (r.begin != b.size() || r.end < r.begin)
      fail(ErrorKind::kInvalidArgument, "runs must be contiguous from cell 0");
    if (!std::isfinite(r.value))
      fail(ErrorKind::kInvalidArgument, "grid function values must be finite");
    b.append(r.length(), r.value);
  }
  if (b.size() != grid_.cell_count()) {
    std::ostringstream os;
    os << "grid has " << grid_.cell_count() << " cells but " << b.size()
       << " values were given";
    fail(ErrorKind::kInvalidArgument, os.str());
  }
  runs_ = std::move(b).take();

  tail_.validate();
  if (tail_.kind == TailKind::kPowerLaw) {
    if (grid_.dim() != 1)
      fail(ErrorKind::kInvalidArgument,
           "power-law tails are one-dimensional only");
    const Axis& a = grid_.axis(0);
    const double slack = kAlignTolerance * a.spacing;
    if (a.lo() > -tail_.onset + slack || a.hi() < tail_.onset - slack)
      fail(ErrorKind::kInvalidArgument,
           "power-law tail needs the box to contain [-L, L]");
  }
}

GridFunction GridFunction::from_values(Grid grid,
                                       std::span<const double> values,
                                       TailSpec tail) {
  if (static_cast<std::int64_t>(values.size()) != grid.cell_count()) {
    std::ostringstream os;
    os << "grid has " << grid.cell_count() << " cells but " << values.size()
       << " values were given";
    fail(ErrorKind::kInvalidArgument, os.str());
  }
  RunBuilder b;
  for (double v : values) {
    if (!std::isfinite(v))
      fail(ErrorKind::kInvalidArgument, "grid function values must be finite");
    b.append(1, v);
  }
  return GridFunction(std::move(grid), std::move(b).take(), tail);
}

GridFunction GridFunction::constant(Grid grid, double value, TailSpec tail) {
  RunBuilder b;
  b.append(grid.cell_count(), value);
  return GridFunction(std::move(grid), std::move(b).take(), tail);
}

double GridFunction::cell_value(std::int64_t flat) const {
  if (flat < 0 || flat >= grid_.cell_count())
    fail(ErrorKind::kInvalidArgument, "cell index out of range");
  auto it = std::upper_bound(
      runs_.begin(), runs_.end(), flat,
      [](std::int64_t i, const Run& r) { return i < r.begin; });
  return std::prev(it)->value;
}

std::vector<double> GridFunction::dense_values() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(grid_.cell_count()));
  for (const Run& r : runs_) out.insert(out.end(), r.length(), r.value);
  return out;
}

double GridFunction::operator()(std::span<const double> x) const {
  if (x.size() != dim())
    fail(ErrorKind::kInvalidArgument, "point dimension mismatch");
  std::int64_t idx[Grid::kMaxDim];
  bool inside = true;
  for (std::size_t j = 0; j < dim(); ++j) {
    const Axis& a = grid_.axis(j);
    const auto cell = static_cast<std::int64_t>(std::floor(x[j] / a.spacing));
    idx[j] = cell - a.offset;
    if (idx[j] < 0 || idx[j] >= a.count) inside = false;
  }
  if (inside) return cell_value(grid_.flatten(idx));
  if (dim() == 1) {
    const Axis& a = grid_.axis(0);
    if (x[0] >= a.hi() && tail_.right()) return tail_.value_at(x[0]);
    if (x[0] < a.lo() && tail_.left()) return tail_.value_at(-x[0]);
  }
  return 0.0;
}

double GridFunction::sup_abs() const noexcept {
  double s = 0.0;
  for (const Run& r : runs_) s = std::max(s, std::abs(r.value));
  if (dim() == 1) {
    const Axis& a = grid_.axis(0);
    if (tail_.right()) s = std::max(s, tail_.value_at(a.hi()));
    if (tail_.left()) s = std::max(s, tail_.value_at(-a.lo()));
  }
  return s;
}

bool GridFunction::grid_support_empty() const noexcept {
  return std::all_of(runs_.begin(), runs_.end(),
                     [](const Run& r) { return r.value == 0.0; });
}

}  // namespace asymlp

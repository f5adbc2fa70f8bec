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

#ifndef ASYMLP_GRID_HPP
#define ASYMLP_GRID_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "asymlp/tail.hpp"

namespace asymlp {

/// Closed real interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const noexcept { return hi > lo ? hi - lo : 0.0; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

using Box = std::vector<Interval>;

/// One axis of a uniform grid. Cells are [(offset+i)h, (offset+i+1)h] for
/// 0 <= i < count, i.e. every grid is anchored to the lattice hZ.
struct Axis {
  double spacing = 1.0;
  std::int64_t offset = 0;
  std::int64_t count = 0;

  double lo() const noexcept { return static_cast<double>(offset) * spacing; }
  double hi() const noexcept {
    return static_cast<double>(offset + count) * spacing;
  }
  double cell_lo(std::int64_t i) const noexcept {
    return static_cast<double>(offset + i) * spacing;
  }
  double cell_hi(std::int64_t i) const noexcept {
    return static_cast<double>(offset + i + 1) * spacing;
  }

  friend bool operator==(const Axis&, const Axis&) = default;
};

/// Tolerance (relative, in units of the spacing) used to decide whether a
/// coordinate lies on a grid lattice.
inline constexpr double kAlignTolerance = 1e-9;

/// Returns n with |n*h - x| small, or throws kInvalidArgument naming `what`.
std::int64_t snap_to_lattice(double x, double h, const char* what);

/// Uniform tensor grid in one or two dimensions. Flat cell indices are
/// row-major with the last axis fastest.
class Grid {
 public:
  static constexpr std::size_t kMaxDim = 2;

  Grid() = default;
  explicit Grid(std::vector<Axis> axes);

  /// Builds the grid covering `box` with the given per-axis spacing. Box
  /// endpoints must lie on the lattice spacing*Z.
  static Grid from_box(std::span<const Interval> box,
                       std::span<const double> spacing);
  static Grid from_box(std::span<const Interval> box, double spacing);

  std::size_t dim() const noexcept { return axes_.size(); }
  const Axis& axis(std::size_t j) const { return axes_.at(j); }
  std::span<const Axis> axes() const noexcept { return axes_; }

  std::int64_t cell_count() const noexcept;
  double cell_volume() const noexcept;
  Box box() const;
  double min_spacing() const noexcept;
  /// Largest |x| over the closed box (Euclidean).
  double radius() const noexcept;

  /// Per-axis cell coordinates of a flat index.
  void unflatten(std::int64_t flat, std::int64_t* idx) const noexcept;
  std::int64_t flatten(const std::int64_t* idx) const noexcept;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::vector<Axis> axes_;
};

/// Maximal run of equal cell values over flat indices [begin, end).
struct Run {
  std::int64_t begin = 0;
  std::int64_t end = 0;
  double value = 0.0;

  std::int64_t length() const noexcept { return end - begin; }
  friend bool operator==(const Run&, const Run&) = default;
};

/// A measurable function on R^n that is piecewise constant on a uniform grid
/// over a box and described by a TailSpec outside it.
///
/// Cell values are stored run-length encoded, so functions whose support is
/// spread over a huge box (e.g. a bump sliding off to infinity) stay cheap.
/// Runs are canonical: contiguous, non-empty, adjacent runs differ, and
/// -0.0 is normalised to +0.0. Instances are immutable.
class GridFunction {
 public:
  GridFunction() = default;
  GridFunction(Grid grid, std::vector<Run> runs, TailSpec tail = {});

  static GridFunction from_values(Grid grid, std::span<const double> values,
                                  TailSpec tail = {});
  static GridFunction constant(Grid grid, double value, TailSpec tail = {});
  static GridFunction zero(Grid grid) { return constant(std::move(grid), 0.0); }

  const Grid& grid() const noexcept { return grid_; }
  const TailSpec& tail() const noexcept { return tail_; }
  std::span<const Run> runs() const noexcept { return runs_; }
  std::size_t dim() const noexcept { return grid_.dim(); }

  double cell_value(std::int64_t flat) const;
  std::vector<double> dense_values() const;

  /// Point evaluation (cell value inside the box, tail outside). Points on a
  /// shared cell face resolve to the upper cell.
  double operator()(std::span<const double> x) const;
  double operator()(double x) const { return (*this)(std::span(&x, 1)); }

  /// Essential supremum of |f| (tail included).
  double sup_abs() const noexcept;

  /// True when every cell value is zero.
  bool grid_support_empty() const noexcept;

  friend bool operator==(const GridFunction&, const GridFunction&) = default;

 private:
  Grid grid_;
  std::vector<Run> runs_;
  TailSpec tail_;
};

/// Appends runs while keeping the canonical form.
class RunBuilder {
 public:
  void append(std::int64_t length, double value);
  std::int64_t size() const noexcept { return end_; }
  std::vector<Run> take() && { return std::move(runs_); }

 private:
  std::vector<Run> runs_;
  std::int64_t end_ = 0;
};

}  // namespace asymlp

#endif  // ASYMLP_GRID_HPP

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

#ifndef ASYMLP_MEASURABLE_SET_HPP
#define ASYMLP_MEASURABLE_SET_HPP

#include <cstdint>
#include <vector>

#include "asymlp/grid.hpp"

namespace asymlp {

/// Half-open range of flat cell indices.
struct CellRange {
  std::int64_t begin = 0;
  std::int64_t end = 0;
  friend bool operator==(const CellRange&, const CellRange&) = default;
};

/// A finite union of grid cells plus (one-dimensional only) a finite union of
/// intervals that are not whole cells: pieces of a power-law tail region or
/// sub-cell collars. The interval part may be unbounded.
///
/// Normal form: cell ranges sorted, disjoint and non-adjacent; intervals
/// sorted, disjoint and disjoint from the marked cells.
class MeasurableSet {
 public:
  MeasurableSet() = default;
  explicit MeasurableSet(Grid grid, std::vector<CellRange> cells = {},
                         std::vector<Interval> extra = {});

  static MeasurableSet from_mask(Grid grid, const std::vector<bool>& mask);
  /// One-dimensional set given by a union of intervals; whole cells are
  /// recognised and moved into the cell part.
  static MeasurableSet from_intervals(Grid grid, std::vector<Interval> parts);

  const Grid& grid() const noexcept { return grid_; }
  const std::vector<CellRange>& cells() const noexcept { return cells_; }
  const std::vector<Interval>& extra() const noexcept { return extra_; }

  std::int64_t cell_count() const noexcept;
  /// (number of cells) * h^n + total interval length; +inf when unbounded.
  double measure() const noexcept;
  bool bounded() const noexcept;
  bool empty() const noexcept { return cells_.empty() && extra_.empty(); }
  bool contains_cell(std::int64_t flat) const noexcept;

  MeasurableSet united(const MeasurableSet& other) const;

  friend bool operator==(const MeasurableSet&, const MeasurableSet&) = default;

 private:
  Grid grid_;
  std::vector<CellRange> cells_;
  std::vector<Interval> extra_;
};

}  // namespace asymlp

#endif  // ASYMLP_MEASURABLE_SET_HPP

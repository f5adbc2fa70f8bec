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

#include "asymlp/measurable_set.hpp"

#include <algorithm>
#include <cmath>

#include "asymlp/error.hpp"

namespace asymlp {
namespace {

std::vector<CellRange> merge_ranges(std::vector<CellRange> r) {
  std::sort(r.begin(), r.end(), [](const CellRange& a, const CellRange& b) {
    return a.begin < b.begin;
  });
  std::vector<CellRange> out;
  for (const CellRange& c : r) {
    if (c.end <= c.begin) continue;
    if (!out.empty() && c.begin <= out.back().end) {
      out.back().end = std::max(out.back().end, c.end);
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::vector<Interval> merge_intervals(std::vector<Interval> v) {
  std::sort(v.begin(), v.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> out;
  for (const Interval& i : v) {
    if (!(i.hi > i.lo)) continue;
    if (!out.empty() && i.lo <= out.back().hi) {
      out.back().hi = std::max(out.back().hi, i.hi);
    } else {
      out.push_back(i);
    }
  }
  return out;
}

// Moves whole cells covered by the intervals into `cells`.
void promote_whole_cells(const Axis& a, const std::vector<Interval>& extra,
                         std::vector<CellRange>& cells) {
  for (const Interval& i : extra) {
    const double u = std::ceil(i.lo / a.spacing - kAlignTolerance);
    const double v = std::floor(i.hi / a.spacing + kAlignTolerance);
    const double lo = std::max(u, static_cast<double>(a.offset));
    const double hi = std::min(v, static_cast<double>(a.offset + a.count));
    if (hi > lo)
      cells.push_back({static_cast<std::int64_t>(lo) - a.offset,
                       static_cast<std::int64_t>(hi) - a.offset});
  }
}

std::vector<Interval> subtract_cells(const Axis& a,
                                     const std::vector<Interval>& extra,
                                     const std::vector<CellRange>& cells) {
  std::vector<Interval> out;
  for (Interval piece : extra) {
    for (const CellRange& c : cells) {
      const double clo = a.cell_lo(c.begin);
      const double chi = a.cell_lo(c.end);
      if (chi <= piece.lo || clo >= piece.hi) continue;
      if (clo > piece.lo) out.push_back({piece.lo, clo});
      piece.lo = chi;
      if (!(piece.hi > piece.lo)) break;
    }
    if (piece.hi > piece.lo) out.push_back(piece);
  }
  // Round-off slivers left next to whole cells carry no measure.
  const double sliver = kAlignTolerance * a.spacing;
  std::erase_if(out, [&](const Interval& i) { return i.length() <= sliver; });
  return out;
}

}  // namespace

MeasurableSet::MeasurableSet(Grid grid, std::vector<CellRange> cells,
                             std::vector<Interval> extra)
    : grid_(std::move(grid)) {
  const std::int64_t n = grid_.cell_count();
  for (const CellRange& c : cells) {
    if (c.begin < 0 || c.end > n || c.end < c.begin)
      fail(ErrorKind::kInvalidArgument, "cell range outside the grid");
  }
  if (!extra.empty() && grid_.dim() != 1)
    fail(ErrorKind::kInvalidArgument,
         "non-cell pieces are supported in one dimension only");
  extra = merge_intervals(std::move(extra));
  if (!extra.empty()) promote_whole_cells(grid_.axis(0), extra, cells);
  cells_ = merge_ranges(std::move(cells));
  if (!extra.empty()) extra_ = subtract_cells(grid_.axis(0), extra, cells_);
}

MeasurableSet MeasurableSet::from_mask(Grid grid,
                                       const std::vector<bool>& mask) {
  if (static_cast<std::int64_t>(mask.size()) != grid.cell_count())
    fail(ErrorKind::kInvalidArgument, "mask size differs from cell count");
  std::vector<CellRange> cells;
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(mask.size()); ++i) {
    if (!mask[static_cast<std::size_t>(i)]) continue;
    if (!cells.empty() && cells.back().end == i) {
      ++cells.back().end;
    } else {
      cells.push_back({i, i + 1});
    }
  }
  return MeasurableSet(std::move(grid), std::move(cells));
}

MeasurableSet MeasurableSet::from_intervals(Grid grid,
                                            std::vector<Interval> parts) {
  return MeasurableSet(std::move(grid), {}, std::move(parts));
}

std::int64_t MeasurableSet::cell_count() const noexcept {
  std::int64_t n = 0;
  for (const CellRange& c : cells_) n += c.end - c.begin;
  return n;
}

double MeasurableSet::measure() const noexcept {
  double m = static_cast<double>(cell_count()) * grid_.cell_volume();
  for (const Interval& i : extra_) m += i.hi - i.lo;
  return m;
}

bool MeasurableSet::bounded() const noexcept {
  return std::all_of(extra_.begin(), extra_.end(), [](const Interval& i) {
    return std::isfinite(i.lo) && std::isfinite(i.hi);
  });
}

bool MeasurableSet::contains_cell(std::int64_t flat) const noexcept {
  auto it = std::upper_bound(
      cells_.begin(), cells_.end(), flat,
      [](std::int64_t i, const CellRange& c) { return i < c.begin; });
  return it != cells_.begin() && flat < std::prev(it)->end;
}

MeasurableSet MeasurableSet::united(const MeasurableSet& other) const {
  if (!(grid_ == other.grid_))
    fail(ErrorKind::kIncompatible, "union of sets on different grids");
  std::vector<CellRange> cells = cells_;
  cells.insert(cells.end(), other.cells_.begin(), other.cells_.end());
  std::vector<Interval> extra = extra_;
  extra.insert(extra.end(), other.extra_.begin(), other.extra_.end());
  return MeasurableSet(grid_, std::move(cells), std::move(extra));
}

}  // namespace asymlp

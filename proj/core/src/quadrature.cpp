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

#include "asymlp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "asymlp/error.hpp"

namespace asymlp {
namespace {

// Neumaier-compensated sum.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      c_ += (sum_ - t) + x;
    } else {
      c_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + c_; }

 private:
  double sum_ = 0.0;
  double c_ = 0.0;
};

double overlap(double a0, double a1, double b0, double b1) noexcept {
  const double lo = std::max(a0, b0);
  const double hi = std::min(a1, b1);
  return hi > lo ? hi - lo : 0.0;
}

// Visits every run as a set of axis-aligned rectangles (one per grid row in
// 2D): fn(value, cells, lo, hi) with lo/hi the per-axis extents.
template <typename Fn>
void for_each_block(const GridFunction& f, Fn&& fn) {
  const Grid& g = f.grid();
  if (g.dim() == 1) {
    const Axis& a = g.axis(0);
    for (const Run& r : f.runs()) {
      const double lo[Grid::kMaxDim] = {a.cell_lo(r.begin), 0.0};
      const double hi[Grid::kMaxDim] = {a.cell_lo(r.end), 0.0};
      fn(r.value, r.length(), lo, hi);
    }
    return;
  }
  const Axis& ax = g.axis(0);
  const Axis& ay = g.axis(1);
  for (const Run& r : f.runs()) {
    std::int64_t pos = r.begin;
    while (pos < r.end) {
      const std::int64_t row = pos / ay.count;
      const std::int64_t col = pos % ay.count;
      const std::int64_t stop = std::min(r.end, (row + 1) * ay.count);
      const std::int64_t ncol = stop - pos;
      const double lo[2] = {ax.cell_lo(row), ay.cell_lo(col)};
      const double hi[2] = {ax.cell_hi(row), ay.cell_lo(col + ncol)};
      fn(r.value, ncol, lo, hi);
      pos = stop;
    }
  }
}

Integral tail_outside(const GridFunction& f, const Transform& t,
                      double radius) {
  if (f.dim() != 1) return {};
  const TailSpec& tail = f.tail();
  const Axis& a = f.grid().axis(0);
  Integral out;
  if (tail.right())
    out = out + tail_segment_integral(tail, t, std::max(a.hi(), radius),
                                      HUGE_VAL);
  if (tail.left())
    out = out + tail_segment_integral(tail, t, std::max(-a.lo(), radius),
                                      HUGE_VAL);
  return out;
}

}  // namespace

Transform Transform::power(double p) {
  if (!(std::isfinite(p) && p > 0.0))
    fail(ErrorKind::kInvalidArgument, "power transform needs p > 0");
  return {Kind::kPower, p};
}

Transform Transform::clamp_power(double p) {
  if (!(std::isfinite(p) && p > 0.0))
    fail(ErrorKind::kInvalidArgument, "clamp-power transform needs p > 0");
  return {Kind::kClampPower, p};
}

Transform Transform::threshold(double m) {
  if (!(std::isfinite(m) && m >= 0.0))
    fail(ErrorKind::kInvalidArgument, "threshold transform needs m >= 0");
  return {Kind::kThreshold, m};
}

std::string Transform::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::kPower: os << "|t|^" << parameter_; break;
    case Kind::kClampPower: os << "min(|t|,1)^" << parameter_; break;
    case Kind::kThreshold: os << "[|t| > " << parameter_ << "]"; break;
  }
  return os.str();
}

GridFunction indicator(const MeasurableSet& set) {
  if (!set.bounded())
    fail(ErrorKind::kInvalidArgument,
         "indicator of an unbounded set is not representable");
  const Grid& g = set.grid();
  if (set.extra().empty()) {
    RunBuilder b;
    std::int64_t pos = 0;
    for (const CellRange& c : set.cells()) {
      b.append(c.begin - pos, 0.0);
      b.append(c.end - c.begin, 1.0);
      pos = c.end;
    }
    b.append(g.cell_count() - pos, 0.0);
    return GridFunction(g, std::move(b).take());
  }
  // Grid-aligned pieces outside the box: widen the box to hold them.
  const Axis& a = g.axis(0);
  std::int64_t lo = a.offset;
  std::int64_t hi = a.offset + a.count;
  std::vector<CellRange> lattice;
  for (const CellRange& c : set.cells())
    lattice.push_back({a.offset + c.begin, a.offset + c.end});
  for (const Interval& i : set.extra()) {
    std::int64_t u = 0, v = 0;
    try {
      u = snap_to_lattice(i.lo, a.spacing, "set endpoint");
      v = snap_to_lattice(i.hi, a.spacing, "set endpoint");
    } catch (const Error&) {
      fail(ErrorKind::kInvalidArgument,
           "indicator needs a grid-aligned set");
    }
    lattice.push_back({u, v});
    lo = std::min(lo, u);
    hi = std::max(hi, v);
  }
  std::sort(lattice.begin(), lattice.end(),
            [](const CellRange& x, const CellRange& y) {
              return x.begin < y.begin;
            });
  RunBuilder b;
  std::int64_t pos = lo;
  for (const CellRange& c : lattice) {
    b.append(c.begin - pos, 0.0);
    const std::int64_t from = std::max(pos, c.begin);
    b.append(c.end - from, 1.0);
    pos = std::max(pos, c.end);
  }
  b.append(hi - pos, 0.0);
  return GridFunction(Grid({{a.spacing, lo, hi - lo}}), std::move(b).take());
}

Integral integrate_transformed(const GridFunction& f, const Transform& t) {
  CompensatedSum acc;
  for (const Run& r : f.runs()) {
    const double tv = t(r.value);
    if (tv != 0.0) acc.add(tv * static_cast<double>(r.length()));
  }
  Integral out{acc.value() * f.grid().cell_volume(), {}};
  return out + tail_outside(f, t, 0.0);
}

Integral integrate_outside_ball(const GridFunction& f, const Transform& t,
                                double radius) {
  CompensatedSum acc;
  const double r = std::max(radius, 0.0);
  for_each_block(f, [&](double value, std::int64_t cells, const double* lo,
                        const double* hi) {
    const double tv = t(value);
    if (tv == 0.0) return;
    double full = static_cast<double>(cells);
    double inside = 0.0;
    if (f.dim() == 1) {
      full *= f.grid().axis(0).spacing;
      inside = overlap(lo[0], hi[0], -r, r);
    } else {
      full *= f.grid().cell_volume();
      inside = rect_disk_area(lo[0], hi[0], lo[1], hi[1], r);
    }
    if (full > inside) acc.add(tv * (full - inside));
  });
  Integral out{acc.value(), {}};
  return out + tail_outside(f, t, r);
}

Integral integrate_on_box(const GridFunction& f, const Transform& t,
                          std::span<const Interval> box) {
  if (box.size() != f.dim())
    fail(ErrorKind::kInvalidArgument, "box dimension mismatch");
  CompensatedSum acc;
  for_each_block(f, [&](double value, std::int64_t, const double* lo,
                        const double* hi) {
    const double tv = t(value);
    if (tv == 0.0) return;
    double w = 1.0;
    for (std::size_t j = 0; j < box.size() && w > 0.0; ++j)
      w *= overlap(lo[j], hi[j], box[j].lo, box[j].hi);
    if (w > 0.0) acc.add(tv * w);
  });
  Integral out{acc.value(), {}};
  if (f.dim() == 1) {
    const TailSpec& tail = f.tail();
    const Axis& a = f.grid().axis(0);
    if (tail.right() && box[0].hi > a.hi())
      out = out + tail_segment_integral(tail, t, std::max(a.hi(), box[0].lo),
                                        box[0].hi);
    if (tail.left() && box[0].lo < a.lo())
      out = out + tail_segment_integral(tail, t,
                                        std::max(-a.lo(), -box[0].hi),
                                        -box[0].lo);
  }
  return out;
}

double superlevel_measure(const GridFunction& f, double m) {
  return integrate_transformed(f, Transform::threshold(m)).value;
}

MeasurableSet superlevel_set(const GridFunction& f, double m) {
  if (!(m >= 0.0))
    fail(ErrorKind::kInvalidArgument, "superlevel threshold must be >= 0");
  std::vector<CellRange> cells;
  for (const Run& r : f.runs())
    if (std::abs(r.value) > m) cells.push_back({r.begin, r.end});
  std::vector<Interval> extra;
  const TailSpec& tail = f.tail();
  if (f.dim() == 1 && !tail.vanishes() && tail.cap > m) {
    const Axis& a = f.grid().axis(0);
    const double rm =
        m > 0.0 ? std::pow(tail.coefficient / m, 1.0 / tail.exponent)
                : HUGE_VAL;
    if (tail.right() && rm > a.hi()) extra.push_back({a.hi(), rm});
    if (tail.left() && rm > -a.lo()) extra.push_back({-rm, a.lo()});
  }
  return MeasurableSet(f.grid(), std::move(cells), std::move(extra));
}

double rect_disk_area(double x0, double x1, double y0, double y1,
                      double radius) {
  if (!(radius > 0.0) || !(y1 > y0)) return 0.0;
  const double r2 = radius * radius;
  const double xa = std::max(x0, -radius);
  const double xb = std::min(x1, radius);
  if (!(xb > xa)) return 0.0;

  std::vector<double> pts{xa, xb};
  for (double y : {y0, y1}) {
    if (std::abs(y) < radius) {
      const double s = std::sqrt(r2 - y * y);
      for (double x : {-s, s})
        if (x > xa && x < xb) pts.push_back(x);
    }
  }
  std::sort(pts.begin(), pts.end());

  // Antiderivative of sqrt(R^2 - x^2).
  auto F = [&](double x) {
    const double u = std::clamp(x / radius, -1.0, 1.0);
    return 0.5 * (x * std::sqrt(std::max(0.0, r2 - x * x)) +
                  r2 * std::asin(u));
  };

  double area = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double a = pts[i];
    const double b = pts[i + 1];
    if (!(b > a)) continue;
    const double m = 0.5 * (a + b);
    const double sm = std::sqrt(std::max(0.0, r2 - m * m));
    const bool top_is_arc = sm < y1;
    const bool bottom_is_arc = -sm > y0;
    const double top = top_is_arc ? sm : y1;
    const double bottom = bottom_is_arc ? -sm : y0;
    if (top <= bottom) continue;
    const double arcs = (top_is_arc ? 1.0 : 0.0) + (bottom_is_arc ? 1.0 : 0.0);
    const double flat = (top_is_arc ? 0.0 : y1) - (bottom_is_arc ? 0.0 : y0);
    area += arcs * (F(b) - F(a)) + flat * (b - a);
  }
  return area;
}

}  // namespace asymlp

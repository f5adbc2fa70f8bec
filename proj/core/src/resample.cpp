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

#include "asymlp/resample.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "asymlp/error.hpp"

namespace asymlp {
namespace {

std::vector<double> dense_row(const std::vector<double>& dense,
                              std::int64_t row, std::int64_t ncols) {
  const auto first = dense.begin() + row * ncols;
  return {first, first + ncols};
}

void check_tail_sides(const GridFunction& f, std::int64_t lo, std::int64_t hi) {
  const TailSpec& t = f.tail();
  if (t.vanishes()) return;
  const Axis& a = f.grid().axis(0);
  if ((t.right() && hi != a.offset + a.count) || (t.left() && lo != a.offset))
    fail(ErrorKind::kIncompatible,
         "cannot move the box edge on a power-law tail side");
}

double apply(BinaryOp op, double a, double b) noexcept {
  return op == BinaryOp::kAdd ? a + b : a - b;
}

TailSpec combine_tails(const TailSpec& a, const TailSpec& b, BinaryOp op) {
  const bool ta = !a.vanishes();
  const bool tb = !b.vanishes();
  if (!ta && !tb) return TailSpec::zero();
  if (ta != tb) return ta ? a : b;
  if (a.exponent != b.exponent || a.side != b.side)
    fail(ErrorKind::kIncompatible,
         "power-law tails differ in exponent or side: " + a.describe() +
             " vs " + b.describe());
  TailSpec out = a;
  out.onset = std::max(a.onset, b.onset);
  out.coefficient = std::abs(apply(op, a.coefficient, b.coefficient));
  if (std::isinf(a.cap) && std::isinf(b.cap)) {
    out.cap = a.cap;
  } else if (a.cap == b.cap && a.coefficient == b.coefficient) {
    out.cap = std::abs(apply(op, a.cap, b.cap));
  } else {
    fail(ErrorKind::kIncompatible,
         "capped power-law tails only combine when identical");
  }
  if (out.vanishes()) return TailSpec::zero();
  return out;
}

}  // namespace

std::optional<CommonSpacing> common_refinement(double h_a, double h_b) {
  if (!(h_a > 0.0 && h_b > 0.0) || !std::isfinite(h_a) || !std::isfinite(h_b))
    return std::nullopt;
  if (h_a == h_b) return CommonSpacing{h_a, 1, 1};
  const double r = h_a / h_b;
  // Convergents p/q of the continued fraction of r.
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double x = r;
  for (int it = 0; it < 64; ++it) {
    const double a = std::floor(x);
    if (a > static_cast<double>(kMaxRefinement)) break;
    const auto ai = static_cast<std::int64_t>(a);
    const std::int64_t p2 = ai * p1 + p0;
    const std::int64_t q2 = ai * q1 + q0;
    if (p2 > kMaxRefinement || q2 > kMaxRefinement) break;
    if (p2 > 0 &&
        std::abs(r - static_cast<double>(p2) / static_cast<double>(q2)) <=
            1e-12 * r) {
      const double h = q2 == 1 ? h_b : h_a / static_cast<double>(p2);
      return CommonSpacing{h, p2, q2};
    }
    const double frac = x - a;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
  }
  return std::nullopt;
}

GridFunction refine(const GridFunction& f,
                    std::span<const std::int64_t> factors,
                    std::span<const double> spacing) {
  const Grid& g = f.grid();
  if (factors.size() != g.dim() || spacing.size() != g.dim())
    fail(ErrorKind::kInvalidArgument, "refinement dimension mismatch");
  std::vector<Axis> axes;
  for (std::size_t j = 0; j < g.dim(); ++j) {
    if (factors[j] < 1)
      fail(ErrorKind::kInvalidArgument, "refinement factor must be >= 1");
    const Axis& a = g.axis(j);
    axes.push_back({spacing[j], a.offset * factors[j], a.count * factors[j]});
  }
  Grid fine(std::move(axes));
  if (g.dim() == 1) {
    std::vector<Run> runs;
    runs.reserve(f.runs().size());
    for (const Run& r : f.runs())
      runs.push_back({r.begin * factors[0], r.end * factors[0], r.value});
    return GridFunction(std::move(fine), std::move(runs), f.tail());
  }
  const std::vector<double> dense = f.dense_values();
  const std::int64_t ncols = g.axis(1).count;
  RunBuilder b;
  for (std::int64_t row = 0; row < g.axis(0).count; ++row) {
    const std::vector<double> vals = dense_row(dense, row, ncols);
    for (std::int64_t rep = 0; rep < factors[0]; ++rep)
      for (double v : vals) b.append(factors[1], v);
  }
  return GridFunction(std::move(fine), std::move(b).take(), f.tail());
}

GridFunction embed(const GridFunction& f, std::span<const Interval> box) {
  const Grid& g = f.grid();
  if (box.size() != g.dim())
    fail(ErrorKind::kInvalidArgument, "embedding box dimension mismatch");
  std::vector<Axis> axes;
  for (std::size_t j = 0; j < g.dim(); ++j) {
    const Axis& a = g.axis(j);
    const std::int64_t lo = snap_to_lattice(box[j].lo, a.spacing, "box edge");
    const std::int64_t hi = snap_to_lattice(box[j].hi, a.spacing, "box edge");
    if (g.cell_count() > 0 && (lo > a.offset || hi < a.offset + a.count))
      fail(ErrorKind::kInvalidArgument,
           "embedding box must contain the function's box");
    axes.push_back({a.spacing, lo, hi - lo});
  }
  if (g.dim() == 1) check_tail_sides(f, axes[0].offset,
                                     axes[0].offset + axes[0].count);
  Grid big(std::move(axes));
  RunBuilder b;
  if (g.cell_count() == 0) {
    b.append(big.cell_count(), 0.0);
    return GridFunction(std::move(big), std::move(b).take(), f.tail());
  }
  if (g.dim() == 1) {
    b.append(g.axis(0).offset - big.axis(0).offset, 0.0);
    for (const Run& r : f.runs()) b.append(r.length(), r.value);
    b.append(big.axis(0).offset + big.axis(0).count -
                 (g.axis(0).offset + g.axis(0).count),
             0.0);
    return GridFunction(std::move(big), std::move(b).take(), f.tail());
  }
  const std::vector<double> dense = f.dense_values();
  const Axis& ox = g.axis(0);
  const Axis& oy = g.axis(1);
  const Axis& nx = big.axis(0);
  const Axis& ny = big.axis(1);
  for (std::int64_t row = 0; row < nx.count; ++row) {
    const std::int64_t old_row = nx.offset + row - ox.offset;
    if (old_row < 0 || old_row >= ox.count) {
      b.append(ny.count, 0.0);
      continue;
    }
    b.append(oy.offset - ny.offset, 0.0);
    for (double v : dense_row(dense, old_row, oy.count)) b.append(1, v);
    b.append(ny.offset + ny.count - (oy.offset + oy.count), 0.0);
  }
  return GridFunction(std::move(big), std::move(b).take(), f.tail());
}

GridFunction restrict_to_box(const GridFunction& f,
                             std::span<const Interval> box) {
  const Grid& g = f.grid();
  if (box.size() != g.dim())
    fail(ErrorKind::kInvalidArgument, "restriction box dimension mismatch");
  std::vector<Axis> axes;
  for (std::size_t j = 0; j < g.dim(); ++j) {
    const Axis& a = g.axis(j);
    const std::int64_t lo = snap_to_lattice(box[j].lo, a.spacing, "box edge");
    const std::int64_t hi = snap_to_lattice(box[j].hi, a.spacing, "box edge");
    axes.push_back({a.spacing, lo, std::max<std::int64_t>(0, hi - lo)});
  }
  if (g.dim() == 1) {
    const TailSpec& t = f.tail();
    const Axis& a = g.axis(0);
    if ((t.right() && axes[0].offset + axes[0].count > a.offset + a.count) ||
        (t.left() && axes[0].offset < a.offset))
      fail(ErrorKind::kInvalidArgument,
           "restriction box reaches into a power-law tail");
  }
  Grid small(std::move(axes));
  RunBuilder b;
  if (g.dim() == 1) {
    const Axis& a = g.axis(0);
    const Axis& s = small.axis(0);
    const std::int64_t lo = s.offset;
    const std::int64_t hi = s.offset + s.count;
    std::int64_t pos = lo;
    for (const Run& r : f.runs()) {
      const std::int64_t rb = std::max(lo, a.offset + r.begin);
      const std::int64_t re = std::min(hi, a.offset + r.end);
      if (re <= rb) continue;
      b.append(rb - pos, 0.0);
      b.append(re - rb, r.value);
      pos = re;
    }
    b.append(hi - pos, 0.0);
    return GridFunction(std::move(small), std::move(b).take());
  }
  const Axis& sx = small.axis(0);
  const Axis& sy = small.axis(1);
  std::int64_t idx[2];
  for (std::int64_t i = 0; i < sx.count; ++i) {
    for (std::int64_t j = 0; j < sy.count; ++j) {
      idx[0] = sx.offset + i - g.axis(0).offset;
      idx[1] = sy.offset + j - g.axis(1).offset;
      const bool inside = idx[0] >= 0 && idx[0] < g.axis(0).count &&
                          idx[1] >= 0 && idx[1] < g.axis(1).count;
      b.append(1, inside ? f.cell_value(g.flatten(idx)) : 0.0);
    }
  }
  return GridFunction(std::move(small), std::move(b).take());
}

GridFunction trim(const GridFunction& f) {
  if (!f.tail().vanishes()) return f;
  const Grid& g = f.grid();
  if (g.dim() == 1) {
    const auto runs = f.runs();
    auto first = std::find_if(runs.begin(), runs.end(),
                              [](const Run& r) { return r.value != 0.0; });
    const Axis& a = g.axis(0);
    if (first == runs.end())
      return GridFunction(Grid({{a.spacing, a.offset, 0}}), {});
    auto last = std::find_if(runs.rbegin(), runs.rend(),
                             [](const Run& r) { return r.value != 0.0; });
    const std::int64_t lo = first->begin;
    std::vector<Run> out;
    for (auto it = first; it != last.base(); ++it)
      out.push_back({it->begin - lo, it->end - lo, it->value});
    return GridFunction(
        Grid({{a.spacing, a.offset + lo, last->end - lo}}), std::move(out));
  }
  const Axis& ax = g.axis(0);
  const Axis& ay = g.axis(1);
  std::int64_t r0 = ax.count, r1 = -1, c0 = ay.count, c1 = -1;
  for (const Run& r : f.runs()) {
    if (r.value == 0.0) continue;
    for (std::int64_t i = r.begin; i < r.end; ++i) {
      const std::int64_t row = i / ay.count;
      const std::int64_t col = i % ay.count;
      r0 = std::min(r0, row); r1 = std::max(r1, row);
      c0 = std::min(c0, col); c1 = std::max(c1, col);
    }
  }
  if (r1 < 0)
    return GridFunction(Grid({{ax.spacing, ax.offset, 0},
                              {ay.spacing, ay.offset, 0}}), {});
  const Interval box[2] = {{ax.cell_lo(r0), ax.cell_lo(r1 + 1)},
                           {ay.cell_lo(c0), ay.cell_lo(c1 + 1)}};
  return restrict_to_box(f, box);
}

GridFunction combine(const GridFunction& f, const GridFunction& g,
                     BinaryOp op) {
  if (f.dim() != g.dim())
    fail(ErrorKind::kIncompatible, "functions live in different dimensions");
  const std::size_t dim = f.dim();
  std::vector<std::int64_t> fa(dim), ga(dim);
  std::vector<double> spacing(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const double hf = f.grid().axis(j).spacing;
    const double hg = g.grid().axis(j).spacing;
    const auto cs = common_refinement(hf, hg);
    if (!cs) {
      std::ostringstream os;
      os << "grid spacings " << hf << " and " << hg
         << " are not commensurable";
      fail(ErrorKind::kIncompatible, os.str());
    }
    fa[j] = cs->factor_a;
    ga[j] = cs->factor_b;
    spacing[j] = cs->spacing;
  }
  const TailSpec tail = combine_tails(f.tail(), g.tail(), op);

  GridFunction F = f.tail().vanishes() && !g.tail().vanishes() ? trim(f) : f;
  GridFunction G = g.tail().vanishes() && !f.tail().vanishes() ? trim(g) : g;
  F = refine(F, fa, spacing);
  G = refine(G, ga, spacing);

  Box hull;
  for (std::size_t j = 0; j < dim; ++j) {
    std::int64_t lo = INT64_MAX, hi = INT64_MIN;
    for (const GridFunction* h : {&F, &G}) {
      if (h->grid().cell_count() == 0) continue;
      const Axis& a = h->grid().axis(j);
      lo = std::min(lo, a.offset);
      hi = std::max(hi, a.offset + a.count);
    }
    if (lo > hi) lo = hi = F.grid().axis(j).offset;
    hull.push_back({static_cast<double>(lo) * spacing[j],
                    static_cast<double>(hi) * spacing[j]});
  }
  F = embed(F, hull);
  G = embed(G, hull);

  RunBuilder b;
  const auto ra = F.runs();
  const auto rb = G.runs();
  std::size_t i = 0, k = 0;
  std::int64_t pos = 0;
  const std::int64_t n = F.grid().cell_count();
  while (pos < n) {
    const std::int64_t end = std::min(ra[i].end, rb[k].end);
    b.append(end - pos, apply(op, ra[i].value, rb[k].value));
    pos = end;
    if (ra[i].end == pos) ++i;
    if (rb[k].end == pos) ++k;
  }
  return GridFunction(F.grid(), std::move(b).take(), tail);
}

}  // namespace asymlp

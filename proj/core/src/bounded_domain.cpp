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

#include "asymlp/bounded_domain.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "asymlp/error.hpp"
#include "asymlp/nets.hpp"
#include "asymlp/operators.hpp"
#include "asymlp/parallel.hpp"
#include "asymlp/quadrature.hpp"
#include "asymlp/resample.hpp"

namespace asymlp {
namespace {

void require_bounded(const FamilySpec& family) {
  if (family.members.empty())
    fail(ErrorKind::kInvalidArgument, "nonempty family required");
  for (std::size_t i = 0; i < family.size(); ++i)
    if (!family.members[i].tail().vanishes()) {
      std::ostringstream os;
      os << "member " << family.label(i)
         << " has unbounded support; bounded-domain checks need zero tails";
      fail(ErrorKind::kInvalidArgument, os.str());
    }
}

double box_measure(std::span<const Interval> box) {
  double m = 1.0;
  for (const Interval& i : box) m *= i.length();
  return m;
}

struct MemberCertificate {
  MeasurableSet set;
  double measure = 0.0;
  std::optional<PairViolation> first_bad_pair;
  std::optional<PairViolation> violation;
};

// Largest cell offset d whose gap (d - 1) h is below delta.
std::int64_t window(double delta, double h) {
  const double q = delta / h;
  const double n = std::nearbyint(q);
  if (std::abs(q - n) <= kAlignTolerance * std::max(1.0, q))
    return static_cast<std::int64_t>(n);
  return static_cast<std::int64_t>(std::floor(q)) + 1;
}

MemberCertificate certify_1d(const GridFunction& f, double eps, double delta) {
  const Axis& a = f.grid().axis(0);
  const double h = a.spacing;
  const std::int64_t n = a.count;
  const std::vector<double> v = f.dense_values();
  const std::int64_t w = window(delta, h);
  auto bad = [&](std::int64_t i, std::int64_t j) {
    return std::abs(v[static_cast<std::size_t>(i)] -
                    v[static_cast<std::size_t>(j)]) >= eps;
  };

  // B_f meets cell i in [lo_i, left_end[i]) and [right_start[i], hi_i).
  std::vector<double> left_end(static_cast<std::size_t>(n));
  std::vector<double> right_start(static_cast<std::size_t>(n));
  MemberCertificate out;
  for (std::int64_t i = 0; i < n; ++i) {
    const auto s = static_cast<std::size_t>(i);
    const double lo = a.cell_lo(i);
    const double hi = a.cell_hi(i);
    left_end[s] = lo;
    right_start[s] = hi;
    for (std::int64_t d = 1; d <= w && i + d < n; ++d)
      if (bad(i, i + d)) {
        right_start[s] = std::max(lo, a.cell_lo(i + d) - delta);
        if (!out.first_bad_pair)
          out.first_bad_pair =
              PairViolation{0, 0, i, i + d, v[s], v[s + static_cast<std::size_t>(d)]};
        break;
      }
    for (std::int64_t d = 1; d <= w && i - d >= 0; ++d)
      if (bad(i - d, i)) {
        left_end[s] = std::min(hi, a.cell_hi(i - d) + delta);
        break;
      }
  }

  std::vector<Interval> parts;
  for (std::int64_t i = 0; i < n; ++i) {
    const auto s = static_cast<std::size_t>(i);
    const double lo = a.cell_lo(i);
    const double hi = a.cell_hi(i);
    if (left_end[s] > lo) parts.push_back({lo, left_end[s]});
    if (right_start[s] < hi) parts.push_back({right_start[s], hi});
  }
  out.set = MeasurableSet::from_intervals(f.grid(), std::move(parts));
  out.measure = out.set.measure();

  // Exhaustive re-verification: for every pair of cells within reach whose
  // values differ by >= eps, the parts of both cells outside B_f must be at
  // least delta apart.
  const double tol = kAlignTolerance * h;
  for (std::int64_t i = 0; i < n && !out.violation; ++i) {
    const auto s = static_cast<std::size_t>(i);
    const double sup_i = right_start[s];
    if (!(sup_i > left_end[s])) continue;
    for (std::int64_t d = 1; d <= w && i + d < n; ++d) {
      const auto t = s + static_cast<std::size_t>(d);
      if (!bad(i, i + d) || !(right_start[t] > left_end[t])) continue;
      if (left_end[t] - sup_i < delta - tol) {
        out.violation = PairViolation{0, 0, i, i + d, v[s], v[t]};
        break;
      }
    }
  }
  return out;
}

MemberCertificate certify_2d(const GridFunction& f, double eps, double delta) {
  const Grid& g = f.grid();
  const Axis& ax = g.axis(0);
  const Axis& ay = g.axis(1);
  if (delta < std::max(ax.spacing, ay.spacing) * (1.0 - kAlignTolerance))
    fail(ErrorKind::kInvalidArgument,
         "two-dimensional certificates need delta >= grid spacing");
  const std::vector<double> v = f.dense_values();
  const std::int64_t wx = window(delta, ax.spacing);
  const std::int64_t wy = window(delta, ay.spacing);
  std::vector<bool> mask(v.size(), false);
  MemberCertificate out;
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t i = 0; i < ax.count; ++i)
    for (std::int64_t j = 0; j < ay.count; ++j) {
      const std::int64_t a = i * ay.count + j;
      for (std::int64_t di = 0; di <= wx; ++di)
        for (std::int64_t dj = -wy; dj <= wy; ++dj) {
          if (di == 0 && dj <= 0) continue;
          const std::int64_t i2 = i + di;
          const std::int64_t j2 = j + dj;
          if (i2 >= ax.count || j2 < 0 || j2 >= ay.count) continue;
          const double gx = std::max<std::int64_t>(0, di - 1) * ax.spacing;
          const double gy =
              std::max<std::int64_t>(0, std::abs(dj) - 1) * ay.spacing;
          if (!(gx * gx + gy * gy < delta * delta)) continue;
          const std::int64_t b = i2 * ay.count + j2;
          const auto sa = static_cast<std::size_t>(a);
          const auto sb = static_cast<std::size_t>(b);
          if (std::abs(v[sa] - v[sb]) < eps) continue;
          mask[sa] = mask[sb] = true;
          pairs.emplace_back(a, b);
          if (!out.first_bad_pair)
            out.first_bad_pair = PairViolation{0, 0, a, b, v[sa], v[sb]};
        }
    }
  for (const auto& [a, b] : pairs) {
    const auto sa = static_cast<std::size_t>(a);
    const auto sb = static_cast<std::size_t>(b);
    if (!mask[sa] && !mask[sb]) {
      out.violation = PairViolation{0, 0, a, b, v[sa], v[sb]};
      break;
    }
  }
  out.set = MeasurableSet::from_mask(g, mask);
  out.measure = out.set.measure();
  return out;
}

ShiftLattice resolved(const FamilySpec& family, const ShiftLattice& lattice) {
  return {effective_shift_step(family, lattice), lattice.count};
}

}  // namespace

Box common_box(const FamilySpec& family) {
  Box box = family.members.front().grid().box();
  for (const GridFunction& f : family.members) {
    if (f.dim() != box.size())
      fail(ErrorKind::kIncompatible, "family members differ in dimension");
    const Box b = f.grid().box();
    for (std::size_t j = 0; j < box.size(); ++j) {
      box[j].lo = std::min(box[j].lo, b[j].lo);
      box[j].hi = std::max(box[j].hi, b[j].hi);
    }
  }
  return box;
}

const char* to_string(ImplicationStatus s) noexcept {
  switch (s) {
    case ImplicationStatus::kHolds: return "holds";
    case ImplicationStatus::kViolated: return "violated";
    case ImplicationStatus::kNotExercised: return "not-exercised";
  }
  return "?";
}

EquiboundedCertificate almost_equibounded_certificate(
    const FamilySpec& family, double eps, const ScanOptions& options) {
  require_bounded(family);
  EquiboundedCertificate out;
  out.check = check_level(family, eps, options);
  out.exceptional.budget = eps;
  if (!out.check.pass()) return out;
  const double m = *out.check.witness;
  out.level = m;
  out.pass = true;
  for (const GridFunction& f : family.members) {
    MeasurableSet s = superlevel_set(f, m);
    const double measure = s.measure();
    for (const Run& r : f.runs()) {
      if (std::abs(r.value) <= m) continue;
      for (std::int64_t i = r.begin; i < r.end; ++i)
        if (!s.contains_cell(i)) out.pass = false;
    }
    if (!(measure < eps)) out.pass = false;
    out.exceptional.sets.push_back(std::move(s));
    out.exceptional.measures.push_back(measure);
  }
  return out;
}

EquicontinuityCertificate almost_equicontinuity_certificate(
    const FamilySpec& family, double eps, double delta) {
  require_bounded(family);
  if (!(eps > 0.0) || !(delta > 0.0))
    fail(ErrorKind::kInvalidArgument, "eps and delta must be > 0");
  const Box e = common_box(family);
  const std::size_t n = family.size();
  std::vector<MemberCertificate> certs(n);
  parallel_for(n, [&](std::size_t i) {
    const GridFunction f = embed(family.members[i], e);
    certs[i] = f.dim() == 1 ? certify_1d(f, eps, delta)
                            : certify_2d(f, eps, delta);
  });
  EquicontinuityCertificate out;
  out.eps = eps;
  out.delta = delta;
  out.exceptional.budget = eps;
  out.pass = true;
  for (std::size_t i = 0; i < n; ++i) {
    MemberCertificate& c = certs[i];
    const bool ok = c.measure < eps && !c.violation;
    if (!ok && out.pass) {
      out.pass = false;
      out.offender = i;
      auto pair = c.violation ? c.violation : c.first_bad_pair;
      if (pair) {
        pair->member = i;
        pair->label = family.label(i);
        out.violation = pair;
      }
      std::ostringstream os;
      if (c.violation) {
        os << "member " << family.label(i)
           << " has a close pair outside B_f with values differing by >= eps";
      } else {
        os << "member " << family.label(i) << " needs |B_f| = " << c.measure
           << " >= eps = " << eps;
      }
      out.note = os.str();
    }
    out.exceptional.sets.push_back(std::move(c.set));
    out.exceptional.measures.push_back(c.measure);
  }
  return out;
}

MeasureConvergence convergence_in_measure(std::span<const GridFunction> seq,
                                          const GridFunction& limit,
                                          double eps, double tol) {
  if (seq.empty())
    fail(ErrorKind::kInvalidArgument, "nonempty sequence required");
  if (!limit.tail().vanishes())
    fail(ErrorKind::kInvalidArgument,
         "convergence in measure needs bounded support; use the alpha "
         "distance instead");
  for (const GridFunction& f : seq)
    if (!f.tail().vanishes())
      fail(ErrorKind::kInvalidArgument,
           "convergence in measure needs bounded support; use the alpha "
           "distance instead");
  MeasureConvergence out;
  out.tol = tol;
  out.measures.resize(seq.size());
  parallel_for(seq.size(), [&](std::size_t k) {
    out.measures[k] = superlevel_measure(subtract(seq[k], limit), eps);
  });
  out.converged = out.measures.back() < tol;
  return out;
}

double symmetric_difference_measure(std::span<const Interval> box,
                                    std::span<const double> y) {
  if (box.size() != y.size())
    fail(ErrorKind::kInvalidArgument, "shift dimension mismatch");
  double overlap = 1.0;
  for (std::size_t j = 0; j < box.size(); ++j)
    overlap *= std::max(0.0, box[j].length() - std::abs(y[j]));
  return 2.0 * (box_measure(box) - overlap);
}

CrosscheckReport corollary_crosscheck(const FamilySpec& family,
                                      std::span<const double> eps_list,
                                      std::span<const double> delta_grid,
                                      const ShiftLattice& lattice) {
  require_bounded(family);
  FamilySpec fam = family;
  fam.params.p = 1.0;
  fam.validate();
  std::vector<double> deltas(delta_grid.begin(), delta_grid.end());
  std::sort(deltas.begin(), deltas.end(), std::greater<>());

  CrosscheckReport out;
  out.e = common_box(fam);
  out.measure_e = box_measure(out.e);
  const std::size_t dim = out.e.size();
  const ShiftLattice lat = resolved(fam, lattice);

  auto best_delta = [&](double eps) -> std::optional<double> {
    for (double d : deltas) {
      if (dim == 2 && d < fam.members.front().grid().min_spacing()) continue;
      if (almost_equicontinuity_certificate(fam, eps, d).pass) return d;
    }
    return std::nullopt;
  };

  for (double eps : eps_list) {
    ContinuityToTranslation a;
    a.eps = eps;
    a.eps_tilde = eps / (4.0 + out.measure_e);
    a.delta = best_delta(a.eps_tilde);
    if (a.delta) {
      // r0: |E symmetric-difference (E - y)| < eps_tilde whenever |y| < r0.
      double lo = 0.0;
      double hi = HUGE_VAL;
      for (const Interval& i : out.e) hi = std::min(hi, i.length());
      auto sym = [&](double r) {
        std::vector<double> y(dim, r);
        return symmetric_difference_measure(out.e, y);
      };
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (sym(mid) < a.eps_tilde) lo = mid; else hi = mid;
      }
      a.r = std::min(*a.delta, lo);
      std::vector<double> y0(dim, 0.0);
      y0[0] = a.r;
      a.symmetric_difference = symmetric_difference_measure(out.e, y0);

      std::vector<std::vector<double>> shifts;
      for (std::int64_t i = -lat.count; i <= lat.count; ++i)
        for (std::int64_t j = (dim == 2 ? -lat.count : 0);
             j <= (dim == 2 ? lat.count : 0); ++j) {
          if (i == 0 && j == 0) continue;
          std::vector<double> y{static_cast<double>(i) * lat.step};
          if (dim == 2) y.push_back(static_cast<double>(j) * lat.step);
          double norm = 0.0;
          for (double c : y) norm += c * c;
          if (std::sqrt(norm) < a.r) shifts.push_back(std::move(y));
        }
      a.shifts_checked = static_cast<std::int64_t>(shifts.size());
      if (shifts.empty()) {
        a.status = ImplicationStatus::kNotExercised;
      } else {
        std::vector<double> worst(fam.size(), 0.0);
        parallel_for(fam.size(), [&](std::size_t m) {
          for (const auto& y : shifts)
            worst[m] = std::max(
                worst[m], translation_integral(fam.members[m], y, 1.0, true));
        });
        a.max_integral = *std::max_element(worst.begin(), worst.end());
        a.status = a.max_integral < eps ? ImplicationStatus::kHolds
                                        : ImplicationStatus::kViolated;
      }
    }
    out.continuity_to_translation.push_back(a);

    BoundednessToContinuity b;
    b.eps = eps;
    b.net_radius = eps * eps / 12.0;
    b.net_size = greedy_net(fam, b.net_radius).size();
    b.delta = best_delta(eps);
    b.status = b.delta ? ImplicationStatus::kHolds : ImplicationStatus::kViolated;
    out.boundedness_to_continuity.push_back(b);

    ScanOptions opts;
    opts.shifts = lattice;
    out.translation.push_back(check_translation(fam, eps, opts));
  }
  return out;
}

}  // namespace asymlp

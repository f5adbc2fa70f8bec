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

#include "asymlp/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "asymlp/error.hpp"
#include "asymlp/operators.hpp"
#include "asymlp/parallel.hpp"
#include "asymlp/quadrature.hpp"
#include "asymlp/resample.hpp"

namespace asymlp {
namespace {

using MemberValues = std::vector<double>;

std::size_t horizon_count(const FamilySpec& family) {
  return (family.size() + 1) / 2;
}

double min_spacing(const FamilySpec& family) {
  double h = HUGE_VAL;
  for (const GridFunction& f : family.members)
    h = std::min(h, f.grid().min_spacing());
  return h;
}

MemberValues evaluate(const FamilySpec& family,
                      const std::function<double(const GridFunction&)>& fn) {
  MemberValues out(family.size());
  parallel_for(family.size(),
               [&](std::size_t i) { out[i] = fn(family.members[i]); });
  return out;
}

bool all_below(const MemberValues& v, double threshold) {
  return std::all_of(v.begin(), v.end(),
                     [threshold](double x) { return x < threshold; });
}

Offender worst(const FamilySpec& family, const MemberValues& v, double at) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[k]) k = i;
  return {k, family.label(k), v[k], at};
}

// Doubling scan over candidates followed by bisection between the last
// failing and the first passing candidate. `measure` returns per-member
// values; the condition holds when all are below `threshold`.
ConditionEntry witness_search(
    const FamilySpec& family, ConditionId id, double eps, double threshold,
    std::vector<double> candidates, int bisection_steps,
    const std::function<double(const GridFunction&, double)>& measure) {
  ConditionEntry e;
  e.condition = id;
  e.eps = eps;
  e.p = family.params.p;
  e.scan.lo = candidates.front();
  e.scan.hi = candidates.back();
  e.scan.horizon_members = horizon_count(family);
  auto at = [&](double x) {
    ++e.scan.candidates;
    return evaluate(family,
                    [&](const GridFunction& f) { return measure(f, x); });
  };
  std::optional<double> last_fail;
  MemberValues values;
  for (double c : candidates) {
    values = at(c);
    if (all_below(values, threshold)) {
      e.verdict = Verdict::kPass;
      double hi = c;
      if (last_fail) {
        double lo = *last_fail;
        for (int s = 0; s < bisection_steps; ++s) {
          const double mid = 0.5 * (lo + hi);
          if (all_below(at(mid), threshold)) hi = mid; else lo = mid;
        }
      }
      e.witness = hi;
      return e;
    }
    last_fail = c;
  }
  e.verdict = Verdict::kFail;
  e.offender = worst(family, values, candidates.back());
  return e;
}

std::vector<double> doubling(double start, double stop, double first) {
  std::vector<double> c;
  for (double x = first; x < stop; x *= 2.0) c.push_back(x);
  if (c.empty() || c.back() != stop) c.push_back(std::max(stop, start));
  return c;
}

// All shifts of the lattice in cell units of `step`, grouped by length.
struct ShiftGroup {
  double length = 0.0;
  std::vector<std::vector<std::int64_t>> shifts;
};

std::vector<ShiftGroup> shift_groups(std::size_t dim, double step,
                                     std::int64_t count) {
  std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> all;
  if (dim == 1) {
    for (std::int64_t j = 1; j <= count; ++j) {
      all.push_back({j * j, {-j}});
      all.push_back({j * j, {j}});
    }
  } else {
    for (std::int64_t a = -count; a <= count; ++a)
      for (std::int64_t b = -count; b <= count; ++b)
        if (a != 0 || b != 0) all.push_back({a * a + b * b, {a, b}});
  }
  std::stable_sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    return x.first < y.first;
  });
  std::vector<ShiftGroup> groups;
  std::int64_t current = -1;
  for (auto& [norm2, cells] : all) {
    if (norm2 != current) {
      groups.push_back({step * std::sqrt(static_cast<double>(norm2)), {}});
      current = norm2;
    }
    groups.back().shifts.push_back(std::move(cells));
  }
  return groups;
}

// Refines f so that `step` is a whole number of cells on every axis.
// Returns the refined function and the cells per step.
std::pair<GridFunction, std::vector<std::int64_t>> align_to_step(
    const GridFunction& f, double step) {
  std::vector<std::int64_t> factors, per_step;
  std::vector<double> spacing;
  for (const Axis& a : f.grid().axes()) {
    const auto cs = common_refinement(a.spacing, step);
    if (!cs) {
      std::ostringstream os;
      os << "shift step " << step << " is not commensurable with spacing "
         << a.spacing;
      fail(ErrorKind::kIncompatible, os.str());
    }
    factors.push_back(cs->factor_a);
    per_step.push_back(cs->factor_b);
    spacing.push_back(cs->spacing);
  }
  return {refine(f, factors, spacing), per_step};
}

double shift_integral(const GridFunction& f,
                      std::span<const std::int64_t> cells, double p,
                      bool clamped) {
  const Transform t = clamped ? Transform::clamp_power(p) : Transform::power(p);
  const GridFunction grid_part(f.grid(),
                               std::vector<Run>(f.runs().begin(), f.runs().end()));
  const double a_pow =
      integrate_transformed(subtract(shift_cells(grid_part, cells), grid_part), t)
          .value;
  const TailSpec& tail = f.tail();
  if (tail.vanishes()) return a_pow;

  // f = grid part + tail part. The tail part moves by |y| and its change is
  // bounded by twice the tail mass over [edge, edge + |y|] on each side.
  const Axis& a = f.grid().axis(0);
  const double y = static_cast<double>(std::abs(cells[0])) * a.spacing;
  const Transform one = Transform::power(1.0);
  double mass = 0.0, edge = 0.0;
  if (tail.right()) {
    mass += 2.0 * tail_segment_integral(tail, one, a.hi(), a.hi() + y).value;
    edge = std::max(edge, tail.value_at(a.hi()));
  }
  if (tail.left()) {
    mass += 2.0 * tail_segment_integral(tail, one, -a.lo(), -a.lo() + y).value;
    edge = std::max(edge, tail.value_at(-a.lo()));
  }
  const double b_pow = clamped ? mass : std::pow(edge, p - 1.0) * mass;
  const double sum = std::pow(a_pow, 1.0 / p) + std::pow(b_pow, 1.0 / p);
  return std::pow(sum, p);
}

ConditionEntry translation_search(const FamilySpec& family, double eps,
                                  const ScanOptions& options, ConditionId id,
                                  bool clamped) {
  family.validate();
  const ShiftLattice& lattice = options.shifts;
  if (lattice.count < 1 || lattice.step < 0.0)
    fail(ErrorKind::kInvalidArgument, "empty shift lattice");
  const double step = effective_shift_step(family, lattice);
  const double p = family.params.p;
  const double threshold = std::pow(eps, p);
  const std::size_t dim = family.members.front().dim();
  for (const GridFunction& f : family.members)
    if (f.dim() != dim)
      fail(ErrorKind::kIncompatible, "family members differ in dimension");

  const std::vector<ShiftGroup> groups =
      shift_groups(dim, step, lattice.count);
  // values[i][g] = worst integral of member i over group g.
  std::vector<std::vector<double>> values(family.size());
  parallel_for(family.size(), [&](std::size_t i) {
    const auto [fine, per_step] = align_to_step(family.members[i], step);
    std::vector<double>& row = values[i];
    row.reserve(groups.size());
    std::vector<std::int64_t> cells(dim);
    for (const ShiftGroup& g : groups) {
      double worst_value = 0.0;
      for (const auto& s : g.shifts) {
        for (std::size_t j = 0; j < dim; ++j) cells[j] = s[j] * per_step[j];
        worst_value =
            std::max(worst_value, shift_integral(fine, cells, p, clamped));
      }
      row.push_back(worst_value);
    }
  });

  ConditionEntry e;
  e.condition = id;
  e.eps = eps;
  e.p = p;
  e.scan.lattice = {step, lattice.count};
  e.scan.lo = groups.front().length;
  e.scan.hi = groups.back().length;
  e.scan.candidates = 0;
  for (const ShiftGroup& g : groups)
    e.scan.candidates += static_cast<std::int64_t>(g.shifts.size());

  std::optional<std::size_t> first_fail;
  for (std::size_t g = 0; g < groups.size() && !first_fail; ++g)
    for (std::size_t i = 0; i < family.size(); ++i)
      if (!(values[i][g] < threshold)) {
        first_fail = g;
        break;
      }
  if (first_fail == 0u) {
    MemberValues at_first(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) at_first[i] = values[i][0];
    e.verdict = Verdict::kFail;
    e.offender = worst(family, at_first, groups.front().length);
    return e;
  }
  e.verdict = Verdict::kPass;
  e.witness = first_fail ? groups[*first_fail].length
                         : step * static_cast<double>(lattice.count + 1);
  if (first_fail) {
    std::ostringstream os;
    os << "largest admissible r is limited by the scanned shift |y| = "
       << groups[*first_fail].length;
    e.note = os.str();
  }
  return e;
}

ConditionEntry tail_search(const FamilySpec& family, double eps,
                           const ScanOptions& options, ConditionId id,
                           bool clamped) {
  family.validate();
  const double p = family.params.p;
  const double h = min_spacing(family);
  const double r_max = options.r_max.value_or(default_r_max(family, eps));
  const Transform t = clamped ? Transform::clamp_power(p) : Transform::power(p);
  return witness_search(
      family, id, eps, std::pow(eps, p), doubling(h, std::max(r_max, h), h),
      options.bisection_steps, [&](const GridFunction& f, double r) {
        return integrate_outside_ball(f, t, r).value;
      });
}

}  // namespace

const char* to_string(ConditionId id) noexcept {
  switch (id) {
    case ConditionId::kTail: return "tail";
    case ConditionId::kTranslation: return "translation";
    case ConditionId::kLevel: return "level";
    case ConditionId::kLpTail: return "lp-tail";
    case ConditionId::kLpTranslation: return "lp-translation";
  }
  return "?";
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kInapplicable: return "inapplicable";
  }
  return "?";
}

const ConditionEntry* ConditionReport::find(ConditionId id,
                                            double e) const noexcept {
  for (const ConditionEntry& entry : entries)
    if (entry.condition == id && entry.eps == e) return &entry;
  return nullptr;
}

double default_r_max(const FamilySpec& family, double eps) {
  const double p = family.params.p;
  const double budget = 0.5 * std::pow(eps, p);
  double r = 0.0;
  const std::size_t n = std::min(horizon_count(family), family.size());
  for (std::size_t i = 0; i < n; ++i) {
    const GridFunction& f = family.members[i];
    r = std::max(r, f.grid().radius());
    const TailSpec& t = f.tail();
    if (t.vanishes()) continue;
    const Axis& a = f.grid().axis(0);
    if (t.right()) r = std::max(r, tail_horizon(t, p, a.hi(), budget));
    if (t.left()) r = std::max(r, tail_horizon(t, p, -a.lo(), budget));
  }
  return r;
}

double default_m_max(const FamilySpec& family) {
  double m = 2.0;
  const std::size_t n = std::min(horizon_count(family), family.size());
  for (std::size_t i = 0; i < n; ++i)
    m = std::max(m, family.members[i].sup_abs());
  return m;
}

double effective_shift_step(const FamilySpec& family,
                            const ShiftLattice& lattice) {
  return lattice.step > 0.0 ? lattice.step : min_spacing(family);
}

double translation_integral(const GridFunction& f, std::span<const double> y,
                            double p, bool clamped) {
  if (y.size() != f.dim())
    fail(ErrorKind::kInvalidArgument, "shift dimension mismatch");
  std::vector<std::int64_t> factors, cells;
  std::vector<double> spacing;
  for (std::size_t j = 0; j < y.size(); ++j) {
    const double h = f.grid().axis(j).spacing;
    if (y[j] == 0.0) {
      factors.push_back(1);
      spacing.push_back(h);
      continue;
    }
    const auto cs = common_refinement(h, std::abs(y[j]));
    if (!cs) {
      std::ostringstream os;
      os << "shift " << y[j] << " is not commensurable with spacing " << h;
      fail(ErrorKind::kInvalidArgument, os.str());
    }
    factors.push_back(cs->factor_a);
    spacing.push_back(cs->spacing);
  }
  const GridFunction fine = refine(f, factors, spacing);
  for (std::size_t j = 0; j < y.size(); ++j)
    cells.push_back(
        snap_to_lattice(y[j], fine.grid().axis(j).spacing, "shift"));
  return shift_integral(fine, cells, p, clamped);
}

ConditionEntry check_tail(const FamilySpec& family, double eps,
                          const ScanOptions& options) {
  if (!(eps > 0.0)) fail(ErrorKind::kInvalidArgument, "eps must be > 0");
  return tail_search(family, eps, options, ConditionId::kTail, true);
}

ConditionEntry check_translation(const FamilySpec& family, double eps,
                                 const ScanOptions& options) {
  if (!(eps > 0.0)) fail(ErrorKind::kInvalidArgument, "eps must be > 0");
  return translation_search(family, eps, options, ConditionId::kTranslation,
                            true);
}

ConditionEntry check_level(const FamilySpec& family, double eps,
                           const ScanOptions& options) {
  if (!(eps > 0.0)) fail(ErrorKind::kInvalidArgument, "eps must be > 0");
  family.validate();
  const double m_max = options.m_max.value_or(default_m_max(family));
  return witness_search(family, ConditionId::kLevel, eps, eps,
                        doubling(2.0, std::max(m_max, 2.0), 2.0),
                        options.bisection_steps,
                        [](const GridFunction& f, double m) {
                          return superlevel_measure(f, m);
                        });
}

std::vector<ConditionEntry> check_kr_lp(const FamilySpec& family, double eps,
                                        const ScanOptions& options) {
  if (!(eps > 0.0)) fail(ErrorKind::kInvalidArgument, "eps must be > 0");
  family.validate();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Integral in = lp_integral(family.members[i], family.params);
    if (!in.finite()) {
      std::ostringstream os;
      os << "member " << family.label(i) << " has infinite L^" << family.params.p
         << " norm (" << in.divergent_term << ")";
      fail(ErrorKind::kNotIntegrable, os.str());
    }
  }
  return {tail_search(family, eps, options, ConditionId::kLpTail, false),
          translation_search(family, eps, options, ConditionId::kLpTranslation,
                             false)};
}

ConditionReport full_report(const FamilySpec& family,
                            std::span<const double> eps_list,
                            const ScanOptions& options) {
  family.validate();
  if (eps_list.empty())
    fail(ErrorKind::kInvalidArgument, "at least one eps is required");
  ConditionReport r;
  r.family = family.describe();
  r.p = family.params.p;
  r.sample_size = family.size();
  r.eps.assign(eps_list.begin(), eps_list.end());
  r.candidate_totally_bounded = true;
  for (double eps : eps_list) {
    for (auto* check : {&check_tail, &check_translation, &check_level}) {
      r.entries.push_back(check(family, eps, options));
      r.candidate_totally_bounded &= r.entries.back().pass();
    }
    try {
      for (ConditionEntry& e : check_kr_lp(family, eps, options))
        r.entries.push_back(std::move(e));
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::kNotIntegrable) throw;
      for (ConditionId id : {ConditionId::kLpTail, ConditionId::kLpTranslation}) {
        ConditionEntry e;
        e.condition = id;
        e.eps = eps;
        e.p = family.params.p;
        e.verdict = Verdict::kInapplicable;
        e.note = err.what();
        r.entries.push_back(std::move(e));
      }
    }
  }
  return r;
}

bool reverify(const FamilySpec& family, const ConditionEntry& entry,
              double eps, const ScanOptions& options) {
  if (!entry.pass() || !entry.witness) return false;
  const double p = family.params.p;
  const double w = *entry.witness;
  switch (entry.condition) {
    case ConditionId::kTail:
    case ConditionId::kLpTail: {
      const Transform t = entry.condition == ConditionId::kTail
                              ? Transform::clamp_power(p)
                              : Transform::power(p);
      return all_below(evaluate(family,
                                [&](const GridFunction& f) {
                                  return integrate_outside_ball(f, t, w).value;
                                }),
                       std::pow(eps, p));
    }
    case ConditionId::kLevel:
      return all_below(evaluate(family,
                                [&](const GridFunction& f) {
                                  return superlevel_measure(f, w);
                                }),
                       eps);
    case ConditionId::kTranslation:
    case ConditionId::kLpTranslation: {
      const bool clamped = entry.condition == ConditionId::kTranslation;
      const double step = entry.scan.lattice.step > 0.0
                              ? entry.scan.lattice.step
                              : effective_shift_step(family, options.shifts);
      const std::size_t dim = family.members.front().dim();
      const auto groups = shift_groups(dim, step, entry.scan.lattice.count);
      const double threshold = std::pow(eps, p);
      MemberValues ok(family.size());
      parallel_for(family.size(), [&](std::size_t i) {
        ok[i] = 0.0;
        for (const ShiftGroup& g : groups) {
          if (!(g.length < w * (1.0 - 1e-12))) break;
          for (const auto& s : g.shifts) {
            std::vector<double> y(dim);
            for (std::size_t j = 0; j < dim; ++j)
              y[j] = static_cast<double>(s[j]) * step;
            if (!(translation_integral(family.members[i], y, p, clamped) <
                  threshold)) {
              ok[i] = 1.0;
              return;
            }
          }
        }
      });
      return all_below(ok, 0.5);
    }
  }
  return false;
}

}  // namespace asymlp

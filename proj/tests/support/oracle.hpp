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


// Brute-force reference implementations used by the tests. Nothing here calls
// the library's quadrature, resampling or tail code: cell values are read
// densely, tails are integrated from a separately derived closed form, and
// differences are formed by point evaluation on a brute-force common grid.

#ifndef ASYMLP_TESTS_ORACLE_HPP
#define ASYMLP_TESTS_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "asymlp/grid.hpp"

namespace oracle {

using asymlp::GridFunction;
using asymlp::TailSpec;

// integral over [a, inf) of min(cap, c r^-alpha)^q, written as the uncapped
// integral minus the excess on [a, rc] where the cap is active. Returns +inf
// when alpha*q <= 1.
inline long double capped_power_tail(long double c, long double alpha,
                                     long double cap, long double q,
                                     long double a) {
  const long double beta = alpha * q;
  if (beta <= 1.0L) return INFINITY;
  const long double cq = std::pow(c, q);
  long double total = cq * std::pow(a, 1.0L - beta) / (beta - 1.0L);
  if (std::isfinite(cap)) {
    const long double rc = std::pow(c / cap, 1.0L / alpha);
    if (rc > a) {
      const long double uncapped =
          cq * (std::pow(a, 1.0L - beta) - std::pow(rc, 1.0L - beta)) /
          (beta - 1.0L);
      total -= uncapped - std::pow(cap, q) * (rc - a);
    }
  }
  return total;
}

inline long double tail_part(const GridFunction& f, long double q,
                             bool clamp) {
  const TailSpec& t = f.tail();
  if (t.vanishes()) return 0.0L;
  long double cap = t.cap;
  if (clamp) cap = std::min<long double>(cap, 1.0L);
  const auto& ax = f.grid().axis(0);
  long double s = 0.0L;
  if (t.side != asymlp::TailSide::kLeft)
    s += capped_power_tail(t.coefficient, t.exponent, cap, q, ax.hi());
  if (t.side != asymlp::TailSide::kRight)
    s += capped_power_tail(t.coefficient, t.exponent, cap, q, -ax.lo());
  return s;
}

// Sum over every cell of g(value) * cell volume, in long double.
template <class G>
long double cell_sum(const GridFunction& f, G g) {
  long double vol = 1.0L;
  for (const auto& a : f.grid().axes()) vol *= a.spacing;
  long double s = 0.0L;
  for (double v : f.dense_values()) s += static_cast<long double>(g(v));
  return s * vol;
}

inline double alpha_integral(const GridFunction& f, double p) {
  const long double grid = cell_sum(f, [p](double v) {
    return std::pow(std::min<long double>(std::fabs(v), 1.0L), p);
  });
  return static_cast<double>(grid + tail_part(f, p, true));
}

inline double alpha_norm(const GridFunction& f, double p) {
  return std::pow(alpha_integral(f, p), 1.0 / p);
}

inline double lp_norm(const GridFunction& f, double p) {
  const long double grid = cell_sum(f, [p](double v) {
    return std::pow(static_cast<long double>(std::fabs(v)), p);
  });
  return static_cast<double>(std::pow(grid + tail_part(f, p, false), 1.0L / p));
}

inline double superlevel(const GridFunction& f, double m) {
  long double n = cell_sum(f, [m](double v) { return std::fabs(v) > m; });
  const TailSpec& t = f.tail();
  if (!t.vanishes() && t.cap > m) {
    // Tail exceeds m on (edge, rm) with c rm^-alpha = m.
    const long double rm =
        std::pow(static_cast<long double>(t.coefficient) / m, 1.0L / t.exponent);
    const auto& ax = f.grid().axis(0);
    if (t.side != asymlp::TailSide::kLeft) n += std::max(0.0L, rm - ax.hi());
    if (t.side != asymlp::TailSide::kRight) n += std::max(0.0L, rm + ax.lo());
  }
  return static_cast<double>(n);
}

// Smallest h dividing both h_a and h_b, found by trying h_a / n for
// n = 1..limit.
inline std::optional<double> brute_common_spacing(double ha, double hb,
                                                  int limit = 4096) {
  for (int n = 1; n <= limit; ++n) {
    const double h = ha / n;
    const double m = hb / h;
    if (std::fabs(m - std::nearbyint(m)) < 1e-9 * std::max(1.0, m)) return h;
  }
  return std::nullopt;
}

// integral of min(|f - g|, 1)^p (clamped) or |f - g|^p over the union of
// both boxes, by midpoint evaluation on a common grid. Tails must vanish.
inline double difference_integral(const GridFunction& f, const GridFunction& g,
                                  double p, bool clamped) {
  const std::size_t d = f.dim();
  std::vector<double> h(d), lo(d), hi(d);
  std::vector<std::int64_t> n(d);
  for (std::size_t j = 0; j < d; ++j) {
    const auto& a = f.grid().axis(j);
    const auto& b = g.grid().axis(j);
    h[j] = *brute_common_spacing(a.spacing, b.spacing);
    lo[j] = std::min(a.lo(), b.lo());
    hi[j] = std::max(a.hi(), b.hi());
    n[j] = static_cast<std::int64_t>(std::llround((hi[j] - lo[j]) / h[j]));
  }
  long double vol = 1.0L;
  for (double s : h) vol *= s;
  long double sum = 0.0L;
  std::vector<double> x(d);
  const std::int64_t total = d == 1 ? n[0] : n[0] * n[1];
  for (std::int64_t c = 0; c < total; ++c) {
    const std::int64_t i0 = d == 1 ? c : c / n[1];
    x[0] = lo[0] + (static_cast<double>(i0) + 0.5) * h[0];
    if (d == 2) x[1] = lo[1] + (static_cast<double>(c % n[1]) + 0.5) * h[1];
    const long double diff = std::fabs(f(x) - g(x));
    const long double base = clamped ? std::min(diff, 1.0L) : diff;
    sum += std::pow(base, static_cast<long double>(p));
  }
  return static_cast<double>(sum * vol);
}

inline double alpha_distance(const GridFunction& f, const GridFunction& g,
                             double p) {
  return std::pow(difference_integral(f, g, p, true), 1.0 / p);
}

}  // namespace oracle

#endif  // ASYMLP_TESTS_ORACLE_HPP

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

#include "asymlp/tail.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "asymlp/error.hpp"

namespace asymlp {
namespace {

// c^p * integral of r^(-alpha p) over [lo, hi], hi possibly +inf.
Integral power_law_integral(double c, double alpha, double p, double lo,
                            double hi) {
  const double beta = alpha * p;
  const double cp = std::pow(c, p);
  if (std::isinf(hi)) {
    if (beta <= 1.0) {
      std::ostringstream os;
      os << "c^p * integral of r^(-" << beta << ") over [" << lo
         << ", inf) with alpha*p = " << beta << " <= 1";
      return Integral::divergent(os.str());
    }
    return {cp * std::pow(lo, 1.0 - beta) / (beta - 1.0), {}};
  }
  if (beta == 1.0) return {cp * std::log(hi / lo), {}};
  return {cp * (std::pow(lo, 1.0 - beta) - std::pow(hi, 1.0 - beta)) /
              (beta - 1.0),
          {}};
}

}  // namespace

TailSpec TailSpec::power_law(double coefficient, double exponent,
                             double onset, TailSide side) {
  TailSpec t;
  t.kind = TailKind::kPowerLaw;
  t.coefficient = coefficient;
  t.exponent = exponent;
  t.onset = onset;
  t.side = side;
  t.validate();
  return t;
}

double TailSpec::value_at(double r) const noexcept {
  if (vanishes()) return 0.0;
  return std::min(cap, coefficient * std::pow(r, -exponent));
}

void TailSpec::validate() const {
  if (kind == TailKind::kZero) return;
  if (!(std::isfinite(coefficient) && coefficient >= 0.0))
    fail(ErrorKind::kInvalidArgument, "power-law tail needs coefficient c >= 0");
  if (!(std::isfinite(exponent) && exponent > 0.0))
    fail(ErrorKind::kInvalidArgument, "power-law tail needs exponent alpha > 0");
  if (!(std::isfinite(onset) && onset > 0.0))
    fail(ErrorKind::kInvalidArgument, "power-law tail needs onset L > 0");
  if (!(cap >= 0.0))
    fail(ErrorKind::kInvalidArgument, "power-law tail cap must be >= 0");
}

std::string TailSpec::describe() const {
  if (kind == TailKind::kZero) return "zero";
  std::ostringstream os;
  os << "power-law c=" << coefficient << " alpha=" << exponent
     << " L=" << onset << " side="
     << (side == TailSide::kRight  ? "right"
         : side == TailSide::kLeft ? "left"
                                   : "both");
  if (std::isfinite(cap)) os << " cap=" << cap;
  return os.str();
}

Integral tail_segment_integral(const TailSpec& tail, const Transform& t,
                               double r0, double r1) {
  if (tail.vanishes() || !(r1 > r0)) return {};
  const double c = tail.coefficient;
  const double alpha = tail.exponent;

  if (t.kind() == Transform::Kind::kThreshold) {
    const double m = t.parameter();
    if (!(tail.cap > m)) return {};
    const double rm = std::pow(c / m, 1.0 / alpha);
    return {std::max(0.0, std::min(r1, rm) - r0), {}};
  }

  const double p = t.parameter();
  const double cap = t.kind() == Transform::Kind::kClampPower
                         ? std::min(tail.cap, 1.0)
                         : tail.cap;
  // Below rc the profile sits on its cap.
  const double rc = std::isinf(cap) ? 0.0 : std::pow(c / cap, 1.0 / alpha);
  Integral out;
  if (rc > r0) out.value = std::pow(cap, p) * (std::min(r1, rc) - r0);
  const double lo = std::max(r0, rc);
  if (r1 > lo) out = out + power_law_integral(c, alpha, p, lo, r1);
  return out;
}

double tail_horizon(const TailSpec& tail, double p, double from,
                    double budget) {
  const Transform t = Transform::clamp_power(p);
  auto beyond = [&](double x) {
    return tail_segment_integral(tail, t, x, HUGE_VAL);
  };
  Integral at = beyond(from);
  if (!at.finite()) return HUGE_VAL;
  if (at.value <= budget) return from;
  double lo = from;
  double hi = std::max(from, 1.0) * 2.0;
  for (int i = 0; i < 2000 && beyond(hi).value > budget; ++i) {
    lo = hi;
    hi *= 2.0;
  }
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (beyond(mid).value > budget) lo = mid; else hi = mid;
  }
  return hi;
}

}  // namespace asymlp

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

#ifndef ASYMLP_TAIL_HPP
#define ASYMLP_TAIL_HPP

#include <limits>
#include <string>

#include "asymlp/transform.hpp"

namespace asymlp {

enum class TailKind { kZero, kPowerLaw };
enum class TailSide { kRight, kLeft, kBoth };

/// Behaviour of a one-dimensional function outside its grid box.
///
/// A power-law tail is the magnitude profile
///
///   t(x) = min(cap, c * |x|^(-alpha))   for x outside the box,
///
/// on the side(s) selected by `side`. The box must contain [-onset, onset].
/// `cap` is +inf unless the tail has been truncated or clamped, in which case
/// truncation stays closed-form.
struct TailSpec {
  TailKind kind = TailKind::kZero;
  double coefficient = 0.0;
  double exponent = 0.0;
  double onset = 0.0;
  TailSide side = TailSide::kBoth;
  double cap = std::numeric_limits<double>::infinity();

  static TailSpec zero() { return {}; }
  static TailSpec power_law(double coefficient, double exponent, double onset,
                            TailSide side = TailSide::kBoth);

  /// True when the function vanishes identically outside its box.
  bool vanishes() const noexcept {
    return kind == TailKind::kZero || coefficient == 0.0 || cap == 0.0;
  }
  bool right() const noexcept {
    return !vanishes() && side != TailSide::kLeft;
  }
  bool left() const noexcept {
    return !vanishes() && side != TailSide::kRight;
  }

  /// Tail magnitude at radius r > 0 (side selection is the caller's job).
  double value_at(double r) const noexcept;

  /// Throws unless the fields describe a valid tail.
  void validate() const;

  std::string describe() const;

  friend bool operator==(const TailSpec&, const TailSpec&) = default;
};

/// Closed-form integral over radii [r0, r1] (r1 may be +inf) of
/// T(min(cap, c r^(-alpha))). Requires 0 < r0.
Integral tail_segment_integral(const TailSpec& tail, const Transform& t,
                               double r0, double r1);

/// Smallest radius X >= from such that the clamp-power tail integral beyond X
/// is at most `budget` (one side). Used to bound witness searches.
double tail_horizon(const TailSpec& tail, double p, double from,
                    double budget);

}  // namespace asymlp

#endif  // ASYMLP_TAIL_HPP

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

#ifndef ASYMLP_TRANSFORM_HPP
#define ASYMLP_TRANSFORM_HPP

#include <cmath>
#include <limits>
#include <string>

namespace asymlp {

/// The closed catalog of pointwise maps the quadrature kernel knows how to
/// integrate exactly (including over power-law tails).
class Transform {
 public:
  enum class Kind {
    kPower,       // t -> |t|^p
    kClampPower,  // t -> min(|t|, 1)^p
    kThreshold,   // t -> [|t| > m]
  };

  static Transform power(double p);
  static Transform clamp_power(double p);
  static Transform threshold(double m);

  Kind kind() const noexcept { return kind_; }
  /// p for the power kinds, m for the threshold.
  double parameter() const noexcept { return parameter_; }

  double operator()(double t) const noexcept {
    const double a = std::abs(t);
    switch (kind_) {
      case Kind::kPower:
        return power_of(a);
      case Kind::kClampPower:
        return power_of(a < 1.0 ? a : 1.0);
      case Kind::kThreshold:
        return a > parameter_ ? 1.0 : 0.0;
    }
    return 0.0;
  }

  std::string describe() const;

 private:
  Transform(Kind kind, double parameter) : kind_(kind), parameter_(parameter) {}

  double power_of(double a) const noexcept {
    if (parameter_ == 1.0) return a;
    if (parameter_ == 2.0) return a * a;
    return std::pow(a, parameter_);
  }

  Kind kind_;
  double parameter_;
};

/// Result of an integral that may diverge. A divergent integral carries
/// value = +inf and a human-readable description of the divergent term.
struct Integral {
  double value = 0.0;
  std::string divergent_term;

  bool finite() const noexcept { return divergent_term.empty(); }

  static Integral divergent(std::string term) {
    return {std::numeric_limits<double>::infinity(), std::move(term)};
  }
};

inline Integral operator+(Integral a, const Integral& b) {
  if (!a.finite()) return a;
  if (!b.finite()) return b;
  a.value += b.value;
  return a;
}

}  // namespace asymlp

#endif  // ASYMLP_TRANSFORM_HPP

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


// Hand-rolled generators for the property suites. Every generator takes the
// engine by reference so a single seed reproduces a whole test.

#ifndef ASYMLP_TESTS_GENERATORS_HPP
#define ASYMLP_TESTS_GENERATORS_HPP

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "asymlp/grid.hpp"

namespace gen {

using Engine = std::mt19937_64;

inline double uniform(Engine& e, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(e);
}

inline std::int64_t integer(Engine& e, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(e);
}

inline bool coin(Engine& e, double p = 0.5) {
  return std::bernoulli_distribution(p)(e);
}

template <class T, std::size_t N>
const T& pick(Engine& e, const std::array<T, N>& xs) {
  return xs[static_cast<std::size_t>(integer(e, 0, N - 1))];
}

// Spacings with small pairwise refinements, so mixed-grid arithmetic stays
// cheap while still exercising non-power-of-two ratios.
inline constexpr std::array<double, 6> kSpacings = {0.5,       0.25, 0.125,
                                                    1.0 / 3.0, 1.0 / 6.0,
                                                    1.0 / 16.0};

// Values in [-10, 10] arranged in runs, with zero runs for holes in the
// support and a share of sub-unit magnitudes so both clamp branches occur.
inline std::vector<double> run_values(Engine& e, std::int64_t n) {
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(n));
  while (static_cast<std::int64_t>(v.size()) < n) {
    const std::int64_t len = integer(e, 1, 6);
    double x = 0.0;
    const double r = uniform(e, 0.0, 1.0);
    if (r < 0.3) x = 0.0;
    else if (r < 0.6) x = uniform(e, -1.0, 1.0);
    else x = uniform(e, -10.0, 10.0);
    for (std::int64_t i = 0; i < len && static_cast<std::int64_t>(v.size()) < n;
         ++i)
      v.push_back(x);
  }
  return v;
}

inline asymlp::GridFunction function_1d(Engine& e) {
  const double h = pick(e, kSpacings);
  const std::int64_t offset = integer(e, -40, 40);
  const std::int64_t count = integer(e, 1, 60);
  asymlp::Grid g({asymlp::Axis{h, offset, count}});
  return asymlp::GridFunction::from_values(g, run_values(e, count));
}

inline asymlp::GridFunction function_2d(Engine& e) {
  static constexpr std::array<double, 3> kCoarse = {0.5, 0.25, 1.0 / 3.0};
  std::vector<asymlp::Axis> axes;
  for (int j = 0; j < 2; ++j)
    axes.push_back({pick(e, kCoarse), integer(e, -6, 6), integer(e, 1, 10)});
  asymlp::Grid g(axes);
  return asymlp::GridFunction::from_values(g, run_values(e, g.cell_count()));
}

// Mostly one-dimensional, one in five two-dimensional.
inline asymlp::GridFunction function(Engine& e) {
  return coin(e, 0.2) ? function_2d(e) : function_1d(e);
}

// A pair in the same dimension.
inline std::array<asymlp::GridFunction, 2> pair(Engine& e) {
  if (coin(e, 0.2)) return {function_2d(e), function_2d(e)};
  return {function_1d(e), function_1d(e)};
}

// One-dimensional function with an integrable power-law tail (alpha*p > 1
// for every p >= 1 used by the suites).
inline asymlp::GridFunction function_with_tail(Engine& e) {
  const double h = pick(e, kSpacings);
  const double onset = pick(e, std::array<double, 3>{0.5, 1.0, 2.0});
  const std::int64_t lo = -static_cast<std::int64_t>(std::llround(onset / h)) -
                          integer(e, 0, 8);
  const std::int64_t hi = static_cast<std::int64_t>(std::llround(onset / h)) +
                          integer(e, 0, 8);
  asymlp::Grid g({asymlp::Axis{h, lo, hi - lo}});
  const auto side = pick(e, std::array<asymlp::TailSide, 3>{
                                asymlp::TailSide::kLeft,
                                asymlp::TailSide::kRight,
                                asymlp::TailSide::kBoth});
  auto tail = asymlp::TailSpec::power_law(uniform(e, 0.1, 5.0),
                                          uniform(e, 1.1, 3.0), onset, side);
  return asymlp::GridFunction::from_values(g, run_values(e, hi - lo), tail);
}

}  // namespace gen

#endif  // ASYMLP_TESTS_GENERATORS_HPP

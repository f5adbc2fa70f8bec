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

#include "asymlp/fnorms.hpp"

#include <cmath>
#include <sstream>

#include "asymlp/error.hpp"
#include "asymlp/operators.hpp"
#include "asymlp/parallel.hpp"
#include "asymlp/quadrature.hpp"

namespace asymlp {

void NormParams::validate() const {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    std::ostringstream os;
    os << "exponent p must satisfy 1 <= p < inf, got " << p;
    fail(ErrorKind::kInvalidArgument, os.str());
  }
}

Integral lp_integral(const GridFunction& f, const NormParams& params) {
  params.validate();
  return integrate_transformed(f, Transform::power(params.p));
}

double lp_norm(const GridFunction& f, const NormParams& params) {
  const Integral i = lp_integral(f, params);
  if (!i.finite()) return HUGE_VAL;
  return std::pow(i.value, 1.0 / params.p);
}

double alpha_integral(const GridFunction& f, const NormParams& params) {
  params.validate();
  const Integral i = integrate_transformed(f, Transform::clamp_power(params.p));
  if (!i.finite())
    fail(ErrorKind::kNotIntegrable,
         "function is not in the space: divergent term " + i.divergent_term);
  return i.value;
}

double alpha_norm(const GridFunction& f, const NormParams& params) {
  return std::pow(alpha_integral(f, params), 1.0 / params.p);
}

double alpha_distance_pow(const GridFunction& f, const GridFunction& g,
                          const NormParams& params) {
  return alpha_integral(subtract(f, g), params);
}

double alpha_distance(const GridFunction& f, const GridFunction& g,
                      const NormParams& params) {
  return alpha_norm(subtract(f, g), params);
}

double lp_distance(const GridFunction& f, const GridFunction& g,
                   const NormParams& params) {
  return lp_norm(subtract(f, g), params);
}

bool is_member(const GridFunction& f, const NormParams& params) {
  params.validate();
  return integrate_transformed(f, Transform::clamp_power(params.p)).finite();
}

void require_member(const GridFunction& f, const NormParams& params) {
  (void)alpha_integral(f, params);
}

ConvergenceReport alpha_converges(std::span<const GridFunction> seq,
                                  const GridFunction& limit,
                                  const NormParams& params, double tol) {
  if (seq.empty())
    fail(ErrorKind::kInvalidArgument, "nonempty sequence required");
  ConvergenceReport out;
  out.tol = tol;
  out.distances.resize(seq.size());
  parallel_for(seq.size(), [&](std::size_t k) {
    try {
      out.distances[k] = alpha_distance(seq[k], limit, params);
    } catch (const Error& e) {
      std::ostringstream os;
      os << "sequence term " << k << ": " << e.what();
      fail(e.kind(), os.str());
    }
  });
  for (std::size_t k = 1; k < seq.size(); ++k) {
    if (out.distances[k] > out.distances[k - 1]) {
      out.monotone = false;
      out.first_increase = static_cast<std::int64_t>(k);
      break;
    }
  }
  out.converged = out.distances.back() < tol;
  return out;
}

}  // namespace asymlp

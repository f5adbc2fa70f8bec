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

#ifndef ASYMLP_BOUNDED_DOMAIN_HPP
#define ASYMLP_BOUNDED_DOMAIN_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "asymlp/criteria.hpp"
#include "asymlp/family.hpp"
#include "asymlp/measurable_set.hpp"

namespace asymlp {

/// Per-member exceptional sets with the budget they must stay under.
struct ExceptionalSet {
  double budget = 0.0;
  std::vector<MeasurableSet> sets;
  std::vector<double> measures;
};

struct EquiboundedCertificate {
  bool pass = false;
  std::optional<double> level;  // M
  ExceptionalSet exceptional;   // S_f = {|f| > M}
  ConditionEntry check;         // the underlying level check
};

/// Runs the level check at eps and, on success, emits S_f = {|f| > M} for
/// every member, re-verified cell by cell.
EquiboundedCertificate almost_equibounded_certificate(
    const FamilySpec& family, double eps, const ScanOptions& options = {});

struct PairViolation {
  std::size_t member = 0;
  std::int64_t label = 0;
  std::int64_t cell_a = 0;
  std::int64_t cell_b = 0;
  double value_a = 0.0;
  double value_b = 0.0;
};

struct EquicontinuityCertificate {
  bool pass = false;
  double eps = 0.0;
  double delta = 0.0;
  ExceptionalSet exceptional;           // B_f per member
  std::optional<std::size_t> offender;  // first member that fails
  std::optional<PairViolation> violation;
  std::string note;
};

/// B_f collects the points that see a value differing by >= eps within
/// distance delta. In one dimension B_f is cut to sub-cell collars and any
/// delta > 0 is accepted; in two dimensions whole cells are used and delta
/// must be at least the spacing. Passing requires |B_f| < eps for every
/// member and an exhaustive pair scan showing |f(x1) - f(x2)| < eps for all
/// x1, x2 outside B_f with |x1 - x2| < delta. The construction is sound but
/// may reject families that admit a smaller exceptional set.
EquicontinuityCertificate almost_equicontinuity_certificate(
    const FamilySpec& family, double eps, double delta);

struct MeasureConvergence {
  std::vector<double> measures;  // |{|f_k - f| > eps}|
  double tol = 0.0;
  bool converged = false;
};

MeasureConvergence convergence_in_measure(std::span<const GridFunction> seq,
                                          const GridFunction& limit,
                                          double eps, double tol);

/// |E symmetric-difference (E - y)| for an axis-aligned box E.
double symmetric_difference_measure(std::span<const Interval> box,
                                    std::span<const double> y);

enum class ImplicationStatus { kHolds, kViolated, kNotExercised };
const char* to_string(ImplicationStatus s) noexcept;

/// Equicontinuity certificate => translation condition, with the constant
/// bookkeeping (3 + |E|) eps_tilde < eps.
struct ContinuityToTranslation {
  double eps = 0.0;
  double eps_tilde = 0.0;
  std::optional<double> delta;  // largest grid delta passing at eps_tilde
  double r = 0.0;               // min(delta, r0)
  double symmetric_difference = 0.0;  // at |y| = r along the first axis
  std::int64_t shifts_checked = 0;
  double max_integral = 0.0;
  ImplicationStatus status = ImplicationStatus::kNotExercised;
};

/// Total boundedness under the p = 1 seminorm => equicontinuity certificate.
struct BoundednessToContinuity {
  double eps = 0.0;
  double net_radius = 0.0;  // eps^2 / 12
  std::size_t net_size = 0;
  std::optional<double> delta;  // largest grid delta passing at eps
  ImplicationStatus status = ImplicationStatus::kNotExercised;
};

struct CrosscheckReport {
  double measure_e = 0.0;
  Box e;
  std::vector<ContinuityToTranslation> continuity_to_translation;
  std::vector<BoundednessToContinuity> boundedness_to_continuity;
  std::vector<ConditionEntry> translation;  // translation condition at each eps
};

/// Observes both bounded-domain implications on one family at p = 1.
CrosscheckReport corollary_crosscheck(const FamilySpec& family,
                                      std::span<const double> eps_list,
                                      std::span<const double> delta_grid,
                                      const ShiftLattice& lattice = {});

/// Smallest box containing every member's grid box.
Box common_box(const FamilySpec& family);

}  // namespace asymlp

#endif  // ASYMLP_BOUNDED_DOMAIN_HPP

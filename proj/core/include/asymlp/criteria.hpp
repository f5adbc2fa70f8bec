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

#ifndef ASYMLP_CRITERIA_HPP
#define ASYMLP_CRITERIA_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "asymlp/family.hpp"

namespace asymlp {

enum class ConditionId { kTail, kTranslation, kLevel, kLpTail, kLpTranslation };
enum class Verdict { kPass, kFail, kInapplicable };

const char* to_string(ConditionId id) noexcept;
const char* to_string(Verdict v) noexcept;

/// Aligned shifts +-j*step (j = 1..count) per axis. In two dimensions every
/// (j1, j2) with max(|j1|, |j2|) <= count except (0, 0) is scanned. A step
/// of 0 means "finest member spacing".
struct ShiftLattice {
  double step = 0.0;
  std::int64_t count = 16;
};

/// Overrides for the witness search bounds. When unset, the bounds come from
/// the leading half of the family (see README, "Finite-sample semantics").
struct ScanOptions {
  std::optional<double> r_max;
  std::optional<double> m_max;
  ShiftLattice shifts;
  int bisection_steps = 8;
};

struct Offender {
  std::size_t index = 0;
  std::int64_t label = 0;
  double value = 0.0;  // offending integral or measure
  double at = 0.0;     // R, |y| or M at which it was observed
};

struct ScanRecord {
  double lo = 0.0;
  double hi = 0.0;
  std::int64_t candidates = 0;
  ShiftLattice lattice;  // translation checks only
  std::size_t horizon_members = 0;
};

struct ConditionEntry {
  ConditionId condition = ConditionId::kTail;
  double eps = 0.0;
  double p = 1.0;
  Verdict verdict = Verdict::kFail;
  std::optional<double> witness;
  std::optional<Offender> offender;
  ScanRecord scan;
  std::string note;

  bool pass() const noexcept { return verdict == Verdict::kPass; }
};

struct ConditionReport {
  std::string family;
  double p = 1.0;
  std::size_t sample_size = 0;
  std::vector<double> eps;
  std::vector<ConditionEntry> entries;
  bool candidate_totally_bounded = false;

  const ConditionEntry* find(ConditionId id, double eps) const noexcept;
};

/// Tail condition: R with integral over |x| > R of min(|f|,1)^p < eps^p.
ConditionEntry check_tail(const FamilySpec& family, double eps,
                          const ScanOptions& options = {});
/// Translation condition: r with integral of min(|tau_y f - f|,1)^p < eps^p for
/// every scanned |y| < r.
ConditionEntry check_translation(const FamilySpec& family, double eps,
                                 const ScanOptions& options = {});
/// Level condition: M with |{|f| > M}| < eps.
ConditionEntry check_level(const FamilySpec& family, double eps,
                           const ScanOptions& options = {});
/// Classical L^p tail and translation conditions (unclamped integrands).
/// Throws kNotIntegrable when a member has infinite L^p norm.
std::vector<ConditionEntry> check_kr_lp(const FamilySpec& family, double eps,
                                        const ScanOptions& options = {});

/// All five checks per eps. Classical entries become kInapplicable when the
/// family is not inside L^p.
ConditionReport full_report(const FamilySpec& family,
                            std::span<const double> eps_list,
                            const ScanOptions& options = {});

/// Re-runs the defining integral or measure for every member at the
/// entry's witness (and every scanned shift below it) against `eps`.
bool reverify(const FamilySpec& family, const ConditionEntry& entry,
              double eps, const ScanOptions& options = {});

/// Bounds used when the options leave them unset.
double default_r_max(const FamilySpec& family, double eps);
double default_m_max(const FamilySpec& family);

/// Step of the shift lattice actually scanned (resolves step = 0).
double effective_shift_step(const FamilySpec& family,
                            const ShiftLattice& lattice);

/// Integral of T(tau_y f - f) with T = min(|t|,1)^p (clamped) or |t|^p.
/// Power-law tails contribute a certified upper bound.
double translation_integral(const GridFunction& f, std::span<const double> y,
                            double p, bool clamped);

}  // namespace asymlp

#endif  // ASYMLP_CRITERIA_HPP

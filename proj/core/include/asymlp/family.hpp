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

#ifndef ASYMLP_FAMILY_HPP
#define ASYMLP_FAMILY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asymlp/fnorms.hpp"
#include "asymlp/grid.hpp"

namespace asymlp {

/// Named example family with an index range, e.g. "u:k=1..64,p=1".
struct GeneratorSpec {
  std::string name;
  std::int64_t k_first = 1;
  std::int64_t k_last = 1;
  std::map<std::string, double> params;

  /// Parses "name:k=a..b,key=value,...". A single k=a is allowed.
  static GeneratorSpec parse(const std::string& text);
  std::string describe() const;

  double param_or(const std::string& key, double fallback) const;
};

/// A finite ordered family of functions together with the exponent p.
/// Labels are the generator indices k, or 0-based positions for families
/// read from files.
struct FamilySpec {
  std::vector<GridFunction> members;
  std::vector<std::int64_t> labels;
  NormParams params;
  std::optional<GeneratorSpec> generator;

  std::size_t size() const noexcept { return members.size(); }
  std::int64_t label(std::size_t i) const;
  std::string describe() const;

  /// Throws unless the family is nonempty and every member is in the space.
  void validate() const;

  /// The first n members (labels and parameters carried along).
  FamilySpec prefix(std::size_t n) const;
};

FamilySpec make_family(std::vector<GridFunction> members, NormParams params);

}  // namespace asymlp

#endif  // ASYMLP_FAMILY_HPP

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

#ifndef ASYMLP_IO_HPP
#define ASYMLP_IO_HPP

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "asymlp/bounded_domain.hpp"
#include "asymlp/criteria.hpp"
#include "asymlp/family.hpp"
#include "asymlp/grid.hpp"
#include "asymlp/nets.hpp"

namespace asymlp::io {

using Json = nlohmann::json;

/// Function document:
///   {"dim": 1, "box": [[lo, hi]], "spacing": [h],
///    "values": [...] or {"rle": [[value, count], ...]},
///    "tail": {"kind": "zero"} or {"kind": "power_law", "c": .., "alpha": ..,
///             "L": .., "side": "both"|"left"|"right", "cap": ..}}
/// Values are row-major. Doubles are written with round-trip precision.
Json to_json(const GridFunction& f, bool run_length = true);
GridFunction function_from_json(const Json& j, const std::string& where = "");

/// Family document: {"p": .., "members": [...], "labels": [...]}. An explicit
/// `p` overrides the one stored in the document (default 1).
Json to_json(const FamilySpec& family);
FamilySpec family_from_json(const Json& j, std::optional<double> p = {});

Json to_json(const ConditionEntry& e);
Json to_json(const ConditionReport& r);
Json to_json(const EpsNet& net, bool with_centers = false);
Json to_json(const ExceptionalSet& s);
Json to_json(const EquiboundedCertificate& c);
Json to_json(const EquicontinuityCertificate& c);
Json to_json(const CrosscheckReport& r);

/// Parses text, reporting syntax errors as kParse with line and column.
Json parse(const std::string& text, const std::string& source);
Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);
/// Stable, two-space indented text with sorted keys and a final newline.
std::string dump(const Json& j);

}  // namespace asymlp::io

#endif  // ASYMLP_IO_HPP

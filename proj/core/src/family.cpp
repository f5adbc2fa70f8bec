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

#include "asymlp/family.hpp"

#include <charconv>
#include <sstream>

#include "asymlp/error.hpp"

namespace asymlp {
namespace {

std::int64_t parse_int(const std::string& s, const std::string& what) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    fail(ErrorKind::kParse, "bad integer '" + s + "' in " + what);
  return v;
}

double parse_double(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size())
    fail(ErrorKind::kParse, "bad number '" + s + "' in " + what);
  return v;
}

}  // namespace

GeneratorSpec GeneratorSpec::parse(const std::string& text) {
  GeneratorSpec g;
  const auto colon = text.find(':');
  g.name = text.substr(0, colon);
  if (g.name.empty())
    fail(ErrorKind::kParse, "generator spec '" + text + "' has no name");
  bool have_k = false;
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0)
        fail(ErrorKind::kParse,
             "expected key=value in generator spec, got '" + item + "'");
      const std::string key = item.substr(0, eq);
      const std::string val = item.substr(eq + 1);
      if (key == "k") {
        const auto dots = val.find("..");
        if (dots == std::string::npos) {
          g.k_first = g.k_last = parse_int(val, "k");
        } else {
          g.k_first = parse_int(val.substr(0, dots), "k range");
          g.k_last = parse_int(val.substr(dots + 2), "k range");
        }
        have_k = true;
      } else {
        g.params[key] = parse_double(val, key);
      }
    }
  }
  if (!have_k) g.k_first = g.k_last = 1;
  if (g.k_last < g.k_first)
    fail(ErrorKind::kParse, "empty k range in '" + text + "'");
  return g;
}

std::string GeneratorSpec::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << name << ":k=" << k_first;
  if (k_last != k_first) os << ".." << k_last;
  for (const auto& [key, value] : params) os << "," << key << "=" << value;
  return os.str();
}

double GeneratorSpec::param_or(const std::string& key, double fallback) const {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

std::int64_t FamilySpec::label(std::size_t i) const {
  return i < labels.size() ? labels[i] : static_cast<std::int64_t>(i);
}

std::string FamilySpec::describe() const {
  if (generator) return generator->describe();
  std::ostringstream os;
  os << "file family (" << members.size() << " members)";
  return os.str();
}

void FamilySpec::validate() const {
  if (members.empty())
    fail(ErrorKind::kInvalidArgument, "nonempty family required");
  if (!labels.empty() && labels.size() != members.size())
    fail(ErrorKind::kInvalidArgument, "label count differs from member count");
  params.validate();
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!is_member(members[i], params)) {
      std::ostringstream os;
      os << "member " << label(i) << " is not in the space for p = "
         << params.p << " (divergent clamp integral)";
      fail(ErrorKind::kNotIntegrable, os.str());
    }
  }
}

FamilySpec FamilySpec::prefix(std::size_t n) const {
  FamilySpec out = *this;
  if (n < out.members.size()) {
    out.members.resize(n);
    if (!out.labels.empty()) out.labels.resize(n);
    if (out.generator && n > 0)
      out.generator->k_last =
          out.generator->k_first + static_cast<std::int64_t>(n) - 1;
  }
  return out;
}

FamilySpec make_family(std::vector<GridFunction> members, NormParams params) {
  FamilySpec f;
  f.members = std::move(members);
  f.params = params;
  return f;
}

}  // namespace asymlp

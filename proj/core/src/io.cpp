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

#include "asymlp/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "asymlp/error.hpp"

namespace asymlp::io {
namespace {

[[noreturn]] void bad_field(const std::string& where, const std::string& what) {
  fail(ErrorKind::kParse, (where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad_field(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) bad_field(where, std::string("missing field '") + key + "'");
  return *it;
}

double number(const Json& j, const std::string& where) {
  if (!j.is_number()) bad_field(where, "expected a number");
  return j.get<double>();
}

std::int64_t integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad_field(where, "expected an integer");
  return j.get<std::int64_t>();
}

const char* side_name(TailSide s) {
  switch (s) {
    case TailSide::kRight: return "right";
    case TailSide::kLeft: return "left";
    case TailSide::kBoth: return "both";
  }
  return "both";
}

Json tail_json(const TailSpec& t) {
  if (t.kind == TailKind::kZero) return {{"kind", "zero"}};
  Json j = {{"kind", "power_law"}, {"c", t.coefficient}, {"alpha", t.exponent},
            {"L", t.onset}, {"side", side_name(t.side)}};
  if (std::isfinite(t.cap)) j["cap"] = t.cap;
  return j;
}

TailSpec tail_from_json(const Json& j, const std::string& where) {
  const Json& kind = field(j, "kind", where);
  if (!kind.is_string()) bad_field(where + "/kind", "expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "zero") return TailSpec::zero();
  if (k != "power_law")
    bad_field(where + "/kind", "unknown tail kind '" + k + "'");
  TailSpec t;
  t.kind = TailKind::kPowerLaw;
  t.coefficient = number(field(j, "c", where), where + "/c");
  t.exponent = number(field(j, "alpha", where), where + "/alpha");
  t.onset = number(field(j, "L", where), where + "/L");
  if (j.contains("side")) {
    const std::string s = j.at("side").is_string() ? j.at("side").get<std::string>() : "";
    if (s == "right") t.side = TailSide::kRight;
    else if (s == "left") t.side = TailSide::kLeft;
    else if (s == "both") t.side = TailSide::kBoth;
    else bad_field(where + "/side", "expected \"left\", \"right\" or \"both\"");
  }
  if (j.contains("cap")) t.cap = number(j.at("cap"), where + "/cap");
  try {
    t.validate();
  } catch (const Error& e) {
    bad_field(where, e.what());
  }
  return t;
}

Json optional_number(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json offender_json(const std::optional<Offender>& o) {
  if (!o) return nullptr;
  return {{"index", o->index}, {"label", o->label}, {"value", o->value},
          {"at", o->at}};
}

Json set_json(const MeasurableSet& s) {
  Json cells = Json::array();
  for (const CellRange& c : s.cells()) cells.push_back({c.begin, c.end});
  Json extra = Json::array();
  for (const Interval& i : s.extra()) extra.push_back({i.lo, i.hi});
  return {{"cells", cells}, {"intervals", extra}, {"measure", s.measure()}};
}

Json pair_json(const std::optional<PairViolation>& v) {
  if (!v) return nullptr;
  return {{"member", v->member}, {"label", v->label},
          {"cells", {v->cell_a, v->cell_b}},
          {"values", {v->value_a, v->value_b}}};
}

}  // namespace

Json to_json(const GridFunction& f, bool run_length) {
  Json box = Json::array();
  Json spacing = Json::array();
  for (const Axis& a : f.grid().axes()) {
    box.push_back({a.lo(), a.hi()});
    spacing.push_back(a.spacing);
  }
  Json values;
  if (run_length) {
    Json rle = Json::array();
    for (const Run& r : f.runs()) rle.push_back({r.value, r.length()});
    values = {{"rle", rle}};
  } else {
    values = f.dense_values();
  }
  return {{"dim", f.dim()}, {"box", box}, {"spacing", spacing},
          {"values", values}, {"tail", tail_json(f.tail())}};
}

GridFunction function_from_json(const Json& j, const std::string& where) {
  const std::int64_t dim = integer(field(j, "dim", where), where + "/dim");
  if (dim < 1 || dim > 2) bad_field(where + "/dim", "dimension must be 1 or 2");
  const Json& box_j = field(j, "box", where);
  if (!box_j.is_array() || box_j.size() != static_cast<std::size_t>(dim))
    bad_field(where + "/box", "expected one [lo, hi] pair per axis");
  Box box;
  for (std::size_t a = 0; a < box_j.size(); ++a) {
    const std::string w = where + "/box/" + std::to_string(a);
    if (!box_j[a].is_array() || box_j[a].size() != 2)
      bad_field(w, "expected [lo, hi]");
    box.push_back({number(box_j[a][0], w + "/0"), number(box_j[a][1], w + "/1")});
  }
  const Json& sp = field(j, "spacing", where);
  std::vector<double> spacing;
  if (sp.is_number()) {
    spacing.assign(static_cast<std::size_t>(dim), sp.get<double>());
  } else if (sp.is_array() && sp.size() == static_cast<std::size_t>(dim)) {
    for (std::size_t a = 0; a < sp.size(); ++a)
      spacing.push_back(number(sp[a], where + "/spacing/" + std::to_string(a)));
  } else {
    bad_field(where + "/spacing", "expected a number or one number per axis");
  }
  Grid grid;
  try {
    grid = Grid::from_box(box, spacing);
  } catch (const Error& e) {
    bad_field(where + "/box", e.what());
  }
  const Json& vals = field(j, "values", where);
  std::vector<Run> runs;
  if (vals.is_array()) {
    RunBuilder b;
    for (std::size_t i = 0; i < vals.size(); ++i)
      b.append(1, number(vals[i], where + "/values/" + std::to_string(i)));
    runs = std::move(b).take();
  } else if (vals.is_object() && vals.contains("rle") && vals["rle"].is_array()) {
    std::int64_t pos = 0;
    const Json& rle = vals["rle"];
    for (std::size_t i = 0; i < rle.size(); ++i) {
      const std::string w = where + "/values/rle/" + std::to_string(i);
      if (!rle[i].is_array() || rle[i].size() != 2)
        bad_field(w, "expected [value, count]");
      const double v = number(rle[i][0], w + "/0");
      const std::int64_t n = integer(rle[i][1], w + "/1");
      if (n < 0) bad_field(w + "/1", "count must be >= 0");
      runs.push_back({pos, pos + n, v});
      pos += n;
    }
  } else {
    bad_field(where + "/values", "expected an array or {\"rle\": [...]}");
  }
  TailSpec tail;
  if (j.contains("tail")) tail = tail_from_json(j.at("tail"), where + "/tail");
  try {
    return GridFunction(std::move(grid), std::move(runs), tail);
  } catch (const Error& e) {
    bad_field(where, e.what());
  }
}

Json to_json(const FamilySpec& family) {
  Json members = Json::array();
  for (const GridFunction& f : family.members) members.push_back(to_json(f));
  Json labels = Json::array();
  for (std::size_t i = 0; i < family.size(); ++i)
    labels.push_back(family.label(i));
  return {{"p", family.params.p}, {"members", members}, {"labels", labels}};
}

FamilySpec family_from_json(const Json& j, std::optional<double> p) {
  const Json& members = field(j, "members", "");
  if (!members.is_array()) bad_field("/members", "expected an array");
  if (members.empty()) fail(ErrorKind::kParse, "nonempty family required");
  FamilySpec out;
  out.params.p = p ? *p : (j.contains("p") ? number(j.at("p"), "/p") : 1.0);
  for (std::size_t i = 0; i < members.size(); ++i)
    out.members.push_back(
        function_from_json(members[i], "/members/" + std::to_string(i)));
  if (j.contains("labels")) {
    const Json& labels = j.at("labels");
    if (!labels.is_array() || labels.size() != members.size())
      bad_field("/labels", "expected one label per member");
    for (std::size_t i = 0; i < labels.size(); ++i)
      out.labels.push_back(integer(labels[i], "/labels/" + std::to_string(i)));
  }
  return out;
}

Json to_json(const ConditionEntry& e) {
  Json scan = {{"lo", e.scan.lo}, {"hi", e.scan.hi},
               {"candidates", e.scan.candidates},
               {"horizon_members", e.scan.horizon_members}};
  if (e.condition == ConditionId::kTranslation ||
      e.condition == ConditionId::kLpTranslation)
    scan["lattice"] = {{"step", e.scan.lattice.step},
                       {"count", e.scan.lattice.count}};
  Json j = {{"condition", to_string(e.condition)},
            {"eps", e.eps},
            {"p", e.p},
            {"verdict", to_string(e.verdict)},
            {"witness", optional_number(e.witness)},
            {"offender", offender_json(e.offender)},
            {"scan", scan}};
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

Json to_json(const ConditionReport& r) {
  Json entries = Json::array();
  for (const ConditionEntry& e : r.entries) entries.push_back(to_json(e));
  return {{"family", r.family},
          {"p", r.p},
          {"sample_size", r.sample_size},
          {"eps", r.eps},
          {"entries", entries},
          {"verdict", r.candidate_totally_bounded
                          ? "candidate totally bounded"
                          : "not totally bounded"}};
}

Json to_json(const EpsNet& net, bool with_centers) {
  Json j = {{"eps", net.radius},
            {"metric", to_string(net.metric)},
            {"p", net.p},
            {"size", net.size()},
            {"center_indices", net.center_members},
            {"assignment", net.assignment},
            {"max_assigned_distance", net.max_assigned_distance},
            {"radius_semantics",
             "member-centred open balls of radius eps"}};
  if (net.truncation_level) j["truncation_level"] = *net.truncation_level;
  if (net.max_chain_bound) j["max_chain_bound"] = *net.max_chain_bound;
  if (with_centers) {
    Json c = Json::array();
    for (const GridFunction& f : net.centers) c.push_back(to_json(f));
    j["centers"] = c;
  }
  return j;
}

Json to_json(const ExceptionalSet& s) {
  Json sets = Json::array();
  for (const MeasurableSet& m : s.sets) sets.push_back(set_json(m));
  return {{"budget", s.budget}, {"sets", sets}};
}

Json to_json(const EquiboundedCertificate& c) {
  return {{"pass", c.pass}, {"level", optional_number(c.level)},
          {"exceptional", to_json(c.exceptional)}, {"check", to_json(c.check)}};
}

Json to_json(const EquicontinuityCertificate& c) {
  Json j = {{"pass", c.pass}, {"eps", c.eps}, {"delta", c.delta},
            {"exceptional", to_json(c.exceptional)},
            {"offender", c.offender ? Json(*c.offender) : Json(nullptr)},
            {"violation", pair_json(c.violation)},
            {"incompleteness",
             "sound but possibly incomplete: oscillation collars may exceed "
             "the smallest admissible exceptional set"}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json to_json(const CrosscheckReport& r) {
  Json box = Json::array();
  for (const Interval& i : r.e) box.push_back({i.lo, i.hi});
  Json a = Json::array();
  for (const auto& x : r.continuity_to_translation)
    a.push_back({{"eps", x.eps}, {"eps_tilde", x.eps_tilde},
                 {"delta", optional_number(x.delta)}, {"r", x.r},
                 {"symmetric_difference", x.symmetric_difference},
                 {"shifts_checked", x.shifts_checked},
                 {"max_integral", x.max_integral},
                 {"status", to_string(x.status)}});
  Json b = Json::array();
  for (const auto& x : r.boundedness_to_continuity)
    b.push_back({{"eps", x.eps}, {"net_radius", x.net_radius},
                 {"net_size", x.net_size}, {"delta", optional_number(x.delta)},
                 {"status", to_string(x.status)}});
  Json t = Json::array();
  for (const auto& e : r.translation) t.push_back(to_json(e));
  return {{"E", box}, {"measure_E", r.measure_e},
          {"continuity_to_translation", a},
          {"boundedness_to_continuity", b}, {"translation", t}};
}

Json parse(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream os;
    os << source << ":" << line << ":" << col << ": syntax error";
    fail(ErrorKind::kParse, os.str());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kParse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::kInvalidArgument, "cannot write '" + path + "'");
  out << dump(j);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace asymlp::io

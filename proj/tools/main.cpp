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

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "asymlp/asymlp.hpp"

namespace {

using asymlp::ConditionId;
using asymlp::Error;
using asymlp::ErrorKind;
using asymlp::FamilySpec;
using asymlp::io::Json;

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCondition = 2;

struct FamilyArgs {
  std::string file;
  std::string gen;
  std::optional<double> p;
};

void add_family_options(CLI::App* cmd, FamilyArgs& a) {
  auto* file = cmd->add_option("--family", a.file, "Family file (JSON)");
  auto* gen = cmd->add_option(
      "--gen", a.gen,
      "Generator spec, e.g. u:k=1..64,p=1 (families f g h u v sin zero)");
  file->excludes(gen);
  cmd->add_option("--p", a.p, "Exponent p >= 1 (default: from input, else 1)");
}

FamilySpec load_family(const FamilyArgs& a) {
  if (a.file.empty() == a.gen.empty())
    throw CLI::ValidationError("exactly one of --family or --gen is required");
  FamilySpec f;
  if (!a.gen.empty()) {
    asymlp::NormParams params;
    const auto spec = asymlp::GeneratorSpec::parse(a.gen);
    if (a.p) {
      params.p = *a.p;
      asymlp::GeneratorSpec s = spec;
      if (!s.params.count("p")) s.params["p"] = *a.p;
      f = asymlp::examples::generate(s, params);
      f.params.p = *a.p;
    } else {
      f = asymlp::examples::generate(spec, params);
    }
  } else {
    f = asymlp::io::family_from_json(asymlp::io::read_file(a.file), a.p);
  }
  f.validate();
  return f;
}

asymlp::ShiftLattice parse_shifts(const std::string& text) {
  asymlp::ShiftLattice lat;
  if (text.empty()) return lat;
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) {
      lat.count = std::stoll(text);
    } else {
      const std::string step = text.substr(0, comma);
      lat.step = step == "auto" ? 0.0 : std::stod(step);
      lat.count = std::stoll(text.substr(comma + 1));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--shifts expects STEP,COUNT or COUNT");
  }
  if (lat.count < 1 || lat.step < 0.0)
    throw CLI::ValidationError("--shifts needs COUNT >= 1 and STEP >= 0");
  return lat;
}

std::string fmt(double x) {
  if (std::isinf(x)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty()) return;
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error(ErrorKind::kInvalidArgument, "cannot write '" + out + "'");
  f << text;
}

std::string entry_line(const asymlp::ConditionEntry& e) {
  std::ostringstream os;
  os << "eps=" << fmt(e.eps) << "  " << asymlp::to_string(e.condition) << ": "
     << asymlp::to_string(e.verdict);
  if (e.witness) {
    os << "  witness="
       << (e.condition == ConditionId::kLevel ? "M" :
           e.condition == ConditionId::kTail || e.condition == ConditionId::kLpTail
               ? "R" : "r")
       << "=" << fmt(*e.witness);
  }
  if (e.offender)
    os << "  offender k=" << e.offender->label << " value=" << fmt(e.offender->value)
       << " at " << fmt(e.offender->at);
  return os.str();
}

// ---------------------------------------------------------------- norm

int run_norm(const FamilyArgs& fa, const std::string& out,
             const std::string& save) {
  const FamilySpec f = load_family(fa);
  Json rows = Json::array();
  std::cout << "index  label  alpha_norm  lp_norm\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double a = asymlp::alpha_norm(f.members[i], f.params);
    const double l = asymlp::lp_norm(f.members[i], f.params);
    std::cout << i << "  " << f.label(i) << "  " << fmt(a) << "  " << fmt(l)
              << "\n";
    rows.push_back({{"index", i}, {"label", f.label(i)}, {"alpha_norm", a},
                    {"lp_norm", std::isinf(l) ? Json("infinite") : Json(l)}});
  }
  emit(out, asymlp::io::dump({{"p", f.params.p}, {"rows", rows}}));
  emit(save, asymlp::io::dump(asymlp::io::to_json(f)));
  return kExitPass;
}

// ---------------------------------------------------------------- check

int run_check(const FamilyArgs& fa, std::vector<double> eps,
              const asymlp::ScanOptions& opts, const std::string& out) {
  const FamilySpec f = load_family(fa);
  if (eps.empty()) eps = {0.5};
  const auto report = asymlp::full_report(f, eps, opts);
  std::cout << "family " << report.family << "  p=" << fmt(report.p)
            << "  K=" << report.sample_size << "\n";
  for (const auto& e : report.entries) std::cout << entry_line(e) << "\n";
  std::cout << "verdict: "
            << (report.candidate_totally_bounded ? "candidate totally bounded"
                                                 : "not totally bounded")
            << "\n";
  emit(out, asymlp::io::dump(asymlp::io::to_json(report)));
  return report.candidate_totally_bounded ? kExitPass : kExitCondition;
}

// ---------------------------------------------------------------- net

int run_net(const FamilyArgs& fa, double eps, const std::string& method,
            const std::string& metric, const asymlp::ScanOptions& opts,
            const std::string& out) {
  const FamilySpec f = load_family(fa);
  asymlp::EpsNet net;
  if (method == "greedy") {
    net = asymlp::greedy_net(f, eps,
                             metric == "lp" ? asymlp::Metric::kLp
                                            : asymlp::Metric::kAlpha);
  } else {
    net = asymlp::truncation_lift_net(f, eps, opts);
  }
  const auto check = asymlp::verify_covering(f, net);
  std::cout << "method " << method << "  eps=" << fmt(eps)
            << "  metric=" << asymlp::to_string(net.metric) << "\n"
            << "net size " << net.size() << "\n"
            << "max assigned distance " << fmt(net.max_assigned_distance)
            << "  slack " << fmt(check.worst_slack) << "\n";
  if (net.truncation_level)
    std::cout << "truncation level M=" << fmt(*net.truncation_level)
              << "  chain bound " << fmt(*net.max_chain_bound) << "\n";
  std::cout << "covering " << (check.pass ? "verified" : "FAILED") << "\n";
  Json j = asymlp::io::to_json(net);
  j["verified"] = check.pass;
  j["worst_slack"] = check.worst_slack;
  j["method"] = method;
  emit(out, asymlp::io::dump(j));
  return check.pass ? kExitPass : kExitCondition;
}

// ---------------------------------------------------------------- examples

struct ExampleRow {
  const char* name;
  const char* gen;
  bool expect[3];
};

constexpr ExampleRow kRows[] = {
    {"f", "f:k=1..100,p=1", {true, true, false}},
    {"g", "g:k=1..32,p=1", {false, true, true}},
    {"h", "h:k=1..10,kgrid=11,p=1", {true, false, true}},
    {"u", "u:k=1..64,p=1", {true, true, true}},
    {"v", "v:k=1..8,p=2,h=0.000244140625", {true, true, true}},
};

const char* mark(const asymlp::ConditionEntry* e) {
  if (e == nullptr || e->verdict == asymlp::Verdict::kInapplicable) return "n/a";
  return e->pass() ? "✓" : "✗";
}

int run_examples(double eps, const std::string& out) {
  std::ostringstream md;
  md << "| family | generator | tail | translation | level "
        "| lp-tail | lp-translation | expected tail/translation/level | agrees |\n"
     << "|---|---|---|---|---|---|---|---|---|\n";
  bool all = true;
  for (const ExampleRow& row : kRows) {
    asymlp::NormParams params;
    const FamilySpec f =
        asymlp::examples::generate(asymlp::GeneratorSpec::parse(row.gen), params);
    const double e[] = {eps};
    const auto r = asymlp::full_report(f, e);
    const ConditionId ids[] = {ConditionId::kTail, ConditionId::kTranslation,
                               ConditionId::kLevel};
    bool agrees = true;
    std::string expected;
    for (int c = 0; c < 3; ++c) {
      agrees &= r.find(ids[c], eps)->pass() == row.expect[c];
      expected += row.expect[c] ? "✓" : "✗";
    }
    all &= agrees;
    md << "| " << row.name << " | `" << row.gen << "` | "
       << mark(r.find(ConditionId::kTail, eps)) << " | "
       << mark(r.find(ConditionId::kTranslation, eps)) << " | "
       << mark(r.find(ConditionId::kLevel, eps)) << " | "
       << mark(r.find(ConditionId::kLpTail, eps)) << " | "
       << mark(r.find(ConditionId::kLpTranslation, eps)) << " | " << expected
       << " | " << (agrees ? "yes" : "no") << " |\n";
  }
  std::cout << md.str();
  emit(out, md.str());
  return all ? kExitPass : kExitCondition;
}

// ---------------------------------------------------------------- report

int run_report(const FamilyArgs& fa, std::vector<double> eps,
               std::vector<double> deltas, const asymlp::ScanOptions& opts,
               const std::string& out) {
  const FamilySpec f = load_family(fa);
  if (eps.empty()) eps = {0.5};
  const auto conditions = asymlp::full_report(f, eps, opts);
  bool ok = conditions.candidate_totally_bounded;
  Json nets = Json::array();
  for (double e : eps) {
    const auto net = asymlp::greedy_net(f, e);
    Json j = asymlp::io::to_json(net);
    j["verified"] = asymlp::verify_covering(f, net).pass;
    nets.push_back(j);
  }
  Json doc = {{"conditions", asymlp::io::to_json(conditions)}, {"nets", nets}};
  bool bounded = true;
  for (const auto& m : f.members) bounded &= m.tail().vanishes();
  std::cout << "family " << conditions.family << "  K=" << conditions.sample_size
            << "\n";
  for (const auto& e : conditions.entries) std::cout << entry_line(e) << "\n";
  if (bounded) {
    Json eb = Json::array();
    for (double e : eps) {
      const auto c = asymlp::almost_equibounded_certificate(f, e, opts);
      ok &= c.pass;
      std::cout << "eps=" << fmt(e) << "  almost-equibounded: "
                << (c.pass ? "pass" : "fail") << "\n";
      eb.push_back(asymlp::io::to_json(c));
    }
    doc["equibounded"] = eb;
    if (!deltas.empty()) {
      const auto cc = asymlp::corollary_crosscheck(f, eps, deltas, opts.shifts);
      for (const auto& b : cc.boundedness_to_continuity) {
        ok &= b.delta.has_value();
        std::cout << "eps=" << fmt(b.eps) << "  almost-equicontinuous: "
                  << (b.delta ? "pass at delta=" + fmt(*b.delta) : "fail")
                  << "\n";
      }
      for (const auto& a : cc.continuity_to_translation)
        std::cout << "eps=" << fmt(a.eps)
                  << "  equicontinuity => translation: "
                  << asymlp::to_string(a.status) << "\n";
      doc["corollary"] = asymlp::io::to_json(cc);
    }
  }
  doc["pass"] = ok;
  std::cout << "overall: " << (ok ? "pass" : "fail") << "\n";
  emit(out, asymlp::io::dump(doc));
  return ok ? kExitPass : kExitCondition;
}

void configure_threads() {
  if (const char* env = std::getenv("ASYMLP_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n >= 0) asymlp::set_thread_count(static_cast<std::size_t>(n));
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring ASYMLP_THREADS='" << env << "'\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "asymlp: F-norms, compactness conditions and eps-nets for piecewise-"
      "constant functions.\nEnvironment: ASYMLP_THREADS sets the worker "
      "thread count (default: hardware concurrency).\nExit status: 0 pass, "
      "2 condition failure, 1 usage or parse error."};
  app.require_subcommand(1);

  FamilyArgs fa;
  std::string out;
  std::vector<double> eps;
  std::vector<double> deltas;
  std::string shifts;
  std::string method = "greedy";
  std::string metric = "alpha";
  std::string save;
  asymlp::ScanOptions opts;
  double r_max = 0.0, m_max = 0.0;

  auto add_scan = [&](CLI::App* cmd) {
    cmd->add_option("--eps", eps, "Tolerance eps (repeatable; default 0.5)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--shifts", shifts,
                    "Shift lattice STEP,COUNT or COUNT; STEP 'auto' or "
                    "omitted = finest member spacing (default auto,16)");
    cmd->add_option("--r-max", r_max, "Override the tail search bound R_max");
    cmd->add_option("--m-max", m_max, "Override the level search bound M_max");
  };

  auto* norm = app.add_subcommand("norm", "Per-member alpha and L^p norms");
  add_family_options(norm, fa);
  norm->add_option("--out", out, "Write the table as JSON");
  norm->add_option("--save-family", save, "Write the family as a JSON file");

  auto* check = app.add_subcommand("check", "Run the compactness conditions");
  add_family_options(check, fa);
  add_scan(check);
  check->add_option("--out", out, "Write the condition report (JSON)");

  auto* net = app.add_subcommand("net", "Build and verify an eps-net");
  add_family_options(net, fa);
  add_scan(net);
  net->add_option("--method", method, "greedy | truncation-lift")
      ->check(CLI::IsMember({"greedy", "truncation-lift"}));
  net->add_option("--metric", metric, "alpha | lp (greedy only)")
      ->check(CLI::IsMember({"alpha", "lp"}));
  net->add_option("--out", out, "Write the net (JSON)");

  bool table = true;
  auto* ex = app.add_subcommand("examples", "Verdict table for the example families");
  ex->add_flag("--table", table, "Print the markdown table (default)");
  ex->add_option("--eps", eps, "Tolerance eps (default 0.5)")
      ->check(CLI::PositiveNumber);
  ex->add_option("--out", out, "Write the table to a file");

  auto* rep = app.add_subcommand(
      "report", "Conditions, nets and bounded-domain certificates");
  add_family_options(rep, fa);
  add_scan(rep);
  rep->add_option("--delta", deltas,
                  "Equicontinuity window delta (repeatable)")
      ->check(CLI::PositiveNumber);
  rep->add_option("--out", out, "Write the full report (JSON)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  configure_threads();
  try {
    opts.shifts = parse_shifts(shifts);
    if (r_max > 0.0) opts.r_max = r_max;
    if (m_max > 0.0) opts.m_max = m_max;
    if (*norm) return run_norm(fa, out, save);
    if (*check) return run_check(fa, eps, opts, out);
    if (*net) return run_net(fa, eps.empty() ? 0.5 : eps.front(), method,
                             metric, opts, out);
    if (*ex) return run_examples(eps.empty() ? 0.5 : eps.front(), out);
    if (*rep) return run_report(fa, eps, deltas, opts, out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::kConditionFailure ? kExitCondition
                                                    : kExitUsage;
  }
  return kExitUsage;
}

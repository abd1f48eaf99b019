// Copyright 2026 The BellLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// belllab command-line front end.
//
//   belllab chsh  --c1 X --c2 Y (--gisin | --a T [P] --b T [P] --a-prime T [P] --b-prime T [P])
//   belllab scan  --plane xy --concurrence C [--grid N] [--out FILE] [--format csv|json]
//   belllab lhv   --model bell-sign --samples N --seed S (--gisin-for C1 C2 | explicit settings)
//   belllab agr   [--c1 X --c2 Y] [settings] --pairs N [--efficiency E] [--misalignment M] [--damping V]
//   belllab selftest
//
// Exit codes: 0 success, 1 a checked bound failed, 2 usage or domain error,
// 3 I/O error.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "belllab/belllab.hpp"

namespace {

using namespace belllab;

constexpr double kPi = 3.14159265358979323846;
constexpr std::uint64_t kDefaultSeed = 20260101;

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kIoError = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Options shared by every subcommand.
struct CommonOptions {
  bool radians = false;
  std::string format;
  std::string out;
  unsigned threads = 1;
};

void add_common(CLI::App* cmd, CommonOptions& opt, const std::string& default_format) {
  opt.format = default_format;
  cmd->add_option("--config", "Flat key=value file of option defaults; command-line flags take precedence");
  cmd->add_flag("--radians", opt.radians, "Angles are given in radians (default: degrees)");
  cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--out", opt.out, "Write the report to this file instead of stdout");
  cmd->add_option("--threads", opt.threads, "Worker threads (results do not depend on it)")->check(CLI::Range(1u, 1024u));
}

CLI::Option* add_seed(CLI::App* cmd, std::uint64_t& seed) {
  seed = kDefaultSeed;
  return cmd->add_option("--seed", seed, "Random seed (default: $BELLLAB_SEED or built-in)")->envname("BELLLAB_SEED");
}

// --a THETA [PHI] style analyzer options.
struct SettingsOptions {
  std::vector<double> a, b, a_prime, b_prime;

  void add(CLI::App* cmd) {
    cmd->add_option("--a", a, "Analyzer a: polar angle [azimuth]")->expected(1, 2);
    cmd->add_option("--b", b, "Analyzer b: polar angle [azimuth]")->expected(1, 2);
    cmd->add_option("--a-prime", a_prime, "Analyzer a': polar angle [azimuth]")->expected(1, 2);
    cmd->add_option("--b-prime", b_prime, "Analyzer b': polar angle [azimuth]")->expected(1, 2);
  }

  bool any() const { return !a.empty() || !b.empty() || !a_prime.empty() || !b_prime.empty(); }
  bool all() const { return !a.empty() && !b.empty() && !a_prime.empty() && !b_prime.empty(); }

  MeasurementSettings resolve(bool radians) const {
    if (!all()) throw InvalidArgument("explicit settings need all of --a, --b, --a-prime, --b-prime");
    const double scale = radians ? 1.0 : kPi / 180.0;
    auto vec = [&](const std::vector<double>& v) {
      return make_unit_vector(v[0] * scale, v.size() > 1 ? v[1] * scale : 0.0);
    };
    return {vec(a), vec(b), vec(a_prime), vec(b_prime)};
  }
};

// Accepts coefficients normalized to ~7 significant digits and rescales them.
std::pair<double, double> normalized_coefficients(double c1, double c2) {
  const double n2 = c1 * c1 + c2 * c2;
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > 1e-6)
    throw InvalidArgument(fmt::format("c1^2 + c2^2 = {:.9g}, expected 1", n2));
  const double n = std::sqrt(n2);
  return {c1 / n, c2 / n};
}

double degrees(double rad) { return rad * 180.0 / kPi; }

// Polar and azimuth angle of a unit vector.
std::pair<double, double> spherical(const UnitVector3& v) {
  const double theta = std::acos(std::clamp(v.z(), -1.0, 1.0));
  double phi = std::atan2(v.y(), v.x());
  if (phi < 0.0) phi += 2.0 * kPi;
  if (std::abs(v.x()) < 1e-15 && std::abs(v.y()) < 1e-15) phi = 0.0;
  return {theta, phi};
}

nlohmann::json settings_json(const MeasurementSettings& s) {
  nlohmann::json j = to_json(s);
  auto add = [&](const char* key, const UnitVector3& v) {
    const auto [t, p] = spherical(v);
    j[std::string(key) + "_angles"] = {{"theta_rad", t}, {"phi_rad", p}, {"theta_deg", degrees(t)}, {"phi_deg", degrees(p)}};
  };
  add("a", s.a);
  add("b", s.b);
  add("a_prime", s.a_prime);
  add("b_prime", s.b_prime);
  return j;
}

std::string settings_text(const MeasurementSettings& s) {
  std::string out = "settings (theta, phi):\n";
  auto line = [&](const char* name, const UnitVector3& v) {
    const auto [t, p] = spherical(v);
    out += fmt::format("  {:<3} ({:10.4f}, {:10.4f}) deg  ({:.9f}, {:.9f}) rad  vec=({:.9f}, {:.9f}, {:.9f})\n", name,
                       degrees(t), degrees(p), t, p, v.x(), v.y(), v.z());
  };
  line("a", s.a);
  line("b", s.b);
  line("a'", s.a_prime);
  line("b'", s.b_prime);
  return out;
}

// Rerun flags with every angle spelled out in radians.
std::string settings_flags(const MeasurementSettings& s) {
  std::string out;
  auto one = [&](const char* flag, const UnitVector3& v) {
    const auto [t, p] = spherical(v);
    out += fmt::format(" {} {:.17g} {:.17g}", flag, t, p);
  };
  one("--a", s.a);
  one("--b", s.b);
  one("--a-prime", s.a_prime);
  one("--b-prime", s.b_prime);
  return out + " --radians";
}

void emit(const CommonOptions& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw IoError("cannot open " + opt.out + " for writing");
  f << text;
  f.close();
  if (!f) throw IoError("failed writing " + opt.out);
}

// Splices `key=value` lines of a --config file into the argument list as
// flags, skipping keys the command line already sets.
std::vector<std::string> expand_config(const CLI::App& app, std::vector<std::string> args) {
  auto it = std::find_if(args.begin(), args.end(), [&](const std::string& a) {
    return app.get_subcommand_no_throw(a) != nullptr;
  });
  if (it == args.end()) return args;
  const CLI::App* cmd = app.get_subcommand_no_throw(*it);
  const auto sub_pos = static_cast<std::size_t>(it - args.begin());

  std::string path;
  for (std::size_t i = sub_pos + 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;

  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path);
  const auto items = CLI::ConfigINI().from_config(in);

  auto given = [&](const CLI::Option* opt) {
    for (const auto& name : opt->get_lnames())
      for (std::size_t i = sub_pos + 1; i < args.size(); ++i)
        if (args[i] == "--" + name || args[i].rfind("--" + name + "=", 0) == 0) return true;
    return false;
  };

  std::vector<std::string> extra;
  for (const auto& item : items) {
    if (item.name == "++" || item.name == "--") continue;
    if (!item.parents.empty()) throw InvalidArgument("config file " + path + ": sections are not supported");
    const CLI::Option* opt = cmd->get_option_no_throw("--" + item.name);
    if (opt == nullptr || item.name == "config")
      throw InvalidArgument("config file " + path + ": unknown key '" + item.name + "' for " + cmd->get_name());
    if (given(opt)) continue;
    if (opt->get_expected_max() == 0) {
      if (!item.inputs.empty() && (item.inputs[0] == "true" || item.inputs[0] == "1")) extra.push_back("--" + item.name);
      continue;
    }
    extra.push_back("--" + item.name);
    extra.insert(extra.end(), item.inputs.begin(), item.inputs.end());
  }
  args.insert(args.begin() + static_cast<std::ptrdiff_t>(sub_pos) + 1, extra.begin(), extra.end());
  return args;
}

// ---------------------------------------------------------------- chsh

struct ChshArgs {
  CommonOptions common;
  double c1 = 0.0, c2 = 0.0;
  bool gisin = false;
  bool permissive = false;
  SettingsOptions settings;
};

int run_chsh(const ChshArgs& args) {
  const auto [c1, c2] = normalized_coefficients(args.c1, args.c2);
  const auto state =
      canonical_state(c1, c2, args.permissive ? SeparablePolicy::kAllow : SeparablePolicy::kReject);
  if (args.gisin == args.settings.any())
    throw InvalidArgument("choose exactly one of --gisin or explicit --a/--b/--a-prime/--b-prime");
  const MeasurementSettings s = args.gisin ? gisin_settings(c1, c2) : args.settings.resolve(args.common.radians);
  const auto p = chsh_correlations(state, s);
  const double value = p.bell_form();
  const double sym = p.symmetric_form();
  const double maxv = max_violation(c1, c2);
  const bool violated = value > 2.0 + 1e-12;

  if (args.common.format == "json") {
    nlohmann::json j{{"version", kVersionTag},
                     {"command", "chsh"},
                     {"c1", c1},
                     {"c2", c2},
                     {"concurrence", 2.0 * std::abs(c1 * c2)},
                     {"settings", settings_json(s)},
                     {"P", {{"a,b", p.ab}, {"a,b'", p.ab_prime}, {"a',b", p.a_prime_b}, {"a',b'", p.a_prime_b_prime}}},
                     {"S", value},
                     {"S_symmetric", sym},
                     {"max_violation", maxv},
                     {"violated", violated}};
    emit(args.common, j.dump(2) + "\n");
    return kOk;
  }
  std::string t = fmt::format("{} chsh\nstate: c1={:.9f} c2={:.9f} concurrence={:.9f}\n", kVersionTag, c1, c2,
                              2.0 * std::abs(c1 * c2));
  t += settings_text(s);
  t += fmt::format("P(a,b)   = {:+.9f}\nP(a,b')  = {:+.9f}\nP(a',b)  = {:+.9f}\nP(a',b') = {:+.9f}\n", p.ab, p.ab_prime,
                   p.a_prime_b, p.a_prime_b_prime);
  t += fmt::format("S = {:.6f}\nS_symmetric = {:.6f}\nmax_violation = {:.6f}\nviolated = {}\n", value, sym, maxv,
                   violated ? "true" : "false");
  emit(args.common, t);
  return kOk;
}

// ---------------------------------------------------------------- scan

struct ScanArgs {
  CommonOptions common;
  std::string plane = "xy";
  std::optional<double> concurrence;
  std::optional<double> c1, c2;
  int sign = 1;
  std::size_t grid = 512;
};

int run_scan(const ScanArgs& args) {
  const Plane plane = plane_from_name(args.plane);
  double c1 = 0.0, c2 = 0.0;
  if (args.concurrence) {
    if (args.c1 || args.c2) throw InvalidArgument("give either --concurrence or --c1/--c2, not both");
    const auto k = coefficients_for_concurrence(*args.concurrence);
    c1 = k[0];
    c2 = args.sign < 0 ? -k[1] : k[1];
  } else {
    if (!args.c1 || !args.c2) throw InvalidArgument("scan needs --concurrence or both --c1 and --c2");
    std::tie(c1, c2) = normalized_coefficients(*args.c1, *args.c2);
  }
  const auto g = scan_region(plane, c1, c2, args.grid);

  if (!args.common.out.empty()) {
    std::ofstream f(args.common.out, std::ios::binary);
    if (!f) throw IoError("cannot open " + args.common.out + " for writing");
    if (args.common.format == "json")
      f << grid_to_json(g).dump() << "\n";
    else
      write_grid_csv(f, g);
    f.close();
    if (!f) throw IoError("failed writing " + args.common.out);
  }
  std::cout << fmt::format("{} scan plane={} c1={:.9f} c2={:.9f} concurrence={:.9f} grid={}\n", kVersionTag,
                           plane_name(plane), c1, c2, 2.0 * std::abs(c1 * c2), args.grid);
  std::cout << fmt::format("violating_fraction = {:.6f}\n", g.violating_fraction);
  return kOk;
}

// ---------------------------------------------------------------- lhv

struct LhvArgs {
  CommonOptions common;
  std::string model = "bell-sign";
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = kDefaultSeed;
  std::vector<double> gisin_for;
  SettingsOptions settings;
  double tolerance_sigma = 5.0;
};

int run_lhv(const LhvArgs& args) {
  const AnyLhvModel model = lhv_model_from_name(args.model);
  MeasurementSettings s = [&] {
    if (!args.gisin_for.empty() == args.settings.any())
      throw InvalidArgument("choose exactly one of --gisin-for or explicit settings");
    if (!args.gisin_for.empty()) {
      const auto [c1, c2] = normalized_coefficients(args.gisin_for[0], args.gisin_for[1]);
      return gisin_settings(c1, c2);
    }
    return args.settings.resolve(args.common.radians);
  }();
  const auto r = std::visit([&](const auto& m) { return chsh_lhv(m, s, args.samples, args.seed, args.common.threads); },
                            model);
  const bool pass = r.within_bound(args.tolerance_sigma);
  const std::string rerun = fmt::format("belllab lhv --model {} --samples {} --seed {}{}", args.model, args.samples,
                                        args.seed, settings_flags(s));

  if (args.common.format == "json") {
    nlohmann::json es = nlohmann::json::array();
    for (std::size_t k = 0; k < 4; ++k)
      es.push_back({{"pair", kPairLabels[k]}, {"value", r.correlations[k].value}, {"stderr", r.correlations[k].std_error}});
    nlohmann::json j{{"version", kVersionTag}, {"command", rerun},      {"model", args.model},
                     {"seed", args.seed},      {"samples", args.samples}, {"settings", settings_json(s)},
                     {"E", es},                {"S", r.value},         {"stderr", r.std_error},
                     {"bound", 2.0},           {"tolerance_sigma", args.tolerance_sigma}, {"pass", pass}};
    emit(args.common, j.dump(2) + "\n");
  } else {
    std::string t = fmt::format("{} lhv\nrerun: {}\nmodel={} samples={} seed={}\n", kVersionTag, rerun, args.model,
                                args.samples, args.seed);
    t += settings_text(s);
    for (std::size_t k = 0; k < 4; ++k)
      t += fmt::format("E({:<5}) = {:+.9f} +- {:.9f}\n", kPairLabels[k], r.correlations[k].value,
                       r.correlations[k].std_error);
    t += fmt::format("S = {:.9f} +- {:.9f}\nbound: S <= 2 + {}*sigma: {}\n", r.value, r.std_error, args.tolerance_sigma,
                     pass ? "pass" : "FAIL");
    emit(args.common, t);
  }
  return pass ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- agr

struct AgrArgs {
  CommonOptions common;
  double c1 = 1.0 / std::sqrt(2.0);
  double c2 = -1.0 / std::sqrt(2.0);
  SettingsOptions settings;
  std::uint64_t pairs = 1'000'000;
  double efficiency = 1.0;
  double misalignment = 0.0;
  double damping = 1.0;
  std::uint64_t seed = kDefaultSeed;
};

int run_agr(const AgrArgs& args) {
  const auto [c1, c2] = normalized_coefficients(args.c1, args.c2);
  const auto state = canonical_state(c1, c2, SeparablePolicy::kAllow);
  const MeasurementSettings s =
      args.settings.any() ? args.settings.resolve(args.common.radians) : optimal_coplanar_settings();
  const double sigma = args.common.radians ? args.misalignment : args.misalignment * kPi / 180.0;
  ExperimentConfig cfg{state, s, args.pairs, args.efficiency, sigma, args.damping, args.seed, args.common.threads};
  const auto r = estimate_S(cfg);

  const std::string rerun = fmt::format(
      "belllab agr --c1 {:.17g} --c2 {:.17g} --pairs {} --efficiency {:.17g} --misalignment {:.17g} --damping {:.17g} "
      "--seed {}{}",
      c1, c2, args.pairs, args.efficiency, sigma, args.damping, args.seed, settings_flags(s));
  nlohmann::json report = agr_report(cfg, r);
  report["command"] = rerun;
  report["settings"] = settings_json(s);

  if (args.common.format == "json") {
    emit(args.common, report.dump(2) + "\n");
  } else {
    std::string t = fmt::format("{} agr\nrerun: {}\nseed={} pairs/setting={} efficiency={} misalignment={:.6g} rad "
                                "({:.6g} deg) damping={}\n",
                                kVersionTag, rerun, args.seed, args.pairs, args.efficiency, sigma, degrees(sigma),
                                args.damping);
    t += settings_text(s);
    for (std::size_t k = 0; k < 4; ++k) {
      const auto& c = r.counts[k];
      t += fmt::format("{:<5}  R++={} R+-={} R-+={} R--={}  E={:+.6f} +- {:.6f}\n", kPairLabels[k], c.r_pp, c.r_pm,
                       c.r_mp, c.r_mm, r.correlations[k].value, r.correlations[k].std_error);
    }
    t += fmt::format("S = {:.6f} +- {:.6f}\n|S| > 2: {}\n", r.s_value, r.std_error,
                     std::abs(r.s_value) > 2.0 ? "true" : "false");
    emit(args.common, t);
  }
  return kOk;
}

// ---------------------------------------------------------------- selftest

int run_selftest() {
  int failures = 0;
  auto check = [&](const char* name, bool ok) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
    if (!ok) ++failures;
  };
  const double h = 1.0 / std::sqrt(2.0);

  check("max violation at Gisin settings",
        std::abs(chsh_value(canonical_state(h, h), gisin_settings(h, h)) - 2.0 * std::sqrt(2.0)) < 1e-9);
  {
    const auto s = canonical_state(0.6, -0.8);
    const auto a = make_unit_vector(0.3, 1.1), b = make_unit_vector(2.0, 4.0);
    check("closed form matches matrix expectation",
          std::abs(correlation_closed(0.6, -0.8, a, b) - correlation_matrix(s, a, b)) < 1e-12);
  }
  check("LHV bound (bell-sign)", chsh_lhv(BellSignModel{}, gisin_settings(h, h), 100'000, 1).within_bound(5.0));
  {
    ExperimentConfig cfg{singlet_state(), optimal_coplanar_settings(), 200'000, 1.0, 0.0, 1.0, 1, 1};
    const auto r = estimate_S(cfg);
    check("simulated experiment violates CHSH", std::abs(r.s_value) > 2.0 + 5.0 * r.std_error);
  }
  check("xy scan fraction at C = 1",
        std::abs(scan_region(Plane::kXY, h, h, 256).violating_fraction - 0.25) <= 2.0 / 256);
  std::cout << (failures == 0 ? "selftest: all checks passed\n" : "selftest: FAILED\n");
  return failures == 0 ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bell inequality laboratory: CHSH quantum predictions, LHV Monte Carlo, "
               "coincidence-experiment simulation and violation-region scans"};
  app.set_version_flag("--version", std::string(kVersionTag));
  app.require_subcommand(1);

  ChshArgs chsh;
  auto* chsh_cmd = app.add_subcommand("chsh", "Quantum CHSH value for c1|01> + c2|10>");
  add_common(chsh_cmd, chsh.common, "text");
  chsh_cmd->add_option("--c1", chsh.c1, "Coefficient of |01>")->required();
  chsh_cmd->add_option("--c2", chsh.c2, "Coefficient of |10>")->required();
  chsh_cmd->add_flag("--gisin", chsh.gisin, "Use the maximizing settings for this state");
  chsh_cmd->add_flag("--permissive", chsh.permissive, "Accept separable states (c1*c2 = 0)");
  chsh.settings.add(chsh_cmd);

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Grid scan of the violation region in one analyzer plane");
  add_common(scan_cmd, scan.common, "csv");
  scan_cmd->add_option("--plane", scan.plane, "xz, xy or yz")->check(CLI::IsMember({"xz", "xy", "yz"}));
  scan_cmd->add_option("--concurrence", scan.concurrence, "Degree of entanglement 2|c1 c2| in [0, 1]");
  scan_cmd->add_option("--sign", scan.sign, "Sign of c1*c2 when --concurrence is used")->check(CLI::IsMember({-1, 1}));
  scan_cmd->add_option("--c1", scan.c1, "Coefficient of |01>");
  scan_cmd->add_option("--c2", scan.c2, "Coefficient of |10>");
  scan_cmd->add_option("--grid", scan.grid, "Cells per axis")->check(CLI::Range(std::size_t{2}, std::size_t{8192}));

  LhvArgs lhv;
  auto* lhv_cmd = app.add_subcommand("lhv", "Monte Carlo CHSH value of a local hidden-variable model");
  add_common(lhv_cmd, lhv.common, "text");
  lhv_cmd->add_option("--model", lhv.model, "bell-sign, averaged-linear or constant");
  lhv_cmd->add_option("--samples", lhv.samples, "Hidden-variable draws")->check(CLI::PositiveNumber);
  add_seed(lhv_cmd, lhv.seed);
  lhv_cmd->add_option("--gisin-for", lhv.gisin_for, "Use the quantum-optimal settings for (c1, c2)")->expected(2);
  lhv_cmd->add_option("--tolerance-sigma", lhv.tolerance_sigma, "Allowed excess over 2 in standard errors");
  lhv.settings.add(lhv_cmd);

  AgrArgs agr;
  auto* agr_cmd = app.add_subcommand("agr", "Simulated two-channel-polarizer coincidence experiment");
  add_common(agr_cmd, agr.common, "text");
  agr_cmd->add_option("--c1", agr.c1, "Coefficient of |01> (default: singlet)");
  agr_cmd->add_option("--c2", agr.c2, "Coefficient of |10> (default: singlet)");
  agr_cmd->add_option("--pairs", agr.pairs, "Emitted pairs per orientation pair")->check(CLI::PositiveNumber);
  agr_cmd->add_option("--efficiency", agr.efficiency, "Single-side detection probability in (0, 1]");
  agr_cmd->add_option("--misalignment", agr.misalignment, "Gaussian analyzer jitter width");
  agr_cmd->add_option("--damping,--visibility", agr.damping, "Correlation damping factor in [0, 1]");
  add_seed(agr_cmd, agr.seed);
  agr.settings.add(agr_cmd);

  app.add_subcommand("selftest", "Run a quick set of internal checks");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = expand_config(app, std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*chsh_cmd) return run_chsh(chsh);
    if (*scan_cmd) return run_scan(scan);
    if (*lhv_cmd) return run_lhv(lhv);
    if (*agr_cmd) return run_agr(agr);
    return run_selftest();
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const NoViolationPossible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InsufficientData& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}

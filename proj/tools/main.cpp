// sliceball: constants, sampling-based verification checks and CSV sweeps
// for the slice regular function toolkit.
//
// Exit codes: 0 = pass, 1 = check failed, 2 = usage error or hypothesis not
// met.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sliceball/bounds.hpp"
#include "sliceball/json_io.hpp"
#include "sliceball/verify.hpp"
#include "sliceball/version.hpp"

namespace {

using nlohmann::json;
using namespace sliceball;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

json tolerances_json() {
  return json{{"collision", tolerances::kCollision},
              {"covering", tolerances::kCovering},
              {"bonk", tolerances::kBonk},
              {"lindelof", tolerances::kLindelof},
              {"mobius_equality", tolerances::kMobiusEquality},
              {"hypothesis", tolerances::kHypothesis}};
}

json manifest_skeleton(const std::vector<std::string>& args, std::uint64_t seed) {
  return json{{"tool", std::string(kToolName)},
              {"version", std::string(kVersion)},
              {"argv", args},
              {"seed", seed},
              {"tolerances", tolerances_json()},
              {"checks", json::array()}};
}

void print_report_text(std::ostream& out, const VerificationReport& rep) {
  const char* outcome = rep.passed() ? "pass"
                        : rep.hypothesis_not_met() ? "hypothesis_not_met"
                                                   : "fail";
  out << "outcome: " << outcome << '\n';
  out << "margin:  " << std::setprecision(12) << rep.margin << '\n';
  out << "samples: " << rep.samples_used << '\n';
  if (rep.witness) {
    out << "witness: " << rep.witness->first << " ~ " << rep.witness->second
        << '\n';
  }
  if (!rep.note.empty()) {
    out << "note:    " << rep.note << '\n';
  }
}

int exit_code_for(const VerificationReport& rep) {
  if (rep.passed()) {
    return kExitPass;
  }
  return rep.hypothesis_not_met() ? kExitUsage : kExitFail;
}

struct CheckOptions {
  std::string fn;
  double r = 0.0;
  double target = 0.0;
  double alpha = 0.0;
  bool has_r = false;
  bool has_target = false;
  bool has_alpha = false;
  int order = SliceSeries::kMaxOrder;
  SampleConfig cfg;
  bool count_given = false;
};

std::size_t default_count(const std::string& check) {
  if (check == "lindelof") {
    return 4000;
  }
  if (check == "sharpness") {
    return 100000;
  }
  if (check == "algebra") {
    return 100;
  }
  return 20000;
}

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{
      "injective", "covering", "bonk", "lindelof", "rotation", "sharpness",
      "algebra"};
  return names;
}

VerificationReport run_named_check(const std::string& check, CheckOptions opt) {
  if (!opt.count_given) {
    opt.cfg.count = default_count(check);
  }
  const auto need_fn = [&]() -> FunctionSpec {
    if (opt.fn.empty()) {
      throw std::invalid_argument("check '" + check + "' requires --fn");
    }
    return resolve_function_spec(opt.fn, opt.order);
  };
  if (check == "injective") {
    if (!opt.has_r) {
      throw std::invalid_argument("injective requires --r");
    }
    return check_injective(need_fn().resolved, opt.r, opt.cfg);
  }
  if (check == "covering") {
    if (!opt.has_r || !opt.has_target) {
      throw std::invalid_argument("covering requires --r and --target");
    }
    return check_covering(need_fn().resolved, opt.r, opt.target, opt.cfg);
  }
  if (check == "bonk") {
    return check_bonk(need_fn().resolved, opt.cfg);
  }
  if (check == "lindelof") {
    const FunctionSpec spec = need_fn();
    const bool expect_equality = spec.source.rfind("mobius:", 0) == 0;
    return check_lindelof(spec.resolved, opt.cfg, expect_equality);
  }
  if (check == "rotation") {
    return check_rotation_covering(need_fn().resolved, opt.cfg);
  }
  if (check == "sharpness") {
    if (!opt.has_alpha) {
      throw std::invalid_argument("sharpness requires --alpha");
    }
    return landau_sharpness(opt.alpha, opt.cfg);
  }
  if (check == "algebra") {
    return check_algebra(opt.cfg);
  }
  std::ostringstream os;
  os << "unknown check '" << check << "'; expected one of:";
  for (const std::string& name : known_checks()) {
    os << ' ' << name;
  }
  throw std::invalid_argument(os.str());
}

struct BatteryItem {
  std::string name;
  std::function<VerificationReport(const SampleConfig&)> run;
};

std::vector<BatteryItem> full_battery() {
  const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  const double sqrt3_over4 = std::sqrt(3.0) / 4.0;
  return {
      {"algebra",
       [](const SampleConfig& cfg) {
         SampleConfig c = cfg;
         c.count = 100;
         return check_algebra(c);
       }},
      {"injective identity r=0.9",
       [](const SampleConfig& cfg) {
         return check_injective(SliceSeries::identity(), 0.9, cfg);
       }},
      {"injective extremal:0.6 r=0.33",
       [](const SampleConfig& cfg) {
         return check_injective(extremal_f_alpha(0.6, 64), 0.33, cfg);
       }},
      {"covering identity B(0,1/sqrt3) -> sqrt3/4",
       [=](const SampleConfig& cfg) {
         return check_covering(SliceSeries::identity(), inv_sqrt3, sqrt3_over4,
                               cfg);
       }},
      {"covering extremal:0.6 B(0,1/3) -> 1/9",
       [](const SampleConfig& cfg) {
         return check_covering(extremal_f_alpha(0.6, 64), 1.0 / 3.0,
                               1.0 / 9.0 - 1e-6, cfg);
       }},
      {"bonk identity",
       [](const SampleConfig& cfg) {
         return check_bonk(SliceSeries::identity(), cfg);
       }},
      {"bonk cubic q - q^3/3",
       [](const SampleConfig& cfg) {
         return check_bonk(
             SliceSeries({Quaternion::zero(), Quaternion::one(),
                          Quaternion::zero(), Quaternion(-1.0 / 3.0)}),
             cfg);
       }},
      {"lindelof mobius:0.3,1 (equality)",
       [](const SampleConfig& cfg) {
         SampleConfig c = cfg;
         c.count = 4000;
         return check_lindelof(mobius(Quaternion(0.3), Quaternion::one(), 128),
                               c, /*expect_mobius_equality=*/true);
       }},
      {"lindelof half identity",
       [](const SampleConfig& cfg) {
         SampleConfig c = cfg;
         c.count = 4000;
         return check_lindelof(
             SliceSeries({Quaternion::zero(), Quaternion(0.5)}), c);
       }},
      {"rotation identity",
       [](const SampleConfig& cfg) {
         return check_rotation_covering(SliceSeries::identity(), cfg);
       }},
      {"rotation q + 0.1 q^2",
       [](const SampleConfig& cfg) {
         return check_rotation_covering(
             SliceSeries({Quaternion::zero(), Quaternion::one(),
                          Quaternion(0.1)}),
             cfg);
       }},
      {"sharpness alpha=0.6",
       [](const SampleConfig& cfg) {
         SampleConfig c = cfg;
         c.count = std::max<std::size_t>(cfg.count, 100000);
         return landau_sharpness(0.6, c);
       }},
  };
}

int cmd_constants(const std::vector<double>& p_list, bool as_json,
                  std::ostream& out, std::ostream& err) {
  for (double p : p_list) {
    if (!(p >= 1.0)) {
      err << "error: Bergman exponent p must be >= 1 (got " << p << ")\n";
      return kExitUsage;
    }
  }
  const RadiusPair bloch = bloch_constants();
  const RotationConstants rot = rotation_covering_constants();
  if (as_json) {
    json j{{"bloch",
            {{"r_B", bloch.injectivity_radius}, {"R_B", bloch.covering_radius}}},
           {"rotation",
            {{"r1_coeff", rot.r1_coeff},
             {"r2_coeff", rot.r2_coeff},
             {"final_radius", rot.final_radius}}},
           {"bergman", json::array()}};
    for (double p : p_list) {
      const RadiusPair pair = bergman_constants(p);
      j["bergman"].push_back({{"p", p},
                              {"r_p", pair.injectivity_radius},
                              {"R_p", pair.covering_radius}});
    }
    out << j.dump(2) << '\n';
    return kExitPass;
  }
  out << std::left << std::setw(26) << "constant" << "value\n";
  out << std::setprecision(8) << std::fixed;
  out << std::setw(26) << "r_B" << bloch.injectivity_radius << '\n';
  out << std::setw(26) << "R_B" << bloch.covering_radius << '\n';
  for (double p : p_list) {
    const RadiusPair pair = bergman_constants(p);
    std::ostringstream rp, Rp;
    rp << "r_p (p=" << p << ")";
    Rp << "R_p (p=" << p << ")";
    out << std::setw(26) << rp.str() << pair.injectivity_radius << '\n';
    out << std::setw(26) << Rp.str() << pair.covering_radius << '\n';
  }
  out << std::setw(26) << "rotation R1 coeff" << rot.r1_coeff << '\n';
  out << std::setw(26) << "rotation R2 coeff" << rot.r2_coeff << '\n';
  out << std::setw(26) << "rotation ball radius" << rot.final_radius << '\n';
  return kExitPass;
}

int cmd_sweep(const std::string& objective, double lo, double hi, double step,
              double p, bool symmetric_form, std::ostream& out,
              std::ostream& err) {
  std::function<double(double)> fn;
  std::string label = objective;
  if (objective == "bloch-r") {
    fn = bloch_r_objective;
  } else if (objective == "bloch-R") {
    fn = bloch_R_objective;
  } else if (objective == "bergman-r") {
    fn = [p](double r) { return bergman_r_objective(r, p); };
    label += "[p=" + std::to_string(p) + "]";
  } else if (objective == "bergman-R") {
    const BergmanRpForm form = symmetric_form ? BergmanRpForm::kSymmetric
                                              : BergmanRpForm::kInnerLinear;
    fn = [p, form](double r) { return bergman_R_objective(r, p, form); };
    label += std::string("[p=") + std::to_string(p) +
             (symmetric_form ? ",symmetric]" : ",inner-linear]");
  } else if (objective == "bonk") {
    fn = bonk_bound;
  } else {
    err << "error: unknown sweep objective '" << objective
        << "' (bloch-r, bloch-R, bergman-r, bergman-R, bonk)\n";
    return kExitUsage;
  }
  if (!(p >= 1.0)) {
    err << "error: Bergman exponent p must be >= 1\n";
    return kExitUsage;
  }
  if (!(step > 0.0)) {
    err << "error: --step must be positive\n";
    return kExitUsage;
  }

  double begin = lo;
  double end = hi;
  if (std::isnan(begin)) {
    begin = (objective == "bonk") ? 0.0 : step;
  }
  if (std::isnan(end)) {
    end = (objective == "bonk") ? 1.0 / std::sqrt(3.0) : 1.0;
  }
  if (!(begin < end)) {
    err << "error: empty sweep range\n";
    return kExitUsage;
  }
  out << "r," << label << '\n';
  out << std::setprecision(12);
  std::size_t rows = 0;
  for (double r = begin; r < end - 1e-12; r += step) {
    out << r << ',' << fn(r) << '\n';
    ++rows;
  }
  if (rows == 0) {
    err << "error: empty sweep range\n";
    return kExitUsage;
  }
  return kExitPass;
}

struct CliResult {
  int exit_code = 0;
  json manifest;
};

CliResult run_cli(const std::vector<std::string>& args, std::ostream& out,
                  std::ostream& err);

int cmd_replay(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot open manifest " << path << '\n';
    return kExitUsage;
  }
  json manifest;
  try {
    in >> manifest;
  } catch (const json::exception& ex) {
    err << "error: bad manifest: " << ex.what() << '\n';
    return kExitUsage;
  }
  const std::vector<std::string> argv =
      manifest.at("argv").get<std::vector<std::string>>();
  std::ostringstream sink;
  const CliResult rerun = run_cli(argv, sink, sink);
  if (rerun.manifest.is_null() || !rerun.manifest.contains("checks")) {
    err << "error: replayed command produced no checks\n";
    return kExitUsage;
  }
  if (rerun.manifest["checks"] == manifest["checks"]) {
    out << "replay: identical reports (" << manifest["checks"].size()
        << " checks)\n";
    return kExitPass;
  }
  out << "replay: MISMATCH\n";
  out << "recorded: " << manifest["checks"].dump() << '\n';
  out << "replayed: " << rerun.manifest["checks"].dump() << '\n';
  return kExitFail;
}

CliResult run_cli(const std::vector<std::string>& args, std::ostream& out,
                  std::ostream& err) {
  CLI::App app{"slice regular function toolkit", std::string(kToolName)};
  app.require_subcommand(1);

  // constants
  auto* constants = app.add_subcommand(
      "constants", "print the Bloch/Bergman/rotation constants");
  std::vector<double> p_list{1.0, 2.0, 4.0, 10.0};
  bool constants_json = false;
  constants->add_option("--p", p_list, "Bergman exponents (comma separated)")
      ->delimiter(',');
  constants->add_flag("--json", constants_json, "machine readable output");

  // verify
  auto* verify = app.add_subcommand("verify", "run one verification check");
  std::string check_name;
  CheckOptions opt;
  std::string focus_arg;
  std::string manifest_path;
  bool verify_json = false;
  bool no_axis_probe = false;
  verify->add_option("check", check_name, "check name")->required();
  verify->add_option("--fn", opt.fn, "function spec (builtin, JSON or @file)");
  verify->add_option("--r", opt.r, "domain radius");
  verify->add_option("--target", opt.target, "covering target radius");
  verify->add_option("--alpha", opt.alpha, "derivative modulus at 0");
  verify->add_option("--order", opt.order, "series order for builtins");
  std::int64_t count_opt = -1;
  verify->add_option("--count", count_opt, "sample count");
  verify->add_option("--seed", opt.cfg.seed, "sampling seed");
  verify->add_option("--min-separation", opt.cfg.min_separation,
                     "collision separation threshold");
  verify->add_option("--focus", focus_arg,
                     "axis focus window center,half_width,fraction");
  verify->add_flag("--no-axis-probe", no_axis_probe,
                   "disable the real-axis fold probe");
  verify->add_flag("--json", verify_json, "emit the report as JSON");
  verify->add_option("--manifest", manifest_path, "write a run manifest");

  // verify-all
  auto* verify_all = app.add_subcommand("verify-all", "run the full battery");
  std::uint64_t all_seed = 42;
  std::int64_t all_count = -1;
  bool all_json = false;
  std::string all_manifest;
  verify_all->add_option("--seed", all_seed, "sampling seed");
  verify_all->add_option("--count", all_count, "sample count override");
  verify_all->add_flag("--json", all_json, "emit all reports as JSON");
  verify_all->add_option("--manifest", all_manifest, "write a run manifest");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "emit objective curves as CSV");
  std::string objective;
  double sweep_min = std::numeric_limits<double>::quiet_NaN();
  double sweep_max = std::numeric_limits<double>::quiet_NaN();
  double sweep_step = 0.01;
  double sweep_p = 2.0;
  bool sweep_symmetric = false;
  sweep->add_option("objective", objective, "bloch-r | bloch-R | bergman-r | bergman-R | bonk")
      ->required();
  sweep->add_option("--min", sweep_min, "range start");
  sweep->add_option("--max", sweep_max, "range end (exclusive)");
  sweep->add_option("--step", sweep_step, "grid step");
  sweep->add_option("--p", sweep_p, "Bergman exponent");
  sweep->add_flag("--symmetric", sweep_symmetric,
                  "use the symmetric Bergman covering objective");

  // replay
  auto* replay = app.add_subcommand("replay", "re-run a manifest and compare");
  std::string replay_path;
  replay->add_option("manifest", replay_path, "manifest file")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("sliceball");
  for (const std::string& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return {kExitPass, {}};
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return {kExitUsage, {}};
  }

  if (constants->parsed()) {
    return {cmd_constants(p_list, constants_json, out, err), {}};
  }

  if (sweep->parsed()) {
    return {cmd_sweep(objective, sweep_min, sweep_max, sweep_step, sweep_p,
                      sweep_symmetric, out, err),
            {}};
  }

  if (replay->parsed()) {
    return {cmd_replay(replay_path, out, err), {}};
  }

  if (verify->parsed()) {
    if (count_opt >= 0) {
      opt.cfg.count = static_cast<std::size_t>(count_opt);
      opt.count_given = true;
    }
    opt.cfg.axis_probe = !no_axis_probe;
    if (!focus_arg.empty()) {
      double c = 0.0, h = 0.0, frac = 0.5;
      if (std::sscanf(focus_arg.c_str(), "%lf,%lf,%lf", &c, &h, &frac) < 2) {
        err << "error: --focus expects center,half_width[,fraction]\n";
        return {kExitUsage, {}};
      }
      opt.cfg.axis_focus = AxisFocus{c, h, frac};
    }
    opt.has_r = verify->count("--r") > 0;
    opt.has_target = verify->count("--target") > 0;
    opt.has_alpha = verify->count("--alpha") > 0;

    VerificationReport rep;
    try {
      rep = run_named_check(check_name, opt);
    } catch (const std::invalid_argument& ex) {
      err << "error: " << ex.what() << '\n';
      return {kExitUsage, {}};
    } catch (const std::domain_error& ex) {
      err << "error: " << ex.what() << '\n';
      return {kExitUsage, {}};
    }

    json manifest = manifest_skeleton(args, opt.cfg.seed);
    manifest["checks"].push_back(
        {{"name", check_name},
         {"report", json::parse(report_to_json(rep))}});
    if (!manifest_path.empty()) {
      std::ofstream mf(manifest_path);
      mf << manifest.dump(2) << '\n';
    }

    if (verify_json) {
      out << report_to_json(rep, 2) << '\n';
    } else {
      print_report_text(out, rep);
    }
    return {exit_code_for(rep), manifest};
  }

  if (verify_all->parsed()) {
    SampleConfig cfg;
    cfg.seed = all_seed;
    if (all_count >= 2) {
      cfg.count = static_cast<std::size_t>(all_count);
    } else {
      cfg.count = 20000;
    }
    json manifest = manifest_skeleton(args, cfg.seed);
    bool all_pass = true;
    json reports = json::array();
    for (const BatteryItem& item : full_battery()) {
      const VerificationReport rep = item.run(cfg);
      all_pass = all_pass && rep.passed();
      manifest["checks"].push_back(
          {{"name", item.name}, {"report", json::parse(report_to_json(rep))}});
      reports.push_back(json::parse(report_to_json(rep)));
      if (!all_json) {
        out << (rep.passed() ? "[PASS] " : "[FAIL] ") << item.name
            << "  (margin " << std::setprecision(6) << rep.margin << ", samples "
            << rep.samples_used << ")\n";
      }
    }
    if (all_json) {
      out << reports.dump(2) << '\n';
    } else {
      out << (all_pass ? "battery: all checks passed\n"
                       : "battery: FAILURES present\n");
    }
    if (!all_manifest.empty()) {
      std::ofstream mf(all_manifest);
      mf << manifest.dump(2) << '\n';
    }
    return {all_pass ? kExitPass : kExitFail, manifest};
  }

  err << "error: no command\n";
  return {kExitUsage, {}};
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::cout.imbue(std::locale::classic());
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return run_cli(args, std::cout, std::cerr).exit_code;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitUsage;
  }
}

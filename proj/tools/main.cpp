#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"

using namespace stubborn;
using namespace stubborn::cli;

namespace {

void add_input(CLI::App* cmd, InputSpec& spec) {
  cmd->add_option("input", spec.source, ".poly file or inline polynomial")->required();
  cmd->add_option("--vars", spec.vars, "variable order for inline input")->delimiter(',');
  cmd->add_option("--param", spec.params, "parameter value, name=value");
}

void add_sdp(CLI::App* cmd, SdpTolerances& tol) {
  cmd->add_option("--eig-tol", tol.eig_tol, "feasible when the Gram eigenvalues exceed -eig-tol");
  cmd->add_option("--res-tol", tol.res_tol, "maximum constraint residual");
  cmd->add_option("--margin", tol.margin, "infeasible when the optimal eigenvalue is below -margin");
  cmd->add_option("--max-iterations", tol.max_iterations, "interior point iteration limit");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stubbornness certificates for nonnegative forms"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);
  app.fallthrough();
  bool timings = false, compact = false;
  app.add_flag("--timings", timings, "add wall-clock timings to the report");
  app.add_flag("--compact", compact, "print the report on one line");

  InputSpec spec;
  SdpTolerances tol;

  auto* info = app.add_subcommand("info", "degree, Newton polytope, half support, parity classes");
  add_input(info, spec);

  std::string at, variant = "all";
  auto* delta = app.add_subcommand("delta", "local delta invariants at a zero");
  add_input(delta, spec);
  delta->add_option("--at", at, "projective point, e.g. [0:0:1]")->required();
  delta->add_option("--variant", variant, "complex, real, sos or all");

  std::string zeros = "auto";
  int jobs = 1;
  auto* stub = app.add_subcommand("stubborn", "certify stubbornness of a ternary form");
  add_input(stub, spec);
  stub->add_option("--zeros", zeros, "auto, or a file with one projective point per line");
  stub->add_option("--jobs", jobs, "parallel per-zero computations");

  unsigned power = 1;
  bool exact_first = false;
  auto* sos = app.add_subcommand("sos", "sum of squares test for an odd power");
  add_input(sos, spec);
  sos->add_option("--power", power, "odd exponent k");
  sos->add_flag("--exact-first", exact_first, "try the exact parity obstruction first");
  add_sdp(sos, tol);

  ThresholdArgs targs;
  std::vector<std::string> bracket;
  std::string width;
  auto* thr = app.add_subcommand("threshold", "bisection on a one-parameter family");
  thr->add_option("family", targs.family, "motzkin-a or stengle-c")->required();
  thr->add_option("--power", targs.power, "odd exponent k");
  thr->add_option("--bracket", bracket, "lo hi")->expected(2);
  thr->add_option("--tol", width, "bracket width");
  add_sdp(thr, tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (log_level() >= 2) tol.trace = &std::cerr;
  nlohmann::json tolerances = tolerances_json(tol);
  Report report;
  if (info->parsed()) {
    report = run("info", nullptr, timings, [&](nlohmann::json& inputs) {
      Input in = load_input(spec);
      inputs = in.echo;
      return cmd_info(in);
    });
  } else if (delta->parsed()) {
    report = run("delta", nullptr, timings, [&](nlohmann::json& inputs) {
      Input in = load_input(spec);
      inputs = in.echo;
      inputs["at"] = at;
      inputs["variant"] = variant;
      return cmd_delta(in, at, variant);
    });
  } else if (stub->parsed()) {
    report = run("stubborn", nullptr, timings, [&](nlohmann::json& inputs) {
      Input in = load_input(spec);
      inputs = in.echo;
      inputs["zeros"] = zeros;
      inputs["jobs"] = jobs;
      return cmd_stubborn(in, zeros, jobs);
    });
  } else if (sos->parsed()) {
    report = run("sos", tolerances, timings, [&](nlohmann::json& inputs) {
      Input in = load_input(spec);
      inputs = in.echo;
      inputs["power"] = power;
      inputs["exact_first"] = exact_first;
      return cmd_sos(in, power, exact_first, tol);
    });
  } else if (thr->parsed()) {
    if (bracket.size() == 2) {
      targs.lo = bracket[0];
      targs.hi = bracket[1];
    }
    if (!width.empty()) targs.tol = width;
    report = run("threshold", tolerances, timings, [&](nlohmann::json& inputs) {
      inputs = {{"family", targs.family}, {"power", targs.power}};
      if (targs.lo) inputs["bracket"] = {*targs.lo, *targs.hi};
      if (targs.tol) inputs["tol"] = *targs.tol;
      return cmd_threshold(targs, tol);
    });
  }

  if (report.exit_code != 1) std::cout << report.json.dump(compact ? -1 : 2) << "\n";
  if (!report.message.empty()) std::cerr << "error: " << report.message << "\n";
  if (log_level() >= 1) std::cerr << "exit " << report.exit_code << "\n";
  return report.exit_code;
}

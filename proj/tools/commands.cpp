#include "commands.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <regex>

#include "stubborn/blowup.hpp"
#include "stubborn/errors.hpp"
#include "stubborn/fixtures.hpp"
#include "stubborn/newton.hpp"
#include "stubborn/stubborn.hpp"

#ifndef STUBBORN_VERSION
#define STUBBORN_VERSION "0.0.0"
#endif

namespace stubborn::cli {
namespace {

void require_nonzero(const Input& in) {
  if (in.poly.is_zero()) throw InputError("zero polynomial");
}

std::string monomial_text(const std::vector<std::string>& vars, const Exponent& e) {
  return Polynomial::monomial(vars, e).to_string();
}

nlohmann::json monomials_json(const std::vector<std::string>& vars,
                              const std::vector<Exponent>& es) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : es) out.push_back(monomial_text(vars, e));
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : sep) + p;
  return s;
}

double to_double(const mpq_class& q) { return mpq_class(q).get_d(); }

}  // namespace

mpq_class parse_number(const std::string& text) {
  static const std::regex fraction(R"(\s*([+-]?\d+)\s*/\s*(\d+)\s*)");
  static const std::regex decimal(R"(\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*)");
  std::smatch m;
  if (std::regex_match(text, m, fraction)) {
    mpz_class den(m[2].str());
    if (den == 0) throw InputError("zero denominator in " + text);
    mpq_class q(mpz_class(m[1].str()), den);
    q.canonicalize();
    return q;
  }
  if (std::regex_match(text, m, decimal) && (m[2].length() > 0 || m[3].length() > 0)) {
    std::string digits = m[2].str() + m[3].str();
    long exponent = m[4].matched ? std::stol(m[4].str()) : 0;
    exponent -= static_cast<long>(m[3].length());
    if (std::labs(exponent) > 1000) throw InputError("exponent out of range in " + text);
    mpz_class num(digits.empty() ? "0" : digits), scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    mpq_class q = exponent >= 0 ? mpq_class(num * scale) : mpq_class(num, scale);
    q.canonicalize();
    return m[1].str() == "-" ? mpq_class(-q) : q;
  }
  throw InputError("not a number: " + text);
}

Input load_input(const InputSpec& spec) {
  Input in;
  in.source = spec.source;
  in.from_file = std::filesystem::is_regular_file(spec.source);
  PolyFile f;
  if (in.from_file) {
    if (!spec.vars.empty()) throw InputError("--vars applies to inline input only");
    f = load_poly_file(spec.source);
  } else {
    std::string text = spec.source;
    if (!spec.vars.empty()) text = "vars: " + join(spec.vars, " ") + "\n" + text;
    f = parse_poly_text(text);
  }

  std::map<std::string, Coefficient> given;
  for (const auto& p : spec.params) {
    auto eq = p.find('=');
    if (eq == std::string::npos) throw InputError("expected name=value, got " + p);
    std::string name = p.substr(0, eq);
    if (std::find(f.params.begin(), f.params.end(), name) == f.params.end())
      throw InputError("unknown parameter " + name);
    given[name] = Coefficient(parse_number(p.substr(eq + 1)));
  }
  nlohmann::json params = nlohmann::json::object();
  if (f.params.empty()) {
    in.poly = f.poly;
  } else {
    std::vector<Coefficient> values;
    for (const auto& name : f.params) {
      auto it = given.find(name);
      if (it == given.end()) throw InputError("parameter " + name + " needs --param " + name + "=value");
      values.push_back(it->second);
      params[name] = it->second.to_string();
    }
    in.poly = f.instantiate(values);
  }
  in.echo = {{"source", spec.source},
             {"kind", in.from_file ? "file" : "inline"},
             {"vars", in.poly.vars()},
             {"polynomial", in.poly.to_string()}};
  if (!params.empty()) in.echo["params"] = params;
  if (!f.title.empty()) in.echo["title"] = f.title;
  return in;
}

nlohmann::json cmd_info(const Input& in) {
  require_nonzero(in);
  const Polynomial& p = in.poly;
  nlohmann::json j;
  j["vars"] = p.vars();
  j["degree"] = p.degree();
  j["homogeneous"] = p.is_homogeneous();
  j["terms"] = p.terms().size();
  j["rational"] = p.is_rational();
  j["field"] = p.field();
  j["even_form"] = is_even_form(p);
  try {
    NewtonPolytope np = newton_polytope(p);
    j["newton"] = {{"hull", np.hull},
                   {"hull_monomials", monomials_json(p.vars(), np.hull)},
                   {"lattice_points", np.lattice.size()}};
  } catch (const InputError& e) {
    j["newton"] = nullptr;
    j["newton_note"] = e.what();
  }
  try {
    auto half = half_support(p);
    j["half_support"] = monomials_json(p.vars(), half);
    j["half_support_size"] = half.size();
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& [key, members] : parity_classes(half).classes)
      classes.push_back({{"parity", key}, {"members", monomials_json(p.vars(), members)}});
    j["parity_classes"] = classes;
  } catch (const InputError& e) {
    j["half_support"] = nullptr;
    j["half_support_note"] = e.what();
  }
  return j;
}

nlohmann::json cmd_delta(const Input& in, const std::string& point, const std::string& variant) {
  require_nonzero(in);
  static const std::vector<std::string> variants{"complex", "real", "sos", "all"};
  if (std::find(variants.begin(), variants.end(), variant) == variants.end())
    throw InputError("unknown variant " + variant + " (complex, real, sos, all)");
  const Polynomial& P = in.poly;
  if (!P.is_homogeneous() || P.nvars() != 3)
    throw InputError("delta needs a homogeneous form in three variables");
  ProjectivePoint X = ProjectivePoint::parse(point);
  if (X.dim() != 3) throw InputError("point " + X.to_string() + " is not in the plane");
  if (!P.evaluate(X.coords()).is_zero())
    throw InputError("point " + X.to_string() + " is not a zero of the form");
  DeltaOptions options;
  options.sos_only = variant == "sos";
  LocalInvariants inv = delta_at_point(P, X, options);
  if ((variant == "complex") && !inv.delta)
    throw UnsupportedExtension("complex near points lie outside the supported fields");

  nlohmann::json full = to_json(inv);
  nlohmann::json j;
  j["point"] = X.to_string();
  j["variant"] = variant;
  j["multiplicity"] = inv.tree.m;
  if (variant == "complex" || variant == "all") j["delta"] = full["delta"];
  if (variant == "real" || variant == "all") {
    j["delta_real"] = full["delta_real"];
    j["delta_real_strict"] = full["delta_real_strict"];
  }
  if (variant == "sos" || variant == "all") j["delta_sos"] = full["delta_sos"];
  j["locally_nonnegative"] = inv.locally_nonnegative;
  j["notes"] = inv.notes;
  j["tree"] = full["tree"];
  return j;
}

nlohmann::json cmd_stubborn(const Input& in, const std::string& zeros, int jobs) {
  require_nonzero(in);
  if (jobs < 1) throw InputError("--jobs must be positive");
  std::optional<std::vector<ProjectivePoint>> supplied;
  if (zeros != "auto") supplied = load_zero_file(zeros);
  CertifyOptions options;
  options.jobs = jobs;
  try {
    return to_json(certify_stubborn(in.poly, supplied, options));
  } catch (const NonIsolatedZero& e) {
    throw NonIsolatedZero(std::string(e.what()) +
                          "; a substitution transfer to a form with isolated zeros may apply");
  }
}

nlohmann::json cmd_sos(const Input& in, unsigned power, bool exact_first, const SdpTolerances& tol) {
  require_nonzero(in);
  if (power == 0 || power % 2 == 0) throw InputError("--power must be odd and positive");
  Polynomial Pk = stubborn::power(in.poly, power);
  nlohmann::json j;
  j["power"] = power;
  if (exact_first) {
    NonSOSResult r = exact_nonsos_test(Pk, is_even_form(Pk));
    if (r.certificate) {
      j["method"] = "exact";
      j["verdict"] = "not-sos";
      j["certificate"] = to_json(*r.certificate);
      j["replayed"] = replay_nonsos_certificate(Pk, *r.certificate);
      return j;
    }
    j["exact_attempt"] = r.reason;
  }
  SdpResult s = sdp_feasibility(Pk, tol);
  j["method"] = "sdp";
  j["sdp"] = to_json(s);
  switch (s.status) {
    case SdpStatus::Feasible: {
      SOSCertificate cert = sos_decompose(Pk, tol);
      j["verdict"] = cert.exact ? "sos" : "sos-numerical";
      j["certificate"] = to_json(cert);
      break;
    }
    case SdpStatus::Infeasible:
      j["verdict"] = "not-sos-numerical";
      break;
    case SdpStatus::Indeterminate:
      j["verdict"] = "indeterminate";
      break;
  }
  return j;
}

nlohmann::json cmd_threshold(const ThresholdArgs& args, const SdpTolerances& tol) {
  if (args.power == 0 || args.power % 2 == 0) throw InputError("--power must be odd and positive");
  ProbeFn probe;
  mpq_class lo, hi, width;
  std::string parameter;
  if (args.family == "motzkin-a") {
    parameter = "a";
    probe = sdp_power_probe([](const mpq_class& a) { return fixtures::motzkin_a(Coefficient(a)); },
                            args.power, tol);
    lo = args.power == 1 ? -1 : 1;
    hi = args.power == 1 ? 1 : 3;
    width = mpq_class(1, 20);
  } else if (args.family == "stengle-c") {
    if (args.power != 1) throw InputError("stengle-c supports --power 1 only");
    parameter = "c";
    probe = stengle_probe();
    lo = 0;
    hi = 4;
    width = mpq_class(1, 10000);
  } else {
    throw InputError("unknown family " + args.family + " (motzkin-a, stengle-c)");
  }
  if (args.lo) lo = parse_number(*args.lo);
  if (args.hi) hi = parse_number(*args.hi);
  if (args.tol) width = parse_number(*args.tol);
  if (width <= 0) throw InputError("--tol must be positive");

  ThresholdResult r = threshold_bisection(parameter, probe, lo, hi, width);
  nlohmann::json j = to_json(r);
  j["family"] = args.family;
  j["power"] = args.power;
  j["exact_probe"] = args.family == "stengle-c";
  j["estimate"] = to_double(mpq_class((r.lo + r.hi) / 2));
  j["width"] = to_double(mpq_class(abs(r.hi - r.lo)));
  return j;
}

nlohmann::json tolerances_json(const SdpTolerances& tol) {
  return {{"eig_tol", tol.eig_tol},
          {"res_tol", tol.res_tol},
          {"margin", tol.margin},
          {"max_iterations", tol.max_iterations}};
}

std::string version() { return STUBBORN_VERSION; }

int log_level() {
  const char* v = std::getenv("STUBBORN_LOG");
  if (!v) return 0;
  std::string s(v);
  if (s.empty() || s == "0" || s == "off") return 0;
  if (s == "2" || s == "trace" || s == "debug") return 2;
  return 1;
}

Report run(const std::string& command, const nlohmann::json& tolerances, bool timings,
           const std::function<nlohmann::json(nlohmann::json& inputs)>& fn) {
  Report r;
  nlohmann::json inputs = nlohmann::json::object();
  auto t0 = std::chrono::steady_clock::now();
  nlohmann::json results;
  std::string kind;
  try {
    results = fn(inputs);
  } catch (const NonIsolatedZero& e) {
    kind = "non-isolated-zero";
    r.message = e.what();
  } catch (const UnsupportedExtension& e) {
    kind = "unsupported-extension";
    r.message = e.what();
  } catch (const InapplicableError& e) {
    kind = "inapplicable";
    r.message = e.what();
  } catch (const InputError& e) {
    r.exit_code = 1;
    r.message = e.what();
    return r;
  } catch (const std::exception& e) {
    r.exit_code = 1;
    r.message = std::string("internal error: ") + e.what();
    return r;
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  nlohmann::json& j = r.json;
  j["schema"] = "stubborn-run-report/v1";
  j["command"] = command;
  j["version"] = version();
  j["inputs"] = inputs;
  j["tolerances"] = tolerances;
  if (kind.empty()) {
    j["status"] = "ok";
    j["results"] = results;
  } else {
    r.exit_code = 2;
    j["status"] = "inapplicable";
    j["results"] = nullptr;
    j["error"] = {{"kind", kind}, {"message", r.message}};
  }
  if (timings) j["timings"] = {{"total_ms", ms}};
  return r;
}

}  // namespace stubborn::cli

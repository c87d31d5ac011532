// One PASS/FAIL line per acceptance criterion; exit code 1 when any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "stubborn/blowup.hpp"
#include "stubborn/elimination.hpp"
#include "stubborn/errors.hpp"
#include "stubborn/fixtures.hpp"
#include "stubborn/newton.hpp"
#include "stubborn/realroots.hpp"
#include "stubborn/sos.hpp"
#include "stubborn/stubborn.hpp"

using namespace stubborn;

namespace {

const std::vector<std::string> kXYZ{"X1", "X2", "X3"};

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects failed checks; the first few are reported.
class Checks {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond) failures_.push_back(what);
  }
  Outcome outcome(const std::string& summary) const {
    if (failures_.empty()) return {true, summary};
    std::string d = "failed: ";
    for (std::size_t i = 0; i < std::min<std::size_t>(failures_.size(), 3); ++i)
      d += (i ? "; " : "") + failures_[i];
    if (failures_.size() > 3) d += "; and " + std::to_string(failures_.size() - 3) + " more";
    return {false, d};
  }

 private:
  std::vector<std::string> failures_;
};

std::string fixture(const std::string& name) { return std::string(STUBBORN_FIXTURE_DIR) + "/" + name; }

Polynomial P3(const std::string& s) { return parse(s, kXYZ); }

std::vector<Polynomial> ternary_fixtures() {
  return {fixtures::motzkin(),   fixtures::robinson(), fixtures::choi_lam_s(),
          fixtures::stengle_t(), fixtures::octic(),    fixtures::motzkin_a(1)};
}

Outcome stengle_local_deltas() {
  Checks c;
  cli::Input in = cli::load_input({fixture("stengle_T.poly"), {}, {}});
  std::ostringstream s;
  for (auto [point, want] : {std::pair<const char*, long>{"[0:0:1]", 3}, {"[0:1:0]", 6}}) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = cli::cmd_delta(in, point, "all");
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(r["delta"] == want, std::string(point) + " delta " + r["delta"].dump());
    c.expect(r["delta_sos"] == std::to_string(want), std::string(point) + " delta_sos " + r["delta_sos"].dump());
    c.expect(secs < 1, std::string(point) + " took over 1 s");
    s << point << " delta = delta_sos = " << r["delta"].dump() << "; ";
  }
  return c.outcome(s.str());
}

Outcome motzkin_stubborn() {
  Checks c;
  auto cert = certify_stubborn(fixtures::motzkin(), std::nullopt);
  c.expect(cert.verdict == Verdict::Stubborn, "verdict " + to_string(cert.verdict));
  c.expect(cert.total == 10, "total " + cert.total.get_str());
  c.expect(cert.threshold == 9, "threshold " + cert.threshold.get_str());
  c.expect(cert.zeros_complete && cert.zeros.size() == 6, "zero set");
  return c.outcome("stubborn, total 10 > 9 over 6 located zeros");
}

Outcome robinson_and_s() {
  Checks c;
  auto r = certify_stubborn(fixtures::robinson(), std::nullopt);
  auto s = certify_stubborn(fixtures::choi_lam_s(), std::nullopt);
  c.expect(r.verdict == Verdict::Stubborn && r.total == 10, "R total " + r.total.get_str());
  c.expect(s.verdict == Verdict::Stubborn && s.total == 10, "S total " + s.total.get_str());
  c.expect(r.zeros.size() == 10, "R has " + std::to_string(r.zeros.size()) + " zeros");
  for (const auto& z : r.zeros) {
    bool round = z.local.delta_sos == 1 && z.local.tree.m == 2;
    for (const auto& child : z.local.tree.children) round = round && child.m <= 1;
    c.expect(round, "R zero " + z.point.to_string() + " is not round");
  }
  return c.outcome("R and S stubborn with total 10; R has ten round zeros");
}

Outcome stengle_inconclusive() {
  Checks c;
  auto t = certify_stubborn(fixtures::stengle_t(), std::nullopt);
  c.expect(t.verdict == Verdict::Inconclusive, "verdict " + to_string(t.verdict));
  c.expect(t.total == 9 && t.threshold == 9, "total " + t.total.get_str());
  return c.outcome("inconclusive, total 9 = threshold 9");
}

Outcome octic() {
  Checks c;
  auto o = certify_stubborn(fixtures::octic(), std::nullopt);
  std::vector<mpq_class> per;
  for (const auto& z : o.zeros) per.push_back(z.local.delta_sos);
  std::sort(per.begin(), per.end());
  c.expect(o.verdict == Verdict::Stubborn, "verdict");
  c.expect(o.total == 17 && o.threshold == 16, "total " + o.total.get_str());
  c.expect(per == std::vector<mpq_class>{1, 1, 1, 1, 1, 6, 6}, "per-zero values");
  c.expect(o.delta_total && *o.delta_total == 21, "complex delta total");
  return c.outcome("stubborn, total 17 > 16, per zero {1,1,1,1,1,6,6}, delta 21");
}

Outcome exact_nonsos() {
  Checks c;
  auto check = [&](const Polynomial& p, const mpq_class& coefficient, const std::string& name) {
    NonSOSResult r = exact_nonsos_test(p);
    c.expect(r.certificate.has_value(), name + " has no certificate: " + r.reason);
    if (!r.certificate) return;
    c.expect(r.certificate->coefficient == coefficient,
             name + " coefficient " + r.certificate->coefficient.get_str());
    c.expect(replay_nonsos_certificate(p, *r.certificate), name + " replay");
  };
  check(fixtures::motzkin(), -3, "M");
  for (const mpq_class& a : {mpq_class(1, 10), mpq_class(1), mpq_class(3)})
    check(fixtures::motzkin_a(Coefficient(a)), -a, "M_" + a.get_str());
  // a <= 0 lies in V_1: no obstruction.
  c.expect(!exact_nonsos_test(fixtures::motzkin_a(0)).certificate, "M_0 certified");
  return c.outcome("replayable certificates for M and M_a, a in {1/10, 1, 3}");
}

Outcome cube_identity() {
  Checks c;
  auto terms = fixtures::motzkin_a_cube_identity();
  c.expect(terms.size() == 16, "term count");
  mpq_class residual = verify_certificate(power(fixtures::motzkin_a_symbolic(), 3), terms);
  c.expect(residual == 0, "residual " + residual.get_str());
  // Weights are nonnegative exactly for 0 <= a <= (15/13)^(1/3).
  auto weights_nonneg = [&](const mpq_class& a) {
    for (const auto& t : terms) {
      Coefficient w = t.weight.evaluate({0, 0, 0, Coefficient(a)});
      if (w.rational() < 0) return false;
    }
    return true;
  };
  mpq_class below(1048, 1000), above(1049, 1000);
  c.expect(below * below * below < mpq_class(15, 13) && above * above * above > mpq_class(15, 13),
           "bracket of (15/13)^(1/3)");
  c.expect(weights_nonneg(0) && weights_nonneg(1) && weights_nonneg(below), "weights below the bound");
  c.expect(!weights_nonneg(above), "weights above the bound");
  return c.outcome("sixteen terms, residual exactly 0, weights nonnegative up to (15/13)^(1/3)");
}

Outcome sdp_sanity() {
  Checks c;
  SdpResult m = sdp_feasibility(fixtures::motzkin());
  SdpResult half = sdp_feasibility(parse_poly_text(read_text_file(fixture("m_half.poly"))).poly);
  SdpResult cube = sdp_feasibility(power(fixtures::motzkin_a(1), 3));
  c.expect(m.status == SdpStatus::Infeasible, "M " + to_string(m.status));
  c.expect(half.status == SdpStatus::Feasible, "M_1/2 " + to_string(half.status));
  c.expect(cube.status == SdpStatus::Feasible, "M_1^3 " + to_string(cube.status));
  // Exact results where both apply.
  c.expect(exact_nonsos_test(fixtures::motzkin()).certificate.has_value(), "M exact");
  Polynomial Mhalf = fixtures::motzkin() + Coefficient(mpq_class(1, 2)) * fixtures::sphere_power(3);
  SOSCertificate hc = sos_decompose(Mhalf);
  c.expect(hc.exact && verify_certificate(Mhalf, hc) == 0, "M_1/2 exact certificate");
  std::map<std::string, Polynomial> at{{"a", Polynomial::constant(1)}};
  std::vector<WeightedSquare> identity;
  for (const auto& t : fixtures::motzkin_a_cube_identity())
    identity.push_back({substitute(t.weight, at).with_vars(kXYZ), substitute(t.square, at).with_vars(kXYZ)});
  c.expect(verify_certificate(power(fixtures::motzkin_a(1), 3), identity) == 0, "M_1^3 identity");
  std::ostringstream s;
  s << "M infeasible (lambda " << std::setprecision(3) << m.lambda_opt
    << "), M_1/2 and M_1^3 feasible, consistent with exact certificates";
  return c.outcome(s.str());
}

Outcome motzkin_threshold() {
  Checks c;
  auto probe = sdp_power_probe([](const mpq_class& a) { return fixtures::motzkin_a(Coefficient(a)); }, 3);
  auto r = threshold_bisection("a", probe, 1, 3, mpq_class(1, 20));
  mpq_class target(256548, 100000);
  c.expect(r.hi - r.lo <= mpq_class(1, 20), "width");
  c.expect(std::min(r.lo, r.hi) <= target && target <= std::max(r.lo, r.hi),
           "bracket [" + r.lo.get_str() + ", " + r.hi.get_str() + "]");
  std::ostringstream s;
  s << "bracket [" << r.lo.get_d() << ", " << r.hi.get_d() << "] contains 2.56548";
  return c.outcome(s.str());
}

Outcome stengle_threshold() {
  Checks c;
  auto r = threshold_bisection("c", stengle_probe(), 0, 4, mpq_class(1, 10000));
  c.expect(r.hi - r.lo <= mpq_class(1, 10000), "width");
  c.expect(r.lo * r.lo <= mpq_class(256, 27) && r.hi * r.hi >= mpq_class(256, 27), "bracket");
  // Endpoints by exact univariate nonnegativity of T_c(X1, 0, 1).
  auto slice_nonneg = [](const mpq_class& v) {
    Polynomial T = fixtures::stengle_tc(Coefficient(v));
    std::map<std::string, Polynomial> at{{"X2", Polynomial::constant(0, {"X1"})},
                                         {"X3", Polynomial::constant(1, {"X1"})}};
    return univariate_nonneg(substitute(T, at).with_vars({"X1"})).nonneg;
  };
  c.expect(slice_nonneg(r.lo), "lower endpoint not nonnegative");
  c.expect(!slice_nonneg(r.hi), "upper endpoint nonnegative");
  std::ostringstream s;
  s << std::setprecision(8) << "bracket [" << r.lo.get_d() << ", " << r.hi.get_d()
    << "] contains sqrt(256/27) = " << std::sqrt(256.0 / 27);
  return c.outcome(s.str());
}

Outcome substitution_identities() {
  Checks c;
  const std::vector<std::string> xy{"X1", "X2"};
  std::map<std::string, Polynomial> q{{"X1", parse("X1", xy)},
                                      {"X2", parse("X2", xy)},
                                      {"X3", parse("X1*X2", xy)},
                                      {"X4", parse("1", xy)}};
  auto m1 = check_substitution(fixtures::quaternary_q(), q, dehomogenize(fixtures::motzkin(), "X3"));
  c.expect(!m1, "Q: " + (m1 ? m1->to_string() : ""));
  std::map<std::string, Polynomial> h{{"X4", Polynomial::constant(0, kXYZ)},
                                      {"X5", Polynomial::constant(0, kXYZ)}};
  auto m2 = check_substitution(fixtures::horn(), h, power(P3("X1^2 - X2^2 + X3^2"), 2));
  c.expect(!m2, "Horn: " + (m2 ? m2->to_string() : ""));
  c.expect(verify_certificate(fixtures::horn(), fixtures::horn_alternative()) == 0,
           "alternative representation");
  return c.outcome("Q restriction, Horn restriction and alternative representation exact");
}

Polynomial random_through_origin(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> coef(-3, 3), deg(1, max_deg), terms(1, 4);
  Polynomial p({"x", "y"});
  int n = terms(rng);
  for (int t = 0; t < n; ++t) {
    int d = deg(rng);
    std::uniform_int_distribution<int> split(0, d);
    unsigned i = split(rng);
    p.add_term({i, static_cast<unsigned>(d) - i}, coef(rng));
  }
  return p;
}

Outcome property_suites() {
  Checks c;
  std::ostringstream s;

  // (a) sos invariant of powers.
  int points = 0;
  for (const auto& P : ternary_fixtures())
    for (const auto& X : locate_real_zeros(P).points) {
      Polynomial f = dehomogenize(P, P.vars()[X.chart()]);
      mpq_class base = delta_invariants(f, X.affine()).delta_sos;
      for (unsigned k : {2u, 3u})
        c.expect(sos_invariant_of_power(f, X.affine(), k) == k * k * base,
                 "(a) " + X.to_string() + " k=" + std::to_string(k));
      ++points;
    }
  s << "(a) " << points << " zeros; ";

  // (b) Noether recursion against the resultant oracle.
  std::mt19937 rng(20240611);
  const std::vector<Coefficient> origin{0, 0};
  int pairs = 0;
  for (int trial = 0; trial < 400 && pairs < 25; ++trial) {
    Polynomial f = random_through_origin(rng, 4), g = random_through_origin(rng, 4);
    if (f.is_zero() || g.is_zero() || bivariate_gcd(f, g).degree() > 0) continue;
    try {
      auto im = intersection_multiplicity(f, g, origin);
      c.expect(!im.infinite && im.value == resultant_intersection_oracle(f, g, origin),
               "(b) " + f.to_string() + " | " + g.to_string());
      ++pairs;
    } catch (const UnsupportedExtension&) {
    }
  }
  c.expect(pairs >= 20, "(b) only " + std::to_string(pairs) + " pairs");
  s << "(b) " << pairs << " pairs; ";

  // (c) Bezout totals.
  int complete = 0;
  for (const auto& F : ternary_fixtures())
    for (const char* g : {"X1 - X2", "X3", "X1", "X1 + X2 - X3", "X1*X2 - X3^2"}) {
      Polynomial G = P3(g);
      IntersectionCount n = intersection_count(F, G);
      if (!n.complete) continue;
      ++complete;
      c.expect(n.total == F.degree() * G.degree(), "(c) " + F.to_string() + " / " + g);
    }
  c.expect(complete >= 10, "(c) only " + std::to_string(complete) + " complete pairs");
  s << "(c) " << complete << " pairs; ";

  // (d) truncated binomials.
  for (int n = 1; n <= 20; ++n)
    for (int r = 0; 2 * r < n; ++r)
      c.expect(truncated_binomial_positive(n, 2 * r), "(d) f_" + std::to_string(n) + "," + std::to_string(2 * r));
  const RatPoly t(std::vector<mpq_class>{0, 1});
  for (int n = 2; n <= 12; ++n)
    for (int r = 1; r < n; ++r) {
      c.expect(truncated_binomial(n, r).derivative() == truncated_binomial(n - 1, r - 1).scaled(mpq_class(n)),
               "(d) derivative identity");
      c.expect(truncated_binomial(n, r) == truncated_binomial(n - 1, r) + t * truncated_binomial(n - 1, r - 1),
               "(d) Pascal identity");
    }
  s << "(d) n <= 20; ";

  // (e) two squares.
  double worst = 0;
  for (int n = 3; n <= 11; ++n)
    for (int r = 1; 2 * r < n; ++r) {
      auto gh = two_square_decomposition(truncated_binomial_form(n, 2 * r));
      worst = std::max(worst, gh.residual);
      c.expect(gh.residual < 1e-8, "(e) F_" + std::to_string(n) + "," + std::to_string(2 * r));
    }
  s << "(e) worst residual " << std::setprecision(2) << worst << "; ";

  // (f) convex sum.
  std::map<std::string, Polynomial> at{{"a", Polynomial::constant(1)}};
  SOSCertificate c1;
  for (const auto& term : fixtures::motzkin_a_cube_identity())
    c1.terms.push_back({substitute(term.weight, at).with_vars(kXYZ), substitute(term.square, at).with_vars(kXYZ)});
  c1.exact = true;
  Polynomial P1 = fixtures::motzkin_a(1), P2 = fixtures::sphere_power(3);
  SOSCertificate sum = convex_sum_certificate(P1, c1, 3, P2, std::nullopt, 1);
  mpq_class residual = verify_certificate(power(P1 + P2, 3), sum);
  c.expect(residual.get_d() < 1e-6, "(f) residual " + std::to_string(residual.get_d()));
  s << "(f) residual " << residual.get_d();
  return c.outcome(s.str());
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "stengle local deltas", 2, stengle_local_deltas},
      {2, "motzkin stubbornness", 5, motzkin_stubborn},
      {3, "robinson and choi-lam", 10, robinson_and_s},
      {4, "stengle inconclusive", 5, stengle_inconclusive},
      {5, "octic", 10, octic},
      {6, "exact non-sos certificates", 1, exact_nonsos},
      {7, "cube identity", 30, cube_identity},
      {8, "sdp sanity", 120, sdp_sanity},
      {9, "motzkin family threshold", 300, motzkin_threshold},
      {10, "stengle threshold", 10, stengle_threshold},
      {11, "substitution identities", 1, substitution_identities},
      {12, "property suites", 300, property_suites},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > c.limit_seconds) {
      o.ok = false;
      o.detail += "; over the time limit";
    }
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << std::setw(2) << c.id << " " << c.name << " ("
              << std::fixed << std::setprecision(3) << secs << " s, limit " << std::setprecision(0)
              << c.limit_seconds << " s): " << o.detail << std::defaultfloat << "\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}

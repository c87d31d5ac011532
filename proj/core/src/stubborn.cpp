#include "stubborn/stubborn.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "stubborn/elimination.hpp"
#include "stubborn/errors.hpp"
#include "stubborn/realroots.hpp"

namespace stubborn {
namespace {

void require_ternary_form(const Polynomial& P, const std::string& what) {
  if (P.is_zero()) throw InputError("zero polynomial");
  if (P.nvars() != 3)
    throw InputError(what + " needs a form in three variables, got " +
                     std::to_string(P.nvars()));
  if (!P.is_homogeneous()) throw InputError(what + " needs a homogeneous form");
}

// Odd-multiplicity real roots on sample lines in both directions.
bool has_real_branch(const Polynomial& h) {
  Polynomial hr = h.is_rational() ? h : h * h.conj();
  const auto& v = hr.vars();
  for (int dir = 0; dir < 2; ++dir) {
    const std::string &a = v[dir], &b = v[1 - dir];
    for (int k = -12; k <= 12; ++k) {
      FieldPoly u = specialize(hr, a, Coefficient(mpq_class(k, 2)), b);
      if (u.degree() <= 0) continue;
      for (const auto& [f, m] : u.squarefree())
        if (m % 2 == 1 && has_real_root(f)) return true;
    }
  }
  return false;
}

bool vanishes(const std::vector<Polynomial>& forms, const std::vector<Coefficient>& pt) {
  for (const auto& F : forms)
    if (!F.evaluate(pt).is_zero()) return false;
  return true;
}

bool missing_matters(const RootSplit& rs, bool real_only) {
  return real_only ? rs.unsupported_real_roots : !rs.unsupported.empty();
}

std::string degrees_of(const RootSplit& rs) {
  std::string s;
  for (const auto& f : rs.unsupported) s += (s.empty() ? "" : ", ") + std::to_string(f.degree());
  return s;
}

FieldPoly on_line_at_infinity(const Polynomial& F) {
  std::vector<Coefficient> c(F.degree() + 1, Coefficient(0));
  for (const auto& [e, v] : F.terms())
    if (e[2] == 0) c[e[0]] = v;
  return FieldPoly(std::move(c));
}

FieldPoly gcd_all(const std::vector<FieldPoly>& polys) {
  FieldPoly g;
  for (const auto& u : polys) g = FieldPoly::gcd(g, u);
  return g;
}

void affine_zeros(const std::vector<Polynomial>& forms, bool real_only, unsigned seed,
                  ZeroSet& out, std::set<ProjectivePoint>& found) {
  const auto& vars = forms.front().vars();
  const std::string &x = vars[0], &y = vars[1], &z = vars[2];
  std::vector<Polynomial> fs;
  for (const auto& F : forms) {
    Polynomial f = dehomogenize(F, z);
    if (f.is_constant()) return;
    fs.push_back(f);
  }
  Polynomial h = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) h = bivariate_gcd(h, fs[i]);
  if (h.degree() > 0) {
    out.complete = false;
    out.positive_dimensional = !real_only || has_real_branch(h);
    out.reasons.push_back("common factor " + h.to_string() + " in the affine chart");
    return;
  }

  FieldPoly R;
  if (fs.size() == 2) {
    R = resultant_y(fs[0], fs[1], x, y);
  } else {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(1, 9);
    for (int attempt = 0; attempt < 8 && R.is_zero(); ++attempt) {
      std::vector<Polynomial> combo(3, Polynomial(fs.front().vars()));
      for (auto& c : combo)
        for (const auto& f : fs) c += f * Coefficient(pick(rng) * (pick(rng) % 2 ? 1 : -1));
      FieldPoly r1 = resultant_y(combo[0], combo[1], x, y);
      FieldPoly r2 = resultant_y(combo[0], combo[2], x, y);
      if (!r1.is_zero() && !r2.is_zero()) R = FieldPoly::gcd(r1, r2);
    }
  }
  if (R.is_zero()) {
    out.complete = false;
    out.reasons.push_back("elimination degenerated in the affine chart");
    return;
  }
  if (R.degree() <= 0) return;

  RootSplit xs = exact_roots(R);
  if (missing_matters(xs, real_only)) {
    out.complete = false;
    out.reasons.push_back("x-coordinates in factors of degree " + degrees_of(xs) +
                          " lie outside Q and quadratic fields");
  }
  for (const auto& x0 : xs.roots) {
    if (real_only && !x0.value.is_real()) continue;
    std::vector<FieldPoly> slices;
    for (const auto& f : fs) slices.push_back(specialize(f, x, x0.value, y));
    FieldPoly g = gcd_all(slices);
    if (g.degree() <= 0) continue;
    RootSplit ys;
    try {
      ys = exact_roots(g);
    } catch (const FieldMismatch&) {
      out.complete = false;
      out.reasons.push_back("points over x = " + x0.value.to_string() + " need a field tower");
      continue;
    }
    if (missing_matters(ys, real_only)) {
      out.complete = false;
      out.reasons.push_back("points over x = " + x0.value.to_string() + " need a field tower");
    }
    for (const auto& y0 : ys.roots) {
      if (real_only && !y0.value.is_real()) continue;
      std::vector<Coefficient> pt{x0.value, y0.value, Coefficient(1)};
      try {
        if (vanishes(forms, pt)) found.insert(ProjectivePoint(pt));
      } catch (const FieldMismatch&) {
        out.complete = false;
        out.reasons.push_back("point needs a field tower");
      }
    }
  }
}

void zeros_at_infinity(const std::vector<Polynomial>& forms, bool real_only, ZeroSet& out,
                       std::set<ProjectivePoint>& found) {
  std::vector<FieldPoly> slices;
  for (const auto& F : forms) slices.push_back(on_line_at_infinity(F));
  FieldPoly g = gcd_all(slices);
  if (g.is_zero()) {
    out.complete = false;
    out.positive_dimensional = true;
    out.reasons.push_back("every form vanishes on the line " + forms.front().vars()[2] + " = 0");
    return;
  }
  std::vector<Coefficient> e1{Coefficient(1), Coefficient(0), Coefficient(0)};
  if (vanishes(forms, e1)) found.insert(ProjectivePoint(e1));
  if (g.degree() <= 0) return;
  RootSplit ts = exact_roots(g);
  if (missing_matters(ts, real_only)) {
    out.complete = false;
    out.reasons.push_back("points at infinity in factors of degree " + degrees_of(ts) +
                          " lie outside Q and quadratic fields");
  }
  for (const auto& t0 : ts.roots) {
    if (real_only && !t0.value.is_real()) continue;
    std::vector<Coefficient> pt{t0.value, Coefficient(1), Coefficient(0)};
    if (vanishes(forms, pt)) found.insert(ProjectivePoint(pt));
  }
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : "; ") + p;
  return s;
}

std::string point_text(const std::vector<mpq_class>& p) {
  std::vector<Coefficient> c;
  for (const auto& v : p) c.push_back(Coefficient(v));
  return ProjectivePoint(c).to_string();
}

// Exact checks on sample lines plus random sampling on the sphere.
std::string check_nonnegative(const Polynomial& P, const CertifyOptions& options) {
  const std::vector<mpq_class> offsets{-2, -1, mpq_class(-1, 2), 0, mpq_class(1, 2), 1, 2};
  const std::string t = "t";
  int lines = 0;
  for (int pos = 0; pos < 3; ++pos)
    for (const auto& c : offsets) {
      std::vector<Polynomial> line;
      for (int i = 0, other = 0; i < 3; ++i) {
        if (i == pos) {
          line.push_back(Polynomial::variable(t, {t}));
        } else {
          line.push_back(Polynomial::constant(other++ == 0 ? Coefficient(1) : Coefficient(c), {t}));
        }
      }
      std::map<std::string, Polynomial> sigma;
      for (int i = 0; i < 3; ++i) sigma.emplace(P.vars()[i], line[i]);
      Polynomial u = substitute(P, sigma);
      ++lines;
      if (u.degree() <= 0) {
        if (u.coeff(Exponent(u.nvars(), 0)).rational() < 0)
          throw InapplicableError("form is negative on a sample line");
        continue;
      }
      NonnegResult r = univariate_nonneg(u.with_vars({t}));
      if (!r.nonneg) {
        std::vector<mpq_class> w(3);
        for (int i = 0, other = 0; i < 3; ++i)
          w[i] = i == pos ? *r.witness : (other++ == 0 ? mpq_class(1) : c);
        throw InapplicableError("form takes a negative value at " + point_text(w));
      }
    }

  double scale = 0;
  for (const auto& [e, c] : P.terms()) scale += std::abs(c.to_double());
  std::mt19937 rng(options.seed);
  std::normal_distribution<double> normal;
  for (int s = 0; s < options.samples; ++s) {
    std::vector<double> x(3);
    for (auto& v : x) v = normal(rng);
    double n = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    for (auto& v : x) v /= n;
    if (P.evaluate_double(x) >= -1e-9 * scale) continue;
    std::vector<mpq_class> q(3);
    std::vector<Coefficient> qc;
    for (int i = 0; i < 3; ++i) {
      q[i] = mpq_class(x[i]);
      qc.push_back(Coefficient(q[i]));
    }
    if (P.evaluate(qc).rational() < 0)
      throw InapplicableError("form takes a negative value at " + point_text(q));
  }
  return "exact on " + std::to_string(lines) + " lines, sampled at " +
         std::to_string(options.samples) + " points; assumed nonnegative elsewhere";
}

nlohmann::json point_json(const ProjectivePoint& p) { return p.to_string(); }

}  // namespace

ZeroSet common_zeros(const std::vector<Polynomial>& forms, bool real_only, unsigned seed) {
  std::vector<std::string> vars;
  for (const auto& F : forms) vars = union_vars(vars, F.vars());
  if (vars.size() != 3) throw InputError("common zeros need forms in three variables");
  std::vector<Polynomial> fs;
  for (const auto& F : forms) {
    if (F.is_zero()) continue;
    if (!F.is_homogeneous()) throw InputError("common zeros need homogeneous forms");
    fs.push_back(F.with_vars(vars));
  }
  if (fs.size() < 2) throw InputError("common zeros need at least two nonzero forms");
  ZeroSet out;
  std::set<ProjectivePoint> found;
  affine_zeros(fs, real_only, seed, out, found);
  zeros_at_infinity(fs, real_only, out, found);
  out.points.assign(found.begin(), found.end());
  return out;
}

ZeroSet locate_real_zeros(const Polynomial& P) {
  require_ternary_form(P, "zero location");
  ZeroSet out;
  if (P.degree() % 2 == 1) {
    out.complete = false;
    out.positive_dimensional = true;
    out.reasons.push_back("a form of odd degree vanishes on a real curve");
    return out;
  }
  std::vector<Polynomial> family{P};
  for (std::size_t i = 0; i < 3; ++i) family.push_back(P.derivative(i));
  return common_zeros(family, true);
}

IntersectionCount intersection_count(const Polynomial& F, const Polynomial& G) {
  auto vars = union_vars(F.vars(), G.vars());
  Polynomial A = F.with_vars(vars), B = G.with_vars(vars);
  require_ternary_form(A, "intersection count");
  require_ternary_form(B, "intersection count");
  ZeroSet zs = common_zeros({A, B}, false);
  if (zs.positive_dimensional) throw InputError("forms share a common factor");
  IntersectionCount out;
  out.complete = zs.complete;
  out.reasons = zs.reasons;
  for (const auto& p : zs.points) {
    const std::string& chart = vars[p.chart()];
    auto im = intersection_multiplicity(dehomogenize(A, chart), dehomogenize(B, chart), p.affine());
    if (im.infinite) throw InputError("forms share a component through " + p.to_string());
    out.points.push_back({p, im.value});
    out.total += im.value;
  }
  return out;
}

std::string to_string(Verdict v) { return v == Verdict::Stubborn ? "stubborn" : "inconclusive"; }

StubbornnessCertificate certify_stubborn(const Polynomial& P,
                                         const std::optional<std::vector<ProjectivePoint>>& zeros,
                                         const CertifyOptions& options) {
  require_ternary_form(P, "certification");
  if (!P.is_rational()) throw InputError("certification needs rational coefficients");
  if (P.degree() % 2 == 1) throw InapplicableError("a form of odd degree takes negative values");

  StubbornnessCertificate cert;
  cert.form = P;
  cert.degree = P.degree();
  cert.threshold = mpq_class(cert.degree * cert.degree, 4);
  cert.threshold.canonicalize();
  cert.nonnegativity = check_nonnegative(P, options);

  ZeroSet zs;
  if (zeros) {
    for (const auto& X : *zeros) {
      if (X.dim() != 3) throw InputError("point " + X.to_string() + " is not in the plane");
      std::vector<Polynomial> family{P};
      for (std::size_t i = 0; i < 3; ++i) family.push_back(P.derivative(i));
      if (!vanishes(family, X.coords()))
        throw InputError(X.to_string() + " is not a singular zero of the form");
    }
    std::set<ProjectivePoint> unique(zeros->begin(), zeros->end());
    zs.points.assign(unique.begin(), unique.end());
    zs.complete = false;
    zs.reasons.push_back("zeros supplied by the caller");
  } else {
    zs = locate_real_zeros(P);
    if (zs.positive_dimensional)
      throw NonIsolatedZero("the real zero set is not finite: " + join(zs.reasons));
  }
  cert.zeros_complete = zs.complete;
  cert.zero_reasons = zs.reasons;

  InvariantReport rep = invariant_report(P, zs.points, {}, options.jobs);
  for (const auto& z : rep.per_zero)
    if (!z.local.locally_nonnegative)
      throw InapplicableError("form is not locally nonnegative at " + z.point.to_string());
  cert.zeros = std::move(rep.per_zero);
  cert.total = rep.delta_sos;
  cert.delta_total = rep.delta;
  bool round = !cert.zeros.empty();
  for (const auto& z : cert.zeros)
    if (z.local.delta_sos != 1) round = false;

  if (cert.total > cert.threshold) {
    cert.verdict = Verdict::Stubborn;
    cert.provenance = round ? "round-zeros" : "sos-invariant";
  } else {
    cert.verdict = Verdict::Inconclusive;
    cert.provenance = "sos-invariant";
    cert.notes.push_back("total " + rational_to_string(cert.total) + " does not exceed " +
                         rational_to_string(cert.threshold));
    if (!cert.zeros_complete) cert.notes.push_back("the zero set may be partial");
  }
  return cert;
}

Lift lift_by_monomial(const Polynomial& P, unsigned m) {
  if (P.is_zero()) throw InputError("zero polynomial");
  if (P.nvars() == 0) throw InputError("lift needs at least one variable");
  Lift out;
  if (m == 0) {
    out.form = P;
    out.note = "unchanged";
    return out;
  }
  const std::string& v = P.vars()[0];
  out.form = power(Polynomial::variable(v, P.vars()), 2 * m) * P;
  out.reducible = true;
  out.note = v + "^" + std::to_string(2 * m) + " times the base form; stubbornness transfers " +
             "from the base";
  return out;
}

StubbornnessCertificate lift_certificate(const StubbornnessCertificate& base, unsigned m) {
  if (m == 0) return base;
  Lift lift = lift_by_monomial(base.form, m);
  StubbornnessCertificate cert;
  cert.form = lift.form;
  cert.degree = lift.form.degree();
  cert.threshold = base.threshold;
  cert.total = base.total;
  cert.verdict = base.verdict;
  cert.provenance = "monomial-lift";
  cert.nonnegativity = base.nonnegativity;
  cert.zeros_complete = base.zeros_complete;
  cert.notes.push_back(lift.note);
  cert.notes.push_back("base form " + base.form.to_string() + " is " + to_string(base.verdict));
  return cert;
}

std::string SubstitutionMismatch::to_string() const {
  return "coefficient of " + Polynomial::monomial(vars, monomial).to_string() + " differs by " +
         difference.to_string();
}

std::optional<SubstitutionMismatch> check_substitution(
    const Polynomial& P, const std::map<std::string, Polynomial>& sigma,
    const Polynomial& expected) {
  Polynomial image = substitute(P, sigma);
  auto vars = union_vars(image.vars(), expected.vars());
  Polynomial diff = image.with_vars(vars) - expected.with_vars(vars);
  if (diff.is_zero()) return std::nullopt;
  const auto& [e, c] = *diff.terms().begin();
  return SubstitutionMismatch{e, c, vars};
}

StubbornnessCertificate restriction_transfer(const Polynomial& P,
                                             const std::map<std::string, Polynomial>& sigma,
                                             const StubbornnessCertificate& base,
                                             const std::optional<std::string>& chart_var) {
  if (P.is_zero()) throw InputError("zero polynomial");
  Polynomial expected = chart_var ? dehomogenize(base.form, *chart_var) : base.form;
  if (auto mismatch = check_substitution(P, sigma, expected))
    throw InapplicableError("substitution identity fails: " + mismatch->to_string());
  StubbornnessCertificate cert;
  cert.form = P;
  cert.degree = P.degree();
  cert.threshold = base.threshold;
  cert.total = base.total;
  cert.verdict = base.verdict;
  cert.provenance = "substitution";
  cert.zeros_complete = base.zeros_complete;
  cert.notes.push_back("substitution image equals " + expected.to_string());
  cert.notes.push_back("base form " + base.form.to_string() + " is " + to_string(base.verdict));
  return cert;
}

nlohmann::json to_json(const ZeroSet& z) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : z.points) pts.push_back(point_json(p));
  return {{"points", pts},
          {"complete", z.complete},
          {"positive_dimensional", z.positive_dimensional},
          {"reasons", z.reasons}};
}

nlohmann::json to_json(const IntersectionCount& c) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : c.points)
    pts.push_back({{"point", point_json(p.point)}, {"multiplicity", p.multiplicity}});
  return {{"points", pts}, {"total", c.total}, {"complete", c.complete}, {"reasons", c.reasons}};
}

nlohmann::json to_json(const StubbornnessCertificate& c, bool include_trees) {
  nlohmann::json zeros = nlohmann::json::array();
  for (const auto& z : c.zeros) {
    nlohmann::json local = to_json(z.local);
    if (!include_trees) local.erase("tree");
    local["point"] = point_json(z.point);
    zeros.push_back(local);
  }
  nlohmann::json j;
  j["form"] = c.form.to_string();
  j["degree"] = c.degree;
  j["zeros"] = zeros;
  j["zeros_complete"] = c.zeros_complete;
  j["zero_reasons"] = c.zero_reasons;
  j["delta_sos_total"] = rational_to_string(c.total);
  j["threshold"] = rational_to_string(c.threshold);
  j["delta_total"] = c.delta_total ? nlohmann::json(*c.delta_total) : nlohmann::json(nullptr);
  j["verdict"] = to_string(c.verdict);
  j["provenance"] = c.provenance;
  j["nonnegativity"] = c.nonnegativity;
  j["notes"] = c.notes;
  return j;
}

}  // namespace stubborn

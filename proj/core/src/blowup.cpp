#include "stubborn/blowup.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <mutex>
#include <random>

#include "stubborn/elimination.hpp"
#include "stubborn/errors.hpp"

namespace stubborn {
namespace {

void require_bivariate(const Polynomial& p) {
  if (p.nvars() != 2) throw InputError("expected a polynomial in two variables: " + p.to_string());
}

std::optional<long> add(std::optional<long> a, std::optional<long> b, long factor = 1) {
  if (!a || !b) return std::nullopt;
  return *a + factor * *b;
}

// Chart substitution on a polynomial centered at the origin, divided by e^m.
StrictTransform chart_transform(const Polynomial& q, const Direction& d, int m) {
  const auto& v = q.vars();
  StrictTransform st;
  st.m = m;
  Polynomial out(v);
  if (d.y.is_zero()) {
    st.chart = v[1] + " = " + v[1] + "'*" + v[0];
    for (const auto& [e, c] : q.terms()) out.add_term({e[0] + e[1] - m, e[1]}, c);
    st.poly = out;
    return st;
  }
  Coefficient a = d.x / d.y;
  st.chart = v[0] + " = " +
             (a.is_zero() ? v[0] + "'" : "(" + v[0] + "' + " + a.to_string() + ")") + "*" + v[1];
  unsigned top = static_cast<unsigned>(std::max(q.degree_in(0), 0));
  std::vector<Coefficient> apow(top + 1);
  apow[0] = 1;
  for (unsigned k = 1; k <= top; ++k) apow[k] = apow[k - 1] * a;
  for (const auto& [e, c] : q.terms()) {
    unsigned n = e[0];
    mpz_class binom = 1;
    for (unsigned k = 0; k <= n; ++k) {
      // c * C(n,k) x^k a^(n-k) y^(n + e1 - m)
      if (k == n || !a.is_zero())
        out.add_term({k, n + e[1] - m}, c * Coefficient(mpq_class(binom)) * apow[n - k]);
      binom = binom * (n - k) / (k + 1);
    }
  }
  st.poly = out;
  return st;
}

std::vector<Coefficient> chart_point(const Direction& d) {
  if (d.y.is_zero()) return {Coefficient(0), Coefficient(0)};
  return {d.x / d.y, Coefficient(0)};
}

bool real_coefficients(const Polynomial& p) {
  for (const auto& [e, c] : p.terms())
    if (!c.is_real()) return false;
  return true;
}

std::string factor_string(const FieldPoly& f, const Polynomial& cone) {
  return from_fieldpoly(f, cone.vars()[0] + "/" + cone.vars()[1]).to_string();
}

struct Ctx {
  DeltaOptions opt;
  bool nonneg = true;
  std::vector<std::string> notes;
};

ResolutionNode resolve(const Polynomial& q, int depth, Reality reality, Ctx& ctx);

ResolutionNode make_child(const Polynomial& q, const Direction& d, int m, int depth,
                          Reality reality, Ctx& ctx) {
  StrictTransform st = chart_transform(q, d, m);
  ResolutionNode child = resolve(st.poly, depth + 1, reality, ctx);
  child.center = chart_point(d);
  child.chart = st.chart;
  child.direction = d;
  child.tangent_multiplicity = d.multiplicity;
  return child;
}

ResolutionNode resolve(const Polynomial& q, int depth, Reality reality, Ctx& ctx) {
  ResolutionNode node;
  node.local_poly = q;
  node.reality = reality;
  node.m = q.lowest_degree();
  const bool real = reality == Reality::Real;
  if (node.m <= 1) {
    node.delta = node.delta_real = node.delta_real_strict = 0;
    if (real && node.m == 1) ctx.nonneg = false;
    return node;
  }
  if (depth >= ctx.opt.max_depth)
    throw Error("blow-up depth limit " + std::to_string(ctx.opt.max_depth) +
                " reached; last strict transform " + q.to_string());
  const int m = node.m;
  const long base = static_cast<long>(m) * (m - 1) / 2;
  node.delta = ctx.opt.sos_only ? std::nullopt : std::optional<long>(base);
  node.delta_real = node.delta;
  node.delta_real_strict = base;
  node.delta_sos = mpq_class(m * m, 4);
  node.delta_sos.canonicalize();

  Polynomial cone = q.homogeneous_part(m);
  BinaryFormFactorization fac = binary_real_tangents(cone);
  if (real && m % 2 == 1) ctx.nonneg = false;
  for (std::size_t i = 0; i < fac.unsupported.size(); ++i) {
    if (fac.unsupported_multiplicity[i] < 2) continue;
    if (real && has_real_root(fac.unsupported[i]))
      throw UnsupportedExtension("repeated real tangent factor without roots in a quadratic field: " +
                                 factor_string(fac.unsupported[i], cone));
    node.delta = std::nullopt;
    ctx.notes.push_back("complex delta unavailable: repeated tangent factor " +
                        factor_string(fac.unsupported[i], cone));
  }

  for (const auto& d : fac.rational_linear) {
    if (real && d.multiplicity % 2 == 1) ctx.nonneg = false;
    ResolutionNode child = make_child(q, d, m, depth, reality, ctx);
    node.delta = add(node.delta, child.delta);
    node.delta_real = add(node.delta_real, child.delta);
    node.delta_real_strict = add(node.delta_real_strict, child.delta_real_strict);
    node.delta_sos += child.delta_sos;
    node.children.push_back(std::move(child));
  }
  if (!ctx.opt.sos_only) {
    Reality cr = real && fac.conjugate_closed ? Reality::ComplexPair : Reality::Complex;
    long factor = cr == Reality::ComplexPair ? 2 : 1;
    for (const auto& d : fac.complex_pairs) {
      try {
        ResolutionNode child = make_child(q, d, m, depth, cr, ctx);
        node.delta = add(node.delta, child.delta, factor);
        node.children.push_back(std::move(child));
      } catch (const FieldMismatch& e) {
        node.delta = std::nullopt;
        ctx.notes.push_back(std::string("complex delta unavailable: ") + e.what());
      }
    }
  }
  if (!real) {
    node.delta_real = node.delta_real_strict = std::nullopt;
    node.delta_sos = 0;
  }
  return node;
}

void screen_repeated(const Polynomial& q) {
  Polynomial g = repeated_part(q);
  if (g.degree() > 0 && g.coeff(Exponent(g.nvars(), 0)).is_zero())
    throw NonIsolatedZero("repeated factor " + g.to_string() + " passes through the center");
}

Polynomial centered(const Polynomial& p, const std::vector<Coefficient>& center) {
  require_bivariate(p);
  Polynomial q = translate(p, center);
  if (!q.coeff(Exponent(2, 0)).is_zero()) throw InputError("center is not a zero of " + p.to_string());
  return q;
}

bool real_center(const Polynomial& p, const std::vector<Coefficient>& center) {
  for (const auto& c : center)
    if (!c.is_real()) return false;
  return real_coefficients(p);
}

// Common tangent directions of two cones, each distinct direction once.
std::vector<Direction> common_directions(const Polynomial& cf, const Polynomial& cg) {
  auto y_order = [](const Polynomial& c) {
    unsigned k = ~0u;
    for (const auto& [e, v] : c.terms()) k = std::min(k, e[1]);
    return k;
  };
  auto dehom = [](const Polynomial& c) {
    std::vector<Coefficient> u(c.degree() + 1);
    for (const auto& [e, v] : c.terms()) u[e[0]] = v;
    return FieldPoly(std::move(u));
  };
  std::vector<Direction> out;
  FieldPoly h = FieldPoly::gcd(dehom(cf), dehom(cg));
  if (h.degree() > 0) {
    RootSplit rs = exact_roots(h);
    if (!rs.unsupported.empty())
      throw UnsupportedExtension("common tangent factor without roots in a quadratic field: " +
                                 from_fieldpoly(rs.unsupported[0], "t").to_string());
    for (const auto& r : rs.roots) out.push_back({r.value, Coefficient(1), r.multiplicity});
  }
  if (y_order(cf) > 0 && y_order(cg) > 0) out.push_back({Coefficient(1), Coefficient(0), 1});
  return out;
}

long noether(const Polynomial& f, const Polynomial& g, int depth) {
  int mf = f.lowest_degree(), mg = g.lowest_degree();
  if (mf == 0 || mg == 0) return 0;
  if (depth >= 64) throw Error("intersection recursion depth limit reached");
  long total = static_cast<long>(mf) * mg;
  for (const auto& d : common_directions(f.homogeneous_part(mf), g.homogeneous_part(mg))) {
    Polynomial f1 = chart_transform(f, d, mf).poly;
    Polynomial g1 = chart_transform(g, d, mg).poly;
    total += noether(f1, g1, depth + 1);
  }
  return total;
}

LocalInvariants collect(ResolutionNode tree, Ctx& ctx) {
  LocalInvariants inv;
  inv.delta = tree.delta;
  inv.delta_real = tree.delta_real;
  inv.delta_real_strict = tree.delta_real_strict;
  inv.delta_sos = tree.delta_sos;
  inv.locally_nonnegative = ctx.nonneg;
  inv.notes = std::move(ctx.notes);
  if (!inv.locally_nonnegative)
    inv.notes.push_back("not locally nonnegative: odd multiplicity or sign-changing real tangent");
  inv.tree = std::move(tree);
  return inv;
}

nlohmann::json coeffs_json(const std::vector<Coefficient>& c) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& v : c) a.push_back(v.to_string());
  return a;
}

template <class T>
nlohmann::json opt_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

std::string to_string(Reality r) {
  switch (r) {
    case Reality::Real:
      return "real";
    case Reality::ComplexPair:
      return "complex-pair";
    case Reality::Complex:
      return "complex";
  }
  return "?";
}

StrictTransform strict_transform(const Polynomial& p, const std::vector<Coefficient>& center,
                                 const Direction& direction) {
  Polynomial q = centered(p, center);
  int m = q.lowest_degree();
  Polynomial cone = q.homogeneous_part(m);
  if (!cone.evaluate({direction.x, direction.y}).is_zero())
    throw InputError("direction " + direction.to_string() + " is not a root of the tangent cone " +
                     cone.to_string());
  return chart_transform(q, direction, m);
}

NearPoints infinitely_near_points(const Polynomial& p, const std::vector<Coefficient>& center,
                                  NearVariant variant) {
  Polynomial q = centered(p, center);
  int m = q.lowest_degree();
  BinaryFormFactorization fac = binary_real_tangents(q.homogeneous_part(m));
  if (fac.has_unsupported_real_roots)
    throw UnsupportedExtension("real tangent factor without roots in a quadratic field: " +
                               fac.irreducible_remainder.to_string());
  NearPoints out;
  for (const auto& d : fac.rational_linear)
    out.points.push_back({d, Reality::Real, d.multiplicity, chart_point(d)});
  if (variant == NearVariant::Complex) {
    Reality cr = fac.conjugate_closed ? Reality::ComplexPair : Reality::Complex;
    for (const auto& d : fac.complex_pairs) out.points.push_back({d, cr, d.multiplicity, chart_point(d)});
    out.unsupported_degrees = fac.remainder_degrees;
  }
  return out;
}

LocalInvariants delta_invariants(const Polynomial& p, const std::vector<Coefficient>& center,
                                 const DeltaOptions& options) {
  Polynomial q = centered(p, center);
  screen_repeated(q);
  Ctx ctx{options, true, {}};
  ResolutionNode tree = resolve(q, 0, real_center(p, center) ? Reality::Real : Reality::Complex, ctx);
  tree.center = center;
  return collect(std::move(tree), ctx);
}

mpq_class sos_invariant_of_power(const Polynomial& p, const std::vector<Coefficient>& center,
                                 unsigned k) {
  if (k == 0) throw InputError("power must be positive");
  Polynomial q = centered(p, center);
  screen_repeated(q);
  if (!real_center(p, center)) throw InputError("SOS-invariant needs a real zero");
  DeltaOptions opt;
  opt.sos_only = true;
  Ctx ctx{opt, true, {}};
  return resolve(power(q, k), 0, Reality::Real, ctx).delta_sos;
}

IntersectionMultiplicity intersection_multiplicity(const Polynomial& f, const Polynomial& g,
                                                   const std::vector<Coefficient>& center) {
  auto vars = union_vars(f.vars(), g.vars());
  if (vars.size() != 2) throw InputError("intersection multiplicity needs two variables");
  Polynomial F = translate(f.with_vars(vars), center), G = translate(g.with_vars(vars), center);
  IntersectionMultiplicity r;
  if (F.is_zero() || G.is_zero()) {
    r.infinite = true;
    return r;
  }
  if (F.lowest_degree() == 0 || G.lowest_degree() == 0) return r;
  Polynomial h = bivariate_gcd(F, G);
  if (h.degree() > 0 && h.coeff(Exponent(2, 0)).is_zero()) {
    r.infinite = true;
    return r;
  }
  r.value = noether(F, G, 0);
  return r;
}

long resultant_intersection_oracle(const Polynomial& f, const Polynomial& g,
                                   const std::vector<Coefficient>& center, int trials,
                                   unsigned seed) {
  auto vars = union_vars(f.vars(), g.vars());
  if (vars.size() != 2) throw InputError("resultant oracle needs two variables");
  Polynomial F = translate(f.with_vars(vars), center), G = translate(g.with_vars(vars), center);
  if (F.lowest_degree() == 0 || G.lowest_degree() == 0) return 0;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(-7, 7);
  const std::string &x = vars[0], &y = vars[1];
  Polynomial X = Polynomial::variable(x, vars), Y = Polynomial::variable(y, vars);
  long best = -1;
  for (int t = 0; t < trials; ++t) {
    int a = pick(rng);
    std::map<std::string, Polynomial> shear{{x, X + Y * Coefficient(a)}, {y, Y}};
    FieldPoly R = resultant_y(substitute(F, shear), substitute(G, shear), x, y);
    int ord = order_at_zero(R);
    if (ord < 0) continue;
    if (best < 0 || ord < best) best = ord;
  }
  if (best < 0) throw Error("resultant oracle degenerate after all retries (common factor?)");
  return best;
}

LocalInvariants delta_at_point(const Polynomial& F, const ProjectivePoint& X,
                               const DeltaOptions& options) {
  if (F.nvars() != X.dim()) throw InputError("point dimension does not match the form");
  Polynomial f = dehomogenize(F, F.vars()[X.chart()]);
  return delta_invariants(f, X.affine(), options);
}

InvariantReport invariant_report(const Polynomial& F, const std::vector<ProjectivePoint>& zeros,
                                 const DeltaOptions& options, int jobs) {
  InvariantReport rep;
  std::vector<LocalInvariants> local(zeros.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < zeros.size(); ++i) local[i] = delta_at_point(F, zeros[i], options);
  } else {
    std::vector<std::future<void>> tasks;
    std::size_t next = 0;
    std::mutex mu;
    for (int w = 0; w < jobs; ++w)
      tasks.push_back(std::async(std::launch::async, [&] {
        for (;;) {
          std::size_t i;
          {
            std::lock_guard<std::mutex> lock(mu);
            if (next >= zeros.size()) return;
            i = next++;
          }
          local[i] = delta_at_point(F, zeros[i], options);
        }
      }));
    for (auto& t : tasks) t.get();
  }
  rep.delta = 0;
  rep.delta_real = 0;
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    rep.delta = add(rep.delta, local[i].delta);
    rep.delta_real = add(rep.delta_real, local[i].delta_real);
    rep.delta_sos += local[i].delta_sos;
    rep.per_zero.push_back({zeros[i], std::move(local[i])});
  }
  return rep;
}

nlohmann::json to_json(const ResolutionNode& node) {
  nlohmann::json j;
  j["center"] = coeffs_json(node.center);
  j["chart"] = node.chart;
  if (node.direction) j["direction"] = node.direction->to_string();
  j["m"] = node.m;
  if (node.direction) j["tangent_multiplicity"] = node.tangent_multiplicity;
  j["reality"] = to_string(node.reality);
  j["local_poly"] = node.local_poly.to_string();
  j["contribution"] = {{"delta", opt_json(node.delta)},
                       {"delta_real", opt_json(node.delta_real)},
                       {"delta_real_strict", opt_json(node.delta_real_strict)},
                       {"delta_sos", rational_to_string(node.delta_sos)}};
  nlohmann::json kids = nlohmann::json::array();
  for (const auto& c : node.children) kids.push_back(to_json(c));
  j["children"] = kids;
  return j;
}

nlohmann::json to_json(const LocalInvariants& inv) {
  nlohmann::json j;
  j["delta"] = opt_json(inv.delta);
  j["delta_real"] = opt_json(inv.delta_real);
  j["delta_real_strict"] = opt_json(inv.delta_real_strict);
  j["delta_sos"] = rational_to_string(inv.delta_sos);
  j["locally_nonnegative"] = inv.locally_nonnegative;
  j["notes"] = inv.notes;
  j["tree"] = to_json(inv.tree);
  return j;
}

}  // namespace stubborn

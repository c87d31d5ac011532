#include "stubborn/elimination.hpp"

#include <algorithm>

#include "stubborn/errors.hpp"

namespace stubborn {
namespace {

int degree_y(const BiPoly& b) { return static_cast<int>(b.size()) - 1; }

void trim(BiPoly& b) {
  while (!b.empty() && b.back().is_zero()) b.pop_back();
}

FieldPoly content(const BiPoly& b) {
  FieldPoly c;
  for (const auto& v : b) c = FieldPoly::gcd(c, v);
  return c;
}

BiPoly primitive_part(const BiPoly& b) {
  if (b.empty()) return b;
  FieldPoly c = content(b);
  BiPoly out;
  for (const auto& v : b) out.push_back(v / c);
  return out;
}

BiPoly pseudo_remainder(BiPoly r, const BiPoly& b) {
  int db = degree_y(b);
  const FieldPoly& lb = b.back();
  while (!r.empty() && degree_y(r) >= db) {
    FieldPoly lr = r.back();
    int shift = degree_y(r) - db;
    for (auto& v : r) v = v * lb;
    for (int j = 0; j <= db; ++j) r[j + shift] = r[j + shift] - lr * b[j];
    trim(r);
  }
  return r;
}

// Variables of f and g that actually occur, in union order.
std::vector<std::string> occurring(const Polynomial& f, const Polynomial& g) {
  std::vector<std::string> out;
  for (const auto* p : {&f, &g})
    for (std::size_t i = 0; i < p->nvars(); ++i)
      if (p->degree_in(i) > 0 &&
          std::find(out.begin(), out.end(), p->vars()[i]) == out.end())
        out.push_back(p->vars()[i]);
  return out;
}

Polynomial normalized(Polynomial p) {
  if (p.is_zero()) return p;
  return p * p.terms().begin()->second.inverse();
}

}  // namespace

BiPoly to_bipoly(const Polynomial& p, const std::string& x, const std::string& y) {
  int xi = p.var_index(x), yi = p.var_index(y);
  for (std::size_t i = 0; i < p.nvars(); ++i)
    if (static_cast<int>(i) != xi && static_cast<int>(i) != yi && p.degree_in(i) > 0)
      throw InputError("unexpected variable " + p.vars()[i] + " in bivariate polynomial");
  std::vector<std::vector<Coefficient>> rows;
  for (const auto& [e, c] : p.terms()) {
    unsigned ex = xi < 0 ? 0 : e[xi], ey = yi < 0 ? 0 : e[yi];
    if (rows.size() <= ey) rows.resize(ey + 1);
    if (rows[ey].size() <= ex) rows[ey].resize(ex + 1);
    rows[ey][ex] += c;
  }
  BiPoly b;
  for (auto& r : rows) b.emplace_back(std::move(r));
  trim(b);
  return b;
}

Polynomial from_bipoly(const BiPoly& b, const std::string& x, const std::string& y) {
  Polynomial p({x, y});
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t i = 0; i < b[j].coeffs().size(); ++i)
      p.add_term({static_cast<unsigned>(i), static_cast<unsigned>(j)}, b[j].coeffs()[i]);
  return p;
}

Coefficient resultant(const FieldPoly& a0, const FieldPoly& b0) {
  if (a0.is_zero() || b0.is_zero()) return Coefficient();
  FieldPoly a = a0, b = b0;
  Coefficient acc = 1;
  for (;;) {
    int da = a.degree(), db = b.degree();
    if (db == 0) {
      Coefficient r = acc;
      for (int i = 0; i < da; ++i) r *= b.lc();
      return r;
    }
    if (da == 0) {
      Coefficient r = acc;
      for (int i = 0; i < db; ++i) r *= a.lc();
      return r;
    }
    FieldPoly r = a % b;
    if (r.is_zero()) return Coefficient();
    // res(a, b) = (-1)^(da db) lc(b)^(da - dr) res(b, r)
    if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
    for (int i = 0; i < da - r.degree(); ++i) acc *= b.lc();
    a = std::move(b);
    b = std::move(r);
  }
}

FieldPoly specialize(const Polynomial& f, const std::string& x, const Coefficient& x0,
                     const std::string& y) {
  BiPoly b = to_bipoly(f, x, y);
  std::vector<Coefficient> c;
  for (const auto& v : b) c.push_back(v.eval(x0));
  return FieldPoly(std::move(c));
}

FieldPoly resultant_y(const Polynomial& f, const Polynomial& g, const std::string& x,
                      const std::string& y) {
  BiPoly bf = to_bipoly(f, x, y), bg = to_bipoly(g, x, y);
  if (bf.empty() || bg.empty()) return FieldPoly();
  int df = degree_y(bf), dg = degree_y(bg);
  int xf = 0, xg = 0;
  for (const auto& v : bf) xf = std::max(xf, v.degree());
  for (const auto& v : bg) xg = std::max(xg, v.degree());
  int bound = df * xg + dg * xf;
  std::vector<Coefficient> xs, ys;
  for (long k = 0; static_cast<int>(xs.size()) <= bound; ++k) {
    Coefficient t(k % 2 == 0 ? -(k / 2) : (k + 1) / 2);
    if (bf.back().eval(t).is_zero() || bg.back().eval(t).is_zero()) continue;
    std::vector<Coefficient> cf, cg;
    for (const auto& v : bf) cf.push_back(v.eval(t));
    for (const auto& v : bg) cg.push_back(v.eval(t));
    xs.push_back(t);
    ys.push_back(resultant(FieldPoly(cf), FieldPoly(cg)));
  }
  // Newton divided differences.
  std::size_t n = xs.size();
  std::vector<Coefficient> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  FieldPoly out = FieldPoly::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;)
    out = out * FieldPoly(std::vector<Coefficient>{-xs[i], Coefficient(1)}) + FieldPoly::constant(dd[i]);
  return out;
}

Polynomial bivariate_gcd(const Polynomial& f, const Polynomial& g) {
  auto all = union_vars(f.vars(), g.vars());
  if (f.is_zero()) return normalized(g.with_vars(all));
  if (g.is_zero()) return normalized(f.with_vars(all));
  auto vars = occurring(f, g);
  if (vars.size() > 2) throw InputError("gcd supports at most two variables");
  if (vars.empty()) return Polynomial::constant(1, all);
  if (vars.size() == 1) {
    FieldPoly a = to_fieldpoly(f.compact().with_vars(vars));
    FieldPoly b = to_fieldpoly(g.compact().with_vars(vars));
    return normalized(from_fieldpoly(FieldPoly::gcd(a, b), vars[0]).with_vars(all));
  }
  const std::string &x = vars[0], &y = vars[1];
  BiPoly a = to_bipoly(f, x, y), b = to_bipoly(g, x, y);
  FieldPoly c = FieldPoly::gcd(content(a), content(b));
  a = primitive_part(a);
  b = primitive_part(b);
  if (degree_y(a) < degree_y(b)) std::swap(a, b);
  while (!b.empty()) {
    BiPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  a = primitive_part(a);
  for (auto& v : a) v = v * c;
  return normalized(from_bipoly(a, x, y).with_vars(all));
}

Polynomial repeated_part(const Polynomial& p) {
  Polynomial g = p;
  for (std::size_t i = 0; i < p.nvars(); ++i) g = bivariate_gcd(g, p.derivative(i));
  return g;
}

int order_at_zero(const FieldPoly& u) {
  if (u.is_zero()) return -1;
  int k = 0;
  while (u.coeffs()[k].is_zero()) ++k;
  return k;
}

}  // namespace stubborn

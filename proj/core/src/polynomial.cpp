#include "stubborn/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "stubborn/errors.hpp"

namespace stubborn {

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool GrlexGreater::operator()(const Exponent& x, const Exponent& y) const {
  unsigned dx = total_degree(x), dy = total_degree(y);
  if (dx != dy) return dx > dy;
  return x > y;
}

std::vector<std::string> union_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

Polynomial::Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

Polynomial Polynomial::constant(const Coefficient& c, std::vector<std::string> vars) {
  Polynomial p(std::move(vars));
  p.add_term(Exponent(p.nvars(), 0), c);
  return p;
}

Polynomial Polynomial::variable(const std::string& name, std::vector<std::string> vars) {
  if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(name);
  Polynomial p(std::move(vars));
  Exponent e(p.nvars(), 0);
  e[p.var_index(name)] = 1;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::monomial(std::vector<std::string> vars, Exponent e, const Coefficient& c) {
  Polynomial p(std::move(vars));
  if (e.size() != p.nvars()) throw InputError("exponent length does not match variable count");
  p.add_term(e, c);
  return p;
}

int Polynomial::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.begin()->first));
}

int Polynomial::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

int Polynomial::lowest_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.rbegin()->first));
}

bool Polynomial::is_homogeneous() const { return degree() == lowest_degree(); }

bool Polynomial::is_rational() const {
  for (const auto& [e, c] : terms_)
    if (!c.is_rational()) return false;
  return true;
}

long Polynomial::field() const {
  long d = 1;
  for (const auto& [e, c] : terms_) d = join_fields(d, c.field());
  return d;
}

Coefficient Polynomial::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Coefficient() : it->second;
}

void Polynomial::add_term(const Exponent& e, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::with_vars(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<int> pos(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it == vars.end()) {
      if (degree_in(i) > 0) throw InputError("variable " + vars_[i] + " missing from target list");
      pos[i] = -1;
    } else {
      pos[i] = static_cast<int>(it - vars.begin());
    }
  }
  Polynomial out(vars);
  for (const auto& [e, c] : terms_) {
    Exponent ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (pos[i] >= 0) ne[pos[i]] = e[i];
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

Polynomial Polynomial::compact() const {
  std::vector<std::string> used;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (degree_in(i) > 0) used.push_back(vars_[i]);
  return with_vars(used);
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  if (q.vars_ != vars_) {
    auto u = union_vars(vars_, q.vars_);
    *this = with_vars(u);
    Polynomial qq = q.with_vars(u);
    for (const auto& [e, c] : qq.terms_) add_term(e, c);
    return *this;
  }
  for (const auto& [e, c] : q.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) { return *this += -q; }

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.vars_ != q.vars_) {
    auto u = union_vars(p.vars_, q.vars_);
    return p.with_vars(u) * q.with_vars(u);
  }
  Polynomial out(p.vars_);
  std::size_t n = p.nvars();
  Exponent e(n);
  for (const auto& [ep, cp] : p.terms_) {
    for (const auto& [eq, cq] : q.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ep[i] + eq[i];
      out.add_term(e, cp * cq);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& q) { return *this = *this * q; }

Polynomial& Polynomial::operator*=(const Coefficient& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool operator==(const Polynomial& p, const Polynomial& q) {
  if (p.vars_ == q.vars_) return p.terms_ == q.terms_;
  Polynomial a = p.compact(), b = q.compact();
  if (a.terms_.size() != b.terms_.size()) return false;
  auto u = union_vars(a.vars_, b.vars_);
  return a.with_vars(u).terms_ == b.with_vars(u).terms_;
}

Coefficient Polynomial::evaluate(const std::vector<Coefficient>& point) const {
  if (point.size() != vars_.size()) throw InputError("point dimension does not match variables");
  // cache powers per variable
  std::vector<std::vector<Coefficient>> pw(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    int d = degree_in(i);
    pw[i].resize(std::max(d, 0) + 1);
    pw[i][0] = 1;
    for (int k = 1; k <= d; ++k) pw[i][k] = pw[i][k - 1] * point[i];
  }
  Coefficient s;
  for (const auto& [e, c] : terms_) {
    Coefficient t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= pw[i][e[i]];
    s += t;
  }
  return s;
}

double Polynomial::evaluate_double(const std::vector<double>& point) const {
  double s = 0;
  for (const auto& [e, c] : terms_) {
    double t = c.to_double();
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= std::pow(point[i], static_cast<int>(e[i]));
    s += t;
  }
  return s;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent ne = e;
    ne[var] -= 1;
    out.add_term(ne, c * Coefficient(static_cast<long>(e[var])));
  }
  return out;
}

Polynomial Polynomial::homogeneous_part(int deg) const {
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_)
    if (static_cast<int>(total_degree(e)) == deg) out.terms_.emplace(e, c);
  return out;
}

Polynomial Polynomial::conj() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = c.conj();
  return out;
}

Coefficient Polynomial::max_abs_coeff_rational() const {
  mpq_class m = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class v = abs(c.rational());
    if (v > m) m = v;
  }
  return Coefficient(m);
}

namespace {

std::string monomial_string(const std::vector<std::string>& vars, const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

// One printed piece: magnitude text with sign kept separate.
struct Piece {
  bool negative;
  std::string body;
};

Piece rational_piece(const mpq_class& q, const std::string& mono) {
  mpq_class mag = abs(q);
  std::string body;
  if (mono.empty()) body = mag.get_str();
  else if (mag == 1) body = mono;
  else body = mag.get_str() + "*" + mono;
  return {sgn(q) < 0, body};
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<Piece> pieces;
  for (const auto& [e, c] : terms_) {
    std::string mono = monomial_string(vars_, e);
    if (sgn(c.a()) != 0) pieces.push_back(rational_piece(c.a(), mono));
    if (!c.is_rational()) {
      std::string rad = "sqrt(" + std::to_string(c.field()) + ")";
      std::string tail = mono.empty() ? rad : rad + "*" + mono;
      mpq_class mag = abs(c.b());
      std::string body = mag == 1 ? tail : mag.get_str() + "*" + tail;
      pieces.push_back({sgn(c.b()) < 0, body});
    }
  }
  std::string s;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0) s += pieces[i].negative ? "-" : "";
    else s += pieces[i].negative ? " - " : " + ";
    s += pieces[i].body;
  }
  return s;
}

Polynomial power(const Polynomial& p, unsigned k) {
  Polynomial result = Polynomial::constant(1, p.vars());
  Polynomial base = p;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& assignment) {
  std::vector<Polynomial> images;
  std::vector<std::string> out_vars;
  for (const auto& v : p.vars()) {
    auto it = assignment.find(v);
    images.push_back(it == assignment.end() ? Polynomial::variable(v) : it->second);
    out_vars = union_vars(out_vars, images.back().vars());
  }
  for (auto& im : images) im = im.with_vars(out_vars);
  std::vector<std::vector<Polynomial>> pw(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    int d = p.degree_in(i);
    pw[i].push_back(Polynomial::constant(1, out_vars));
    for (int k = 1; k <= d; ++k) pw[i].push_back(pw[i].back() * images[i]);
  }
  Polynomial out(out_vars);
  for (const auto& [e, c] : p.terms()) {
    Polynomial t = Polynomial::constant(c, out_vars);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t = t * pw[i][e[i]];
    out += t;
  }
  return out;
}

Polynomial dehomogenize(const Polynomial& P, const std::string& chart_var) {
  int idx = P.var_index(chart_var);
  if (idx < 0) throw InputError("unknown chart variable " + chart_var);
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < P.nvars(); ++i)
    if (static_cast<int>(i) != idx) vars.push_back(P.vars()[i]);
  Polynomial out(vars);
  for (const auto& [e, c] : P.terms()) {
    Exponent ne;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (static_cast<int>(i) != idx) ne.push_back(e[i]);
    out.add_term(ne, c);
  }
  return out;
}

Polynomial homogenize(const Polynomial& p, const std::string& new_var, int d) {
  if (d < p.degree()) throw InputError("homogenize: target degree below polynomial degree");
  if (p.var_index(new_var) >= 0) throw InputError("homogenize: variable already present");
  auto vars = p.vars();
  vars.push_back(new_var);
  Polynomial out(vars);
  for (const auto& [e, c] : p.terms()) {
    Exponent ne = e;
    ne.push_back(static_cast<unsigned>(d) - total_degree(e));
    out.add_term(ne, c);
  }
  return out;
}

Polynomial translate(const Polynomial& p, const std::vector<Coefficient>& shift) {
  if (shift.size() != p.nvars()) throw InputError("shift dimension does not match variables");
  Polynomial cur = p;
  for (std::size_t v = 0; v < shift.size(); ++v) {
    if (shift[v].is_zero()) continue;
    int d = cur.degree_in(v);
    // binomial rows and powers of the shift
    std::vector<Coefficient> spow(d + 1);
    spow[0] = 1;
    for (int k = 1; k <= d; ++k) spow[k] = spow[k - 1] * shift[v];
    Polynomial next(cur.vars());
    for (const auto& [e, c] : cur.terms()) {
      unsigned n = e[v];
      mpz_class binom = 1;
      Exponent ne = e;
      for (unsigned k = 0; k <= n; ++k) {
        // term c * C(n,k) x^k s^(n-k)
        ne[v] = k;
        next.add_term(ne, c * Coefficient(mpq_class(binom)) * spow[n - k]);
        binom = binom * (n - k) / (k + 1);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw std::domain_error("division by zero polynomial");
  auto u = union_vars(p.vars(), q.vars());
  Polynomial r = p.with_vars(u), d = q.with_vars(u), quo(u);
  const auto& [lead_e, lead_c] = *d.terms().begin();
  Coefficient inv = lead_c.inverse();
  while (!r.is_zero()) {
    const auto& [re, rc] = *r.terms().begin();
    Exponent qe(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (re[i] < lead_e[i]) throw InputError("exact_divide: divisor does not divide");
      qe[i] = re[i] - lead_e[i];
    }
    Polynomial t = Polynomial::monomial(u, qe, rc * inv);
    quo += t;
    r -= t * d;
  }
  return quo;
}

MultiplicityResult multiplicity_at(const Polynomial& p, const std::vector<Coefficient>& point) {
  Polynomial t = translate(p, point);
  MultiplicityResult r;
  if (t.is_zero()) throw InputError("multiplicity of the zero polynomial is undefined");
  r.m = t.lowest_degree();
  r.tangent_cone = t.homogeneous_part(r.m);
  return r;
}

bool natural_less(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    std::size_t i = s.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
    return std::make_pair(s.substr(0, i), s.substr(i));
  };
  auto [pa, na] = split(a);
  auto [pb, nb] = split(b);
  if (pa != pb) return pa < pb;
  if (na.size() != nb.size()) return na.size() < nb.size();
  return na < nb;
}

}  // namespace stubborn

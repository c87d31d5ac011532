#include "stubborn/realroots.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "stubborn/errors.hpp"

namespace stubborn {
namespace {

using cld = std::complex<long double>;

int sign_of(const mpq_class& v) { return sgn(v); }

// Integer polynomial with the same roots, positive leading coefficient.
std::vector<mpz_class> integer_primitive(const RatPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> z;
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_class v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    z.push_back(v);
  }
  int s = sgn(z.back()) < 0 ? -1 : 1;
  for (auto& v : z) v = v / g * s;
  return z;
}

std::vector<IsolatingInterval> isolate_squarefree(const RatPoly& q) {
  std::vector<IsolatingInterval> out;
  if (q.degree() <= 0) return out;
  SturmSequence st(q);
  const RatPoly& f = st.base();
  mpq_class b = cauchy_bound(f);
  struct Job {
    mpq_class lo, hi;
    int n;
  };
  std::vector<Job> stack{{-b, b, st.count(-b, b)}};
  while (!stack.empty()) {
    Job j = stack.back();
    stack.pop_back();
    if (j.n == 0) continue;
    if (j.n == 1) {
      out.push_back({j.lo, j.hi, 1});
      continue;
    }
    mpq_class mid = (j.lo + j.hi) / 2;
    if (sgn(f.eval(mid)) != 0) {
      stack.push_back({j.lo, mid, st.count(j.lo, mid)});
      stack.push_back({mid, j.hi, st.count(mid, j.hi)});
      continue;
    }
    out.push_back({mid, mid, 1});
    mpq_class eps = (j.hi - j.lo) / 4;
    while (sgn(f.eval(mid - eps)) == 0 || sgn(f.eval(mid + eps)) == 0 ||
           st.count(mid - eps, mid + eps) != 1)
      eps /= 2;
    stack.push_back({j.lo, mid - eps, st.count(j.lo, mid - eps)});
    stack.push_back({mid + eps, j.hi, st.count(mid + eps, j.hi)});
  }
  std::sort(out.begin(), out.end(),
            [](const IsolatingInterval& x, const IsolatingInterval& y) { return x.lo < y.lo; });
  return out;
}

bool overlap(const IsolatingInterval& x, const IsolatingInterval& y) {
  return std::max(x.lo, y.lo) <= std::min(x.hi, y.hi);
}

long double horner(const std::vector<long double>& c, long double t) {
  long double s = 0;
  for (std::size_t i = c.size(); i-- > 0;) s = s * t + c[i];
  return s;
}

cld horner(const std::vector<long double>& c, cld t) {
  cld s = 0;
  for (std::size_t i = c.size(); i-- > 0;) s = s * t + c[i];
  return s;
}

// Roots of a quadratic x^2 - s x + p over Q, if the radicand fits.
bool quadratic_roots(const mpq_class& s, const mpq_class& p, std::vector<Coefficient>& out) {
  mpq_class disc = s * s - 4 * p;
  mpz_class rad = disc.get_num() * disc.get_den();
  if (!rad.fits_slong_p()) return false;
  mpq_class half = s / 2;
  mpq_class b(1, 2);
  b /= disc.get_den();
  out.emplace_back(half, b, rad.get_si());
  out.emplace_back(half, -b, rad.get_si());
  return true;
}

int field_of(const FieldPoly& f) {
  for (const auto& c : f.coeffs())
    if (!c.is_rational()) return static_cast<int>(c.field());
  return 1;
}

std::string join_directions(const std::vector<IsolatingInterval>& roots) {
  std::ostringstream os;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i) os << ", ";
    const auto& r = roots[i];
    if (r.exact())
      os << rational_to_string(r.lo);
    else
      os << "(" << rational_to_string(r.lo) << ", " << rational_to_string(r.hi) << ")";
    os << " x" << r.multiplicity;
  }
  return os.str();
}

}  // namespace

SturmSequence::SturmSequence(const RatPoly& p) {
  if (p.is_zero()) throw InputError("Sturm sequence of the zero polynomial");
  seq_.push_back(p.squarefree_part());
  if (seq_[0].degree() <= 0) return;
  seq_.push_back(seq_[0].derivative());
  for (;;) {
    RatPoly r = seq_[seq_.size() - 2] % seq_.back();
    if (r.is_zero()) break;
    // Positive rescaling keeps signs and tames coefficient growth.
    mpq_class lc = abs(r.lc());
    seq_.push_back(r.scaled(-1 / lc));
  }
}

int SturmSequence::variations(const mpq_class& t) const {
  int v = 0, last = 0;
  for (const auto& s : seq_) {
    int sg = sign_of(s.eval(t));
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++v;
    last = sg;
  }
  return v;
}

int SturmSequence::variations_at_infinity(int sign) const {
  int v = 0, last = 0;
  for (const auto& s : seq_) {
    int sg = sign_of(s.lc());
    if (sign < 0 && s.degree() % 2 == 1) sg = -sg;
    if (last != 0 && sg != last) ++v;
    last = sg;
  }
  return v;
}

int SturmSequence::count(const mpq_class& a, const mpq_class& b) const {
  return variations(a) - variations(b);
}

int SturmSequence::count_all() const { return variations_at_infinity(-1) - variations_at_infinity(1); }

mpq_class cauchy_bound(const RatPoly& p) {
  if (p.degree() <= 0) return 1;
  mpq_class m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, mpq_class(abs(p[i] / p.lc())));
  return 1 + m;
}

void refine(IsolatingInterval& iv, const RatPoly& f, const mpq_class& width) {
  if (iv.exact()) return;
  int slo = sign_of(f.eval(iv.lo));
  while (iv.hi - iv.lo >= width) {
    mpq_class mid = (iv.lo + iv.hi) / 2;
    int sm = sign_of(f.eval(mid));
    if (sm == 0) {
      iv.lo = iv.hi = mid;
      return;
    }
    if (sm == slo)
      iv.lo = mid;
    else
      iv.hi = mid;
  }
}

std::vector<IsolatingInterval> isolate_real_roots(const RatPoly& p) {
  if (p.is_zero()) throw InputError("root isolation of the zero polynomial");
  std::vector<IsolatingInterval> all;
  std::vector<RatPoly> owner;
  for (const auto& [f, m] : p.squarefree()) {
    for (auto iv : isolate_squarefree(f)) {
      iv.multiplicity = m;
      all.push_back(iv);
      owner.push_back(f);
    }
  }
  // Roots of different square-free factors are distinct; shrink until disjoint.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        if (!overlap(all[i], all[j])) continue;
        changed = true;
        refine(all[i], owner[i], (all[i].hi - all[i].lo) / 2);
        refine(all[j], owner[j], (all[j].hi - all[j].lo) / 2);
      }
  }
  std::sort(all.begin(), all.end(),
            [](const IsolatingInterval& x, const IsolatingInterval& y) { return x.lo < y.lo; });
  return all;
}

std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p) {
  return isolate_real_roots(to_ratpoly(p));
}

NonnegResult univariate_nonneg(const RatPoly& p) {
  if (p.is_zero()) throw InputError("nonnegativity of the zero polynomial");
  NonnegResult r;
  mpq_class far = cauchy_bound(p) + 1;
  // Prefer a small witness when one exists.
  auto first_negative = [&](std::initializer_list<mpq_class> pts) {
    for (const auto& t : pts)
      if (sgn(p.eval(t)) < 0) return t;
    return pts.end()[-1];
  };
  if (p.degree() == 0) {
    r.nonneg = sgn(p.lc()) > 0;
    if (!r.nonneg) r.witness = mpq_class(0);
    r.certificate = r.nonneg ? "positive constant" : "negative constant";
    return r;
  }
  if (sgn(p.lc()) < 0) {
    r.witness = first_negative({mpq_class(0), mpq_class(1), mpq_class(-1), far});
    r.certificate = "negative leading coefficient";
    return r;
  }
  if (p.degree() % 2 == 1) {
    r.witness = first_negative({mpq_class(0), mpq_class(-1), mpq_class(1), mpq_class(-far)});
    r.certificate = "odd degree";
    return r;
  }
  r.roots = isolate_real_roots(p);
  for (std::size_t i = 0; i < r.roots.size(); ++i) {
    const auto& iv = r.roots[i];
    if (iv.multiplicity % 2 == 0) continue;
    mpq_class a = iv.lo, b = iv.hi;
    if (iv.exact()) {
      mpq_class eps = 1;
      if (i > 0) eps = std::min(eps, mpq_class((iv.lo - r.roots[i - 1].hi) / 2));
      if (i + 1 < r.roots.size()) eps = std::min(eps, mpq_class((r.roots[i + 1].lo - iv.hi) / 2));
      a -= eps;
      b += eps;
    }
    r.witness = sgn(p.eval(a)) < 0 ? a : b;
    r.certificate = "real root of odd multiplicity near " + rational_to_string((a + b) / 2);
    return r;
  }
  r.nonneg = true;
  r.certificate = "even degree, positive leading coefficient";
  if (!r.roots.empty()) r.certificate += ", real roots of even multiplicity: " + join_directions(r.roots);
  else r.certificate += ", no real roots";
  return r;
}

NonnegResult univariate_nonneg(const Polynomial& p) { return univariate_nonneg(to_ratpoly(p)); }

bool strictly_positive(const RatPoly& p) {
  if (p.is_zero()) return false;
  return SturmSequence(p).count_all() == 0 && sgn(p.eval(0)) > 0;
}

std::vector<cld> numeric_roots(const RatPoly& p) {
  std::vector<cld> out;
  if (p.degree() <= 0) return out;
  std::size_t k = 0;
  while (sgn(p[k]) == 0) ++k;
  for (std::size_t i = 0; i < k; ++i) out.emplace_back(0);
  std::vector<long double> c;
  for (std::size_t i = k; i < p.coeffs().size(); ++i) c.push_back(p[i].get_d());
  int n = static_cast<int>(c.size()) - 1;
  if (n == 0) return out;
  long double lc = c.back();
  for (auto& v : c) v /= lc;
  std::vector<long double> dc;
  for (int i = 1; i <= n; ++i) dc.push_back(c[i] * i);
  long double radius = 0;
  for (int i = 0; i < n; ++i)
    radius = std::max(radius, std::pow(std::fabs(c[i]), 1.0L / (n - i)));
  radius = std::max(radius, 1e-3L);
  std::vector<cld> z(n);
  for (int i = 0; i < n; ++i)
    z[i] = std::polar(radius, 2 * static_cast<long double>(M_PI) * i / n + 0.4L);
  // Aberth-Ehrlich simultaneous iteration.
  for (int it = 0; it < 2000; ++it) {
    long double worst = 0;
    for (int i = 0; i < n; ++i) {
      cld pv = horner(c, z[i]);
      if (std::abs(pv) == 0) continue;
      cld ratio = pv / horner(dc, z[i]);
      cld sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) sum += 1.0L / (z[i] - z[j]);
      cld step = ratio / (1.0L - ratio * sum);
      z[i] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0L, std::abs(z[i])));
    }
    if (worst < 1e-17L) break;
  }
  for (auto& v : z) {
    if (std::fabs(v.imag()) < 1e-14L * std::max(1.0L, std::abs(v))) {
      long double x = v.real();
      for (int s = 0; s < 3; ++s) {
        long double d = horner(dc, x);
        if (d == 0) break;
        x -= horner(c, x) / d;
      }
      v = x;
    }
    out.push_back(v);
  }
  std::sort(out.begin(), out.end(), [](const cld& a, const cld& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

RootSplit exact_roots(const RatPoly& p) {
  if (p.is_zero()) throw InputError("roots of the zero polynomial");
  RootSplit rs;
  for (auto [g, mult] : p.squarefree()) {
    // Rational roots: L*r is an integer when L is the integer leading coefficient.
    mpz_class L = integer_primitive(g).back();
    for (auto iv : isolate_squarefree(g)) {
      if (!iv.exact()) {
        refine(iv, g, mpq_class(1, 2) / L);
        mpq_class slo = iv.lo * L, shi = iv.hi * L;
        mpz_class lo, hi;
        mpz_fdiv_q(lo.get_mpz_t(), slo.get_num_mpz_t(), slo.get_den_mpz_t());
        mpz_cdiv_q(hi.get_mpz_t(), shi.get_num_mpz_t(), shi.get_den_mpz_t());
        for (mpz_class k = lo; k <= hi; ++k) {
          mpq_class cand(k, L);
          cand.canonicalize();
          if (cand >= iv.lo && cand <= iv.hi && sgn(g.eval(cand)) == 0) {
            iv.lo = iv.hi = cand;
            break;
          }
        }
      }
      if (!iv.exact()) continue;
      rs.roots.push_back({Coefficient(iv.lo), mult});
      g = g / RatPoly(std::vector<mpq_class>{-iv.lo, 1});
    }
    // Quadratic factors: x^2 - s x + p with L*s, L^2*p integers.
    while (g.degree() >= 2) {
      std::vector<cld> z = numeric_roots(g);
      mpz_class Lg = integer_primitive(g).back();
      long double lf = Lg.get_d();
      bool found = false;
      for (std::size_t i = 0; i < z.size() && !found; ++i)
        for (std::size_t j = i + 1; j < z.size() && !found; ++j) {
          cld s = (z[i] + z[j]) * lf, pr = z[i] * z[j] * lf * lf;
          long double tol = 1e-6L * std::max(1.0L, std::abs(s)) + 1e-6L * std::max(1.0L, std::abs(pr));
          if (std::fabs(s.imag()) > tol || std::fabs(pr.imag()) > tol) continue;
          long double rs_ = std::round(s.real()), rp = std::round(pr.real());
          if (std::fabs(rs_ - s.real()) > 0.25L || std::fabs(rp - pr.real()) > 0.25L) continue;
          mpz_class si(static_cast<double>(rs_)), pi(static_cast<double>(rp));
          mpq_class sq(si, Lg), pq(pi, Lg * Lg);
          sq.canonicalize();
          pq.canonicalize();
          RatPoly q(std::vector<mpq_class>{pq, -sq, 1});
          auto [quot, rem] = RatPoly::divmod(g, q);
          if (!rem.is_zero()) continue;
          std::vector<Coefficient> roots;
          if (!quadratic_roots(sq, pq, roots)) continue;
          for (auto& r : roots) rs.roots.push_back({r, mult});
          g = quot;
          found = true;
        }
      if (!found) break;
    }
    if (g.degree() > 0) {
      rs.unsupported.push_back(lift(g));
      rs.unsupported_multiplicity.push_back(mult);
      if (SturmSequence(g).count_all() > 0) rs.unsupported_real_roots = true;
    }
  }
  return rs;
}

RootSplit exact_roots(const FieldPoly& p) {
  if (p.is_zero()) throw InputError("roots of the zero polynomial");
  if (all_rational(p)) return exact_roots(to_rational(p));
  int D = field_of(p);
  RootSplit norm_split = exact_roots(to_rational(p * conj(p)));
  RootSplit rs;
  FieldPoly rest = p;
  for (const auto& cand : norm_split.roots) {
    if (!cand.value.is_rational() && cand.value.field() != D) continue;
    FieldPoly lin(std::vector<Coefficient>{-cand.value, Coefficient(1)});
    int m = 0;
    for (;;) {
      auto [q, r] = FieldPoly::divmod(rest, lin);
      if (!r.is_zero()) break;
      rest = q;
      ++m;
    }
    if (m > 0) rs.roots.push_back({cand.value, m});
  }
  if (rest.degree() > 0) {
    for (const auto& [f, m] : rest.squarefree()) {
      rs.unsupported.push_back(f);
      rs.unsupported_multiplicity.push_back(m);
      if (has_real_root(f)) rs.unsupported_real_roots = true;
    }
  }
  return rs;
}

bool has_real_root(const FieldPoly& f) {
  if (f.degree() <= 0) return false;
  if (all_rational(f)) return SturmSequence(to_rational(f)).count_all() > 0;
  // A real root of f is a real root of its norm.
  return SturmSequence(to_rational(f * conj(f))).count_all() > 0;
}

std::string Direction::to_string() const { return "[" + x.to_string() + ":" + y.to_string() + "]"; }

BinaryFormFactorization binary_real_tangents(const Polynomial& F) {
  if (F.is_zero()) throw InputError("tangent directions of the zero form");
  if (F.nvars() != 2) throw InputError("expected a binary form: " + F.to_string());
  if (!F.is_homogeneous()) throw InputError("expected a homogeneous binary form: " + F.to_string());
  BinaryFormFactorization out;
  const auto& v = F.vars();
  int m = F.degree();
  unsigned k = m;
  std::vector<Coefficient> g(m + 1);
  for (const auto& [e, c] : F.terms()) {
    k = std::min(k, e[1]);
    g[e[0]] = c;
  }
  FieldPoly G(std::move(g));
  bool real_form = true;
  for (const auto& [e, c] : F.terms())
    if (!c.is_real()) real_form = false;
  out.conjugate_closed = real_form;

  Polynomial linear = power(Polynomial::variable(v[1], v), k);
  if (k > 0) out.rational_linear.push_back({Coefficient(1), Coefficient(0), static_cast<int>(k)});
  if (G.degree() > 0) {
    RootSplit rs = exact_roots(G);
    Polynomial X = Polynomial::variable(v[0], v), Y = Polynomial::variable(v[1], v);
    for (const auto& r : rs.roots) {
      if (r.value.is_real()) {
        out.rational_linear.push_back({r.value, Coefficient(1), r.multiplicity});
        linear = linear * power(X - Y * r.value, r.multiplicity);
      } else if (!real_form || sgn(r.value.b()) > 0) {
        out.complex_pairs.push_back({r.value, Coefficient(1), r.multiplicity});
      }
    }
    for (std::size_t i = 0; i < rs.unsupported.size(); ++i)
      for (int j = 0; j < rs.unsupported_multiplicity[i]; ++j)
        out.remainder_degrees.push_back(rs.unsupported[i].degree());
    out.unsupported = rs.unsupported;
    out.unsupported_multiplicity = rs.unsupported_multiplicity;
    out.has_unsupported_real_roots = rs.unsupported_real_roots;
  }
  out.irreducible_remainder = exact_divide(F, linear);
  auto by_value = [](const Direction& a, const Direction& b) {
    if (a.y.is_zero() != b.y.is_zero()) return b.y.is_zero();
    auto za = a.x.to_complex(), zb = b.x.to_complex();
    if (za.real() != zb.real()) return za.real() < zb.real();
    return za.imag() < zb.imag();
  };
  std::sort(out.rational_linear.begin(), out.rational_linear.end(), by_value);
  std::sort(out.complex_pairs.begin(), out.complex_pairs.end(), by_value);
  return out;
}

RatPoly truncated_binomial(int n, int r) {
  if (r < 0 || n < r) throw InputError("truncated binomial needs n >= r >= 0");
  std::vector<mpq_class> c;
  for (int i = 0; i <= r; ++i) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, i);
    c.emplace_back(b);
  }
  return RatPoly(std::move(c));
}

bool truncated_binomial_positive(int n, int r) { return strictly_positive(truncated_binomial(n, r)); }

Polynomial truncated_binomial_form(int n, int r, const std::string& t1, const std::string& t2) {
  RatPoly f = truncated_binomial(n, r);
  Polynomial out({t1, t2});
  for (int i = 0; i <= r; ++i)
    out.add_term({static_cast<unsigned>(i), static_cast<unsigned>(r - i)}, Coefficient(f[i]));
  return out;
}

}  // namespace stubborn

#include "stubborn/newton.hpp"

#include <algorithm>
#include <set>

#include "stubborn/errors.hpp"

namespace stubborn {
namespace {

struct P2 {
  long u = 0, v = 0;
  friend auto operator<=>(const P2&, const P2&) = default;
};

long cross(const P2& o, const P2& a, const P2& b) {
  return (a.u - o.u) * (b.v - o.v) - (a.v - o.v) * (b.u - o.u);
}

// Planar coordinates of an exponent.
P2 project(const Exponent& e, bool homogeneous) {
  std::size_t k = homogeneous ? e.size() - 1 : e.size();
  P2 q;
  if (k >= 1) q.u = e[0];
  if (k >= 2) q.v = e[1];
  return q;
}

// Inverse of project at total degree deg; empty when a coordinate is negative.
std::optional<Exponent> lift(const P2& q, std::size_t n, bool homogeneous, long deg) {
  if (q.u < 0 || q.v < 0) return std::nullopt;
  Exponent e(n, 0);
  if (n == 0) return e;
  std::size_t k = homogeneous ? n - 1 : n;
  if (k == 0 && q.u != 0) return std::nullopt;
  if (k >= 1) e[0] = static_cast<unsigned>(q.u);
  if (k == 1 && q.v != 0) return std::nullopt;
  if (k >= 2) e[1] = static_cast<unsigned>(q.v);
  if (homogeneous) {
    long rest = deg - q.u - q.v;
    if (rest < 0) return std::nullopt;
    e[n - 1] = static_cast<unsigned>(rest);
  }
  return e;
}

std::vector<P2> monotone_chain(std::vector<P2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<P2> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

bool on_segment(const P2& a, const P2& b, const P2& q) {
  return cross(a, b, q) == 0 && std::min(a.u, b.u) <= q.u && q.u <= std::max(a.u, b.u) &&
         std::min(a.v, b.v) <= q.v && q.v <= std::max(a.v, b.v);
}

bool in_hull(const std::vector<P2>& h, const P2& q) {
  if (h.empty()) return false;
  if (h.size() == 1) return h[0] == q;
  if (h.size() == 2) return on_segment(h[0], h[1], q);
  for (std::size_t i = 0; i < h.size(); ++i)
    if (cross(h[i], h[(i + 1) % h.size()], q) < 0) return false;
  return true;
}

void check_planar(const Polynomial& p, bool homogeneous) {
  std::size_t k = homogeneous ? p.nvars() - 1 : p.nvars();
  if (p.nvars() > 0 && k > 2)
    throw InputError("Newton polytope needs a planar support: a form in at most three "
                     "variables or a polynomial in at most two");
}

bool sorted_grlex(const Exponent& a, const Exponent& b) { return GrlexGreater()(a, b); }

}  // namespace

bool NewtonPolytope::contains(const Exponent& e) const {
  if (e.size() != vars.size()) return false;
  if (homogeneous && static_cast<int>(total_degree(e)) != degree) return false;
  std::vector<P2> h;
  for (const auto& x : hull) h.push_back(project(x, homogeneous));
  return in_hull(h, project(e, homogeneous));
}

NewtonPolytope newton_polytope(const Polynomial& p) {
  if (p.is_zero()) throw InputError("Newton polytope of the zero polynomial");
  NewtonPolytope np;
  np.vars = p.vars();
  np.homogeneous = p.is_homogeneous() && p.nvars() > 0;
  np.degree = p.degree();
  check_planar(p, np.homogeneous);
  std::vector<P2> pts;
  for (const auto& [e, c] : p.terms()) {
    np.points.push_back(e);
    pts.push_back(project(e, np.homogeneous));
  }
  std::vector<P2> h = monotone_chain(pts);
  for (const auto& q : h) np.hull.push_back(*lift(q, p.nvars(), np.homogeneous, np.degree));
  long umin = h[0].u, umax = h[0].u, vmin = h[0].v, vmax = h[0].v;
  for (const auto& q : h) {
    umin = std::min(umin, q.u), umax = std::max(umax, q.u);
    vmin = std::min(vmin, q.v), vmax = std::max(vmax, q.v);
  }
  for (long u = umin; u <= umax; ++u)
    for (long v = vmin; v <= vmax; ++v)
      if (in_hull(h, {u, v}))
        if (auto e = lift({u, v}, p.nvars(), np.homogeneous, np.degree)) np.lattice.push_back(*e);
  std::sort(np.lattice.begin(), np.lattice.end(), sorted_grlex);
  return np;
}

std::vector<Exponent> half_support(const Polynomial& p) {
  if (p.is_zero()) throw InputError("half support of the zero polynomial");
  if (p.degree() % 2 != 0) throw InputError("half support needs even degree");
  NewtonPolytope np = newton_polytope(p);
  std::vector<P2> h;
  for (const auto& x : np.hull) h.push_back(project(x, np.homogeneous));
  long umax = 0, vmax = 0;
  for (const auto& q : h) umax = std::max(umax, q.u), vmax = std::max(vmax, q.v);
  std::vector<Exponent> out;
  for (long u = 0; 2 * u <= umax; ++u)
    for (long v = 0; 2 * v <= vmax; ++v)
      if (in_hull(h, {2 * u, 2 * v}))
        if (auto e = lift({u, v}, p.nvars(), np.homogeneous, np.degree / 2)) out.push_back(*e);
  std::sort(out.begin(), out.end(), sorted_grlex);
  return out;
}

ParityPartition parity_classes(const std::vector<Exponent>& candidates) {
  ParityPartition part;
  for (const auto& a : candidates) {
    Exponent key = a;
    for (auto& x : key) x %= 2;
    part.classes[key].push_back(a);
  }
  return part;
}

bool is_even_form(const Polynomial& p) {
  if (!p.is_homogeneous()) return false;
  for (const auto& [e, c] : p.terms())
    for (unsigned x : e)
      if (x % 2 != 0) return false;
  return true;
}

NonSOSResult exact_nonsos_test(const Polynomial& p, bool even_form) {
  NonSOSResult res;
  if (!p.is_rational()) {
    res.reason = "coefficients are not rational";
    return res;
  }
  if (!even_form) {
    res.reason = "the parity argument needs an even form";
    return res;
  }
  if (!is_even_form(p)) {
    res.reason = "not an even form";
    return res;
  }
  auto candidates = half_support(p);
  ParityPartition part = parity_classes(candidates);
  for (const auto& [key, cls] : part.classes)
    if (cls.size() > 1) {
      res.reason = "parity class with " + std::to_string(cls.size()) + " candidates";
      return res;
    }
  for (const auto& a : candidates) {
    Exponent twice = a;
    for (auto& x : twice) x *= 2;
    Coefficient c = p.coeff(twice);
    if (c.rational() < 0) {
      NonSOSCertificate cert;
      cert.monomial = twice;
      cert.class_witness = a;
      cert.coefficient = c.rational();
      cert.partition = part;
      Polynomial mono = Polynomial::monomial(p.vars(), twice);
      cert.explanation = "every parity class of the half support is a singleton, so an SOS "
                         "representation is a nonnegative combination of monomial squares; "
                         "the coefficient of " + mono.to_string() + " is " +
                         rational_to_string(cert.coefficient);
      res.certificate = std::move(cert);
      return res;
    }
  }
  res.reason = "every diagonal coefficient is nonnegative";
  return res;
}

bool replay_nonsos_certificate(const Polynomial& p, const NonSOSCertificate& cert) {
  if (cert.kind != "diagonal-obstruction" || !p.is_rational() || p.is_zero()) return false;
  const std::size_t n = p.nvars();
  if (!p.is_homogeneous() || p.degree() % 2 != 0 || n < 1 || n > 3) return false;
  for (const auto& [e, c] : p.terms())
    for (unsigned x : e)
      if (x % 2 != 0) return false;

  // The obstruction itself: one coefficient lookup.
  if (cert.class_witness.size() != n || cert.monomial.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (cert.monomial[i] != 2 * cert.class_witness[i]) return false;
  Coefficient c = p.coeff(cert.monomial);
  if (c.rational() != cert.coefficient || sgn(cert.coefficient) >= 0) return false;

  // Partition: singleton classes, correct parity keys, covering exactly the candidates.
  std::set<Exponent> listed;
  for (const auto& [key, cls] : cert.partition.classes) {
    if (cls.size() != 1) return false;
    for (std::size_t i = 0; i < n; ++i)
      if (cls[0].size() != n || cls[0][i] % 2 != key[i]) return false;
    listed.insert(cls[0]);
  }
  if (!listed.count(cert.class_witness)) return false;

  // Candidates by brute force: 2a in some triangle (or segment) of support points.
  std::vector<P2> s;
  for (const auto& [e, c2] : p.terms())
    s.push_back({static_cast<long>(e[0]), n == 3 ? static_cast<long>(e[1]) : 0});
  auto covered = [&](const P2& q) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == q) return true;
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (on_segment(s[i], s[j], q)) return true;
        for (std::size_t k = j + 1; k < s.size(); ++k) {
          long area = cross(s[i], s[j], s[k]);
          if (area == 0) continue;
          long a = cross(s[i], s[j], q), b = cross(s[j], s[k], q), d = cross(s[k], s[i], q);
          if (area > 0 ? (a >= 0 && b >= 0 && d >= 0) : (a <= 0 && b <= 0 && d <= 0))
            return true;
        }
      }
    }
    return false;
  };
  const long half = p.degree() / 2;
  std::set<Exponent> expected;
  for (long u = 0; u <= half; ++u)
    for (long v = 0; u + v <= half; ++v) {
      if (n < 3 && v > 0) break;
      if (n == 1 && u != half) continue;
      Exponent a(n);
      if (n == 1) a[0] = static_cast<unsigned>(u);
      if (n == 2) a = {static_cast<unsigned>(u), static_cast<unsigned>(half - u)};
      if (n == 3)
        a = {static_cast<unsigned>(u), static_cast<unsigned>(v), static_cast<unsigned>(half - u - v)};
      if (covered({2 * u, 2 * v})) expected.insert(a);
    }
  return expected == listed;
}

nlohmann::json to_json(const NewtonPolytope& np) {
  return {{"vars", np.vars},       {"degree", np.degree}, {"homogeneous", np.homogeneous},
          {"points", np.points},   {"hull", np.hull},     {"lattice", np.lattice}};
}

nlohmann::json to_json(const NonSOSCertificate& cert) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& [key, cls] : cert.partition.classes)
    classes.push_back({{"parity", key}, {"members", cls}});
  return {{"kind", cert.kind},
          {"monomial", cert.monomial},
          {"class_witness", cert.class_witness},
          {"coefficient", rational_to_string(cert.coefficient)},
          {"classes", classes},
          {"explanation", cert.explanation}};
}

}  // namespace stubborn

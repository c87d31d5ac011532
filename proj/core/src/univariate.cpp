#include "stubborn/univariate.hpp"

#include "stubborn/errors.hpp"

namespace stubborn {
namespace {

int single_var(const Polynomial& p) {
  int idx = -1;
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    if (p.degree_in(i) > 0) {
      if (idx >= 0) throw InputError("expected a univariate polynomial: " + p.to_string());
      idx = static_cast<int>(i);
    }
  }
  return idx;
}

}  // namespace

FieldPoly to_fieldpoly(const Polynomial& p) {
  int v = single_var(p);
  std::vector<Coefficient> c(std::max(p.degree(), 0) + 1);
  for (const auto& [e, k] : p.terms()) c[v < 0 ? 0 : e[v]] = k;
  return FieldPoly(std::move(c));
}

RatPoly to_ratpoly(const Polynomial& p) { return to_rational(to_fieldpoly(p)); }

Polynomial from_fieldpoly(const FieldPoly& u, const std::string& var) {
  Polynomial p({var});
  for (std::size_t i = 0; i < u.coeffs().size(); ++i) p.add_term({static_cast<unsigned>(i)}, u.coeffs()[i]);
  return p;
}

Polynomial from_ratpoly(const RatPoly& u, const std::string& var) { return from_fieldpoly(lift(u), var); }

FieldPoly lift(const RatPoly& u) {
  std::vector<Coefficient> c;
  for (const auto& v : u.coeffs()) c.emplace_back(v);
  return FieldPoly(std::move(c));
}

bool all_rational(const FieldPoly& u) {
  for (const auto& v : u.coeffs())
    if (!v.is_rational()) return false;
  return true;
}

RatPoly to_rational(const FieldPoly& u) {
  std::vector<mpq_class> c;
  for (const auto& v : u.coeffs()) c.push_back(v.rational());
  return RatPoly(std::move(c));
}

FieldPoly conj(const FieldPoly& u) {
  std::vector<Coefficient> c;
  for (const auto& v : u.coeffs()) c.push_back(v.conj());
  return FieldPoly(std::move(c));
}

std::string to_string(const RatPoly& u, const std::string& var) {
  return from_ratpoly(u, var).to_string();
}

}  // namespace stubborn

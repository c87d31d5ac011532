#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stubborn/coefficient.hpp"
#include "stubborn/polynomial.hpp"

namespace stubborn {

inline bool is_zero_value(const mpq_class& v) { return sgn(v) == 0; }
inline bool is_zero_value(const Coefficient& v) { return v.is_zero(); }

// Dense univariate polynomial over a field; coefficients low to high.
template <class F>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<F> c) : c_(std::move(c)) { trim(); }
  static UniPoly constant(const F& v) { return UniPoly(std::vector<F>{v}); }
  static UniPoly x() { return UniPoly(std::vector<F>{F(0), F(1)}); }

  const std::vector<F>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const F& lc() const { return c_.back(); }
  F operator[](std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }

  F eval(const F& t) const {
    F s = 0;
    for (std::size_t i = c_.size(); i-- > 0;) s = s * t + c_[i];
    return s;
  }

  UniPoly derivative() const {
    std::vector<F> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * F(static_cast<long>(i)));
    return UniPoly(std::move(d));
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    F inv = F(1) / lc();
    std::vector<F> d = c_;
    for (auto& v : d) v = v * inv;
    return UniPoly(std::move(d));
  }

  UniPoly scaled(const F& s) const {
    std::vector<F> d = c_;
    for (auto& v : d) v = v * s;
    return UniPoly(std::move(d));
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<F> d(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] = d[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] = d[i] + b.c_[i];
    return UniPoly(std::move(d));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + b.scaled(F(-1)); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<F> d(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] = d[i + j] + a.c_[i] * b.c_[j];
    return UniPoly(std::move(d));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  // Euclidean division a = q*b + r.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<F> r = a.c_;
    int db = b.degree();
    if (a.degree() < db) return {UniPoly(), a};
    std::vector<F> q(a.degree() - db + 1, F(0));
    F inv = F(1) / b.lc();
    for (int i = a.degree(); i >= db; --i) {
      if (is_zero_value(r[i])) continue;
      F f = r[i] * inv;
      q[i - db] = f;
      for (int j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - f * b.c_[j];
    }
    r.resize(db);
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
  }
  friend UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }
  friend UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }

  // Monic gcd; gcd(0, 0) = 0.
  static UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
      UniPoly r = a % b;
      a = std::move(b);
      b = r.monic();
    }
    return a.monic();
  }

  // Yun's square-free decomposition: a = lc * prod f_i^i, f_i monic, square-free, coprime.
  std::vector<std::pair<UniPoly, int>> squarefree() const {
    std::vector<std::pair<UniPoly, int>> out;
    if (degree() <= 0) return out;
    UniPoly f = monic();
    UniPoly fp = f.derivative();
    UniPoly a = gcd(f, fp);
    UniPoly b = f / a;
    UniPoly c = fp / a;
    UniPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
      UniPoly g = gcd(b, d);
      if (g.degree() > 0) out.emplace_back(g, i);
      b = b / g;
      c = d / g;
      d = c - b.derivative();
      ++i;
    }
    return out;
  }

  UniPoly squarefree_part() const {
    if (degree() <= 0) return monic();
    return monic() / gcd(*this, derivative());
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero_value(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

using RatPoly = UniPoly<mpq_class>;
using FieldPoly = UniPoly<Coefficient>;

// Conversions to and from the sparse representation (single variable).
RatPoly to_ratpoly(const Polynomial& p);
FieldPoly to_fieldpoly(const Polynomial& p);
Polynomial from_ratpoly(const RatPoly& u, const std::string& var);
Polynomial from_fieldpoly(const FieldPoly& u, const std::string& var);
FieldPoly lift(const RatPoly& u);
bool all_rational(const FieldPoly& u);
RatPoly to_rational(const FieldPoly& u);
FieldPoly conj(const FieldPoly& u);

std::string to_string(const RatPoly& u, const std::string& var = "t");

}  // namespace stubborn

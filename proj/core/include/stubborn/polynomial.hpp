#pragma once

#include <map>
#include <string>
#include <vector>

#include "stubborn/coefficient.hpp"

namespace stubborn {

using Exponent = std::vector<unsigned>;

unsigned total_degree(const Exponent& e);

// Graded lexicographic order, largest first.
struct GrlexGreater {
  bool operator()(const Exponent& x, const Exponent& y) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Exponent, Coefficient, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> vars);

  static Polynomial constant(const Coefficient& c, std::vector<std::string> vars = {});
  static Polynomial variable(const std::string& name, std::vector<std::string> vars = {});
  static Polynomial monomial(std::vector<std::string> vars, Exponent e, const Coefficient& c = 1);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t nvars() const { return vars_.size(); }
  int var_index(const std::string& name) const;  // -1 when absent

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree() const;  // -1 for the zero polynomial
  int degree_in(std::size_t var) const;
  int lowest_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;
  bool is_rational() const;
  long field() const;  // radicand shared by all coefficients (1 over Q)

  Coefficient coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const Coefficient& c);

  // Same polynomial over a superset of variables in the given order.
  Polynomial with_vars(const std::vector<std::string>& vars) const;
  // Drop variables that do not occur.
  Polynomial compact() const;

  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Polynomial& q);
  Polynomial& operator*=(const Coefficient& c);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(Polynomial p, const Coefficient& c) { return p *= c; }
  friend Polynomial operator*(const Coefficient& c, Polynomial p) { return p *= c; }

  // Equality as polynomials; variable order and unused variables are ignored.
  friend bool operator==(const Polynomial& p, const Polynomial& q);
  friend bool operator!=(const Polynomial& p, const Polynomial& q) { return !(p == q); }

  Coefficient evaluate(const std::vector<Coefficient>& point) const;
  double evaluate_double(const std::vector<double>& point) const;
  Polynomial derivative(std::size_t var) const;
  Polynomial homogeneous_part(int deg) const;
  Polynomial conj() const;  // conjugate every coefficient
  Coefficient max_abs_coeff_rational() const;  // rational polys only

  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

// Union of variable lists: p's order, then q's extras.
std::vector<std::string> union_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b);

Polynomial power(const Polynomial& p, unsigned k);

// Term w * h^2 of a weighted sum of squares; the weight may be a polynomial.
struct WeightedSquare {
  Polynomial weight;
  Polynomial square;
};
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& assignment);
Polynomial dehomogenize(const Polynomial& P, const std::string& chart_var);
Polynomial homogenize(const Polynomial& p, const std::string& new_var, int d);
// p(x + shift): shift has one entry per variable of p.
Polynomial translate(const Polynomial& p, const std::vector<Coefficient>& shift);
// Exact quotient p / q; throws when q does not divide p.
Polynomial exact_divide(const Polynomial& p, const Polynomial& q);

struct MultiplicityResult {
  int m = 0;
  Polynomial tangent_cone;
};
MultiplicityResult multiplicity_at(const Polynomial& p, const std::vector<Coefficient>& point);

// Parse with a fixed variable list; unknown identifiers are errors.
Polynomial parse(const std::string& text, const std::vector<std::string>& vars);
// Parse and collect variables in natural order (X2 before X10).
Polynomial parse(const std::string& text);
Coefficient parse_coefficient(const std::string& text);

// Natural ordering of identifiers: alphabetic prefix, then numeric suffix.
bool natural_less(const std::string& a, const std::string& b);

}  // namespace stubborn

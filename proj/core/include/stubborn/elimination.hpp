#pragma once

#include <string>
#include <vector>

#include "stubborn/univariate.hpp"

namespace stubborn {

// Bivariate polynomial as coefficients in y over K[x]; index = power of y.
using BiPoly = std::vector<FieldPoly>;

BiPoly to_bipoly(const Polynomial& p, const std::string& x, const std::string& y);
Polynomial from_bipoly(const BiPoly& b, const std::string& x, const std::string& y);

// Univariate resultant over Q or Q(sqrt D).
Coefficient resultant(const FieldPoly& a, const FieldPoly& b);

// Res_y(f, g) as a polynomial in x, by evaluation and interpolation.
FieldPoly resultant_y(const Polynomial& f, const Polynomial& g, const std::string& x,
                      const std::string& y);

// f(x0, y) as a univariate polynomial in y.
FieldPoly specialize(const Polynomial& f, const std::string& x, const Coefficient& x0,
                     const std::string& y);

// Greatest common divisor of polynomials in at most two variables, normalized so
// the leading grlex coefficient is 1.
Polynomial bivariate_gcd(const Polynomial& f, const Polynomial& g);

// gcd(p, dp/dx, dp/dy): nonconstant iff p has a repeated factor.
Polynomial repeated_part(const Polynomial& p);

// Largest k with t^k dividing u; -1 for the zero polynomial.
int order_at_zero(const FieldPoly& u);

}  // namespace stubborn

#pragma once

#include <vector>

#include "stubborn/polynomial.hpp"

namespace stubborn::fixtures {

Polynomial motzkin();        // M
Polynomial robinson();       // R
Polynomial choi_lam_s();     // S
Polynomial stengle_t();      // T
Polynomial stengle_tc(const Coefficient& c);
Polynomial octic();          // M with X3 replaced monomially, degree 8
Polynomial quaternary_q();   // Q
Polynomial horn();           // F in X1..X5
Polynomial sphere_power(int k);  // (X1^2+X2^2+X3^2)^k
Polynomial motzkin_a(const Coefficient& a);
Polynomial motzkin_a_symbolic();  // over X1, X2, X3, a

// Sixteen-term representation of M_a^3 over Q[X1,X2,X3,a].
std::vector<WeightedSquare> motzkin_a_cube_identity();
// Alternative representation of the Horn form.
std::vector<WeightedSquare> horn_alternative();

}  // namespace stubborn::fixtures

#include "stubborn/fixtures.hpp"

namespace stubborn::fixtures {
namespace {

const std::vector<std::string> kXYZ = {"X1", "X2", "X3"};

Polynomial p3(const std::string& s) { return parse(s, kXYZ); }

}  // namespace

Polynomial motzkin() { return p3("X1^4*X2^2 + X1^2*X2^4 + X3^6 - 3*X1^2*X2^2*X3^2"); }

Polynomial robinson() {
  return p3(
      "X1^6 + X2^6 + X3^6 + 3*X1^2*X2^2*X3^2 - X1^4*X2^2 - X1^2*X2^4 - X1^4*X3^2"
      " - X1^2*X3^4 - X2^4*X3^2 - X2^2*X3^4");
}

Polynomial choi_lam_s() { return p3("X1^4*X2^2 + X2^4*X3^2 + X3^4*X1^2 - 3*X1^2*X2^2*X3^2"); }

Polynomial stengle_tc(const Coefficient& c) {
  Polynomial inner = p3("X2^2*X3 - X1^3 - X1*X3^2");
  return c * p3("X1^3*X3^3") + inner * inner;
}

Polynomial stengle_t() { return stengle_tc(1); }

Polynomial octic() { return p3("X1^4*X2^4 + X1^2*X3^6 + X2^2*X3^6 - 3*X1^2*X2^2*X3^4"); }

Polynomial quaternary_q() {
  return parse("X4^4 + X1^2*X2^2 + X1^2*X3^2 + X2^2*X3^2 - 4*X1*X2*X3*X4", {"X1", "X2", "X3", "X4"});
}

Polynomial horn() {
  std::vector<std::string> v = {"X1", "X2", "X3", "X4", "X5"};
  Polynomial s(v), cyc(v);
  for (int j = 0; j < 5; ++j) {
    Polynomial xj = Polynomial::variable(v[j], v);
    Polynomial xn = Polynomial::variable(v[(j + 1) % 5], v);
    s += xj * xj;
    cyc += xj * xj * xn * xn;
  }
  return s * s - Coefficient(4) * cyc;
}

Polynomial sphere_power(int k) { return power(p3("X1^2 + X2^2 + X3^2"), static_cast<unsigned>(k)); }

Polynomial motzkin_a(const Coefficient& a) {
  return motzkin() + (Coefficient(3) - a) * p3("X1^2*X2^2*X3^2");
}

Polynomial motzkin_a_symbolic() {
  return parse("X1^4*X2^2 + X1^2*X2^4 + X3^6 - a*X1^2*X2^2*X3^2", {"X1", "X2", "X3", "a"});
}

std::vector<WeightedSquare> motzkin_a_cube_identity() {
  const std::vector<std::string> v = {"X1", "X2", "X3", "a"};
  auto P = [&](const std::string& s) { return parse(s, v); };
  std::vector<WeightedSquare> out;
  const char* three_halves[] = {
      "X1^5*X2^4 - a*X1^3*X2^4*X3^2",   "X1^4*X2^5 - a*X1^4*X2^3*X3^2",
      "X1^4*X2^2*X3^3 - a*X1^2*X2^2*X3^5", "X1^2*X2^4*X3^3 - a*X1^2*X2^2*X3^5",
      "X1*X2^2*X3^6 - a*X1^3*X2^4*X3^2", "X1^2*X2*X3^6 - a*X1^4*X2^3*X3^2",
      "X1^2*X2^4*X3^3 - X1^4*X2^2*X3^3", "X1^4*X2^5 - X1^2*X2*X3^6",
      "X1^5*X2^4 - X1*X2^2*X3^6"};
  for (const char* s : three_halves) out.push_back({P("3/2"), P(s)});
  out.push_back({P("1"), P("X3^9 - 2*a*X1^2*X2^2*X3^5")});
  out.push_back({P("a"), P("X1*X2*X3^7 - 2*a*X1^3*X2^3*X3^3")});
  out.push_back({P("1"), P("X1^3*X2^6 - 2*a*X1^3*X2^4*X3^2")});
  out.push_back({P("a"), P("X1^3*X2^5*X3 - 2*a*X1^3*X2^3*X3^3")});
  out.push_back({P("1"), P("X1^6*X2^3 - 2*a*X1^4*X2^3*X3^2")});
  out.push_back({P("a"), P("X1^5*X2^3*X3 - 2*a*X1^3*X2^3*X3^3")});
  out.push_back({P("15 - 13*a^3"), P("X1^3*X2^3*X3^3")});
  return out;
}

std::vector<WeightedSquare> horn_alternative() {
  const std::vector<std::string> v = {"X1", "X2", "X3", "X4", "X5"};
  auto P = [&](const std::string& s) { return parse(s, v); };
  return {
      {P("1"), P("X1^2 - X2^2 + X3^2 - X4^2 + X5^2")},
      {P("4*X2^2 - 4*X1^2"), P("X5")},
      {P("4"), P("X1*X4")},
  };
}

}  // namespace stubborn::fixtures

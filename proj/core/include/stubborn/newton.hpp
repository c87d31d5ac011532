#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stubborn/polynomial.hpp"

namespace stubborn {

// Newton polytope of a polynomial whose support is planar: homogeneous forms in
// at most three variables (last coordinate dropped) or polynomials in at most two.
struct NewtonPolytope {
  std::vector<std::string> vars;
  std::vector<Exponent> points;   // support
  std::vector<Exponent> hull;     // vertices, counterclockwise in the projection
  std::vector<Exponent> lattice;  // all lattice points of the hull, grlex descending
  bool homogeneous = true;
  int degree = 0;

  bool contains(const Exponent& e) const;
};

NewtonPolytope newton_polytope(const Polynomial& p);

// Lattice points a with 2a in New(p) (of degree d/2 for forms).
std::vector<Exponent> half_support(const Polynomial& p);

struct ParityPartition {
  std::map<Exponent, std::vector<Exponent>> classes;  // key: exponent mod 2
};

ParityPartition parity_classes(const std::vector<Exponent>& candidates);

bool is_even_form(const Polynomial& p);

struct NonSOSCertificate {
  std::string kind = "diagonal-obstruction";
  Exponent monomial;       // 2a, with a negative coefficient in p
  Exponent class_witness;  // a, alone in its parity class
  mpq_class coefficient;
  ParityPartition partition;
  std::string explanation;
};

struct NonSOSResult {
  std::optional<NonSOSCertificate> certificate;
  std::string reason;  // set when inconclusive
};

// When every parity class of the half support is a singleton, an SOS of an even
// form is a nonnegative combination of monomial squares. The flag claims p is
// even; the claim is checked and a false claim is inconclusive.
NonSOSResult exact_nonsos_test(const Polynomial& p, bool even_form = true);

// Independent replay: coefficient lookups plus a triangle-based hull test.
bool replay_nonsos_certificate(const Polynomial& p, const NonSOSCertificate& cert);

nlohmann::json to_json(const NewtonPolytope& np);
nlohmann::json to_json(const NonSOSCertificate& cert);

}  // namespace stubborn

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stubborn/blowup.hpp"
#include "stubborn/point.hpp"
#include "stubborn/polynomial.hpp"

namespace stubborn {

struct ZeroSet {
  std::vector<ProjectivePoint> points;
  bool complete = true;
  bool positive_dimensional = false;
  std::vector<std::string> reasons;  // why the set may be partial
};

// Common projective zeros of ternary forms with coordinates in Q or one Q(sqrt D).
// With real_only, non-real points are skipped and only missing real points make
// the result partial.
ZeroSet common_zeros(const std::vector<Polynomial>& forms, bool real_only,
                     unsigned seed = 20240611);

// Real zeros of a ternary form, found as real singular points.
ZeroSet locate_real_zeros(const Polynomial& P);

struct IntersectionPoint {
  ProjectivePoint point;
  long multiplicity = 0;
};

struct IntersectionCount {
  std::vector<IntersectionPoint> points;
  long total = 0;
  bool complete = true;
  std::vector<std::string> reasons;
};

// Projective intersection of two ternary forms without a common factor.
IntersectionCount intersection_count(const Polynomial& F, const Polynomial& G);

enum class Verdict { Stubborn, Inconclusive };
std::string to_string(Verdict v);

struct StubbornnessCertificate {
  Polynomial form;
  int degree = 0;
  std::vector<ZeroInvariants> zeros;
  bool zeros_complete = true;
  std::vector<std::string> zero_reasons;
  mpq_class total = 0;      // sum of the sos invariants
  mpq_class threshold = 0;  // d^2 / 4
  std::optional<long> delta_total;
  Verdict verdict = Verdict::Inconclusive;
  std::string provenance;  // sos-invariant, round-zeros, monomial-lift, substitution
  std::string nonnegativity;
  std::vector<std::string> notes;
};

struct CertifyOptions {
  int jobs = 1;
  int samples = 4000;
  unsigned seed = 20240611;
};

// Throws InapplicableError when P takes a negative value or is not locally
// nonnegative at a zero, NonIsolatedZero for a positive-dimensional zero set,
// InputError when a supplied point is not a singular zero of P.
StubbornnessCertificate certify_stubborn(const Polynomial& P,
                                         const std::optional<std::vector<ProjectivePoint>>& zeros = std::nullopt,
                                         const CertifyOptions& options = {});

// X1^(2m) P, stubborn whenever P is.
struct Lift {
  Polynomial form;
  bool reducible = false;
  std::string note;
};
Lift lift_by_monomial(const Polynomial& P, unsigned m);
StubbornnessCertificate lift_certificate(const StubbornnessCertificate& base, unsigned m);

struct SubstitutionMismatch {
  Exponent monomial;
  Coefficient difference;  // coefficient of P(sigma) - expected
  std::vector<std::string> vars;
  std::string to_string() const;
};

// Exact check of P(sigma) == expected.
std::optional<SubstitutionMismatch> check_substitution(
    const Polynomial& P, const std::map<std::string, Polynomial>& sigma,
    const Polynomial& expected);

// P(sigma) equals base.form, or its dehomogenization in chart_var when given.
// Throws InapplicableError with the mismatch coefficient otherwise.
StubbornnessCertificate restriction_transfer(const Polynomial& P,
                                             const std::map<std::string, Polynomial>& sigma,
                                             const StubbornnessCertificate& base,
                                             const std::optional<std::string>& chart_var = {});

nlohmann::json to_json(const ZeroSet& z);
nlohmann::json to_json(const IntersectionCount& c);
nlohmann::json to_json(const StubbornnessCertificate& c, bool include_trees = true);

}  // namespace stubborn

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "stubborn/univariate.hpp"

namespace stubborn {

// Contains exactly one distinct real root; lo == hi marks an exact rational root.
struct IsolatingInterval {
  mpq_class lo, hi;
  int multiplicity = 1;
  bool exact() const { return lo == hi; }
  double midpoint() const { return mpq_class((lo + hi) / 2).get_d(); }
};

class SturmSequence {
 public:
  explicit SturmSequence(const RatPoly& p);  // p is made square-free first
  int variations(const mpq_class& t) const;
  int variations_at_infinity(int sign) const;
  // Distinct roots in (a, b].
  int count(const mpq_class& a, const mpq_class& b) const;
  int count_all() const;
  const RatPoly& base() const { return seq_.front(); }

 private:
  std::vector<RatPoly> seq_;
};

mpq_class cauchy_bound(const RatPoly& p);

std::vector<IsolatingInterval> isolate_real_roots(const RatPoly& p);
std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p);
// Shrinks an interval around a simple root of a square-free p below `width`.
void refine(IsolatingInterval& iv, const RatPoly& squarefree_p, const mpq_class& width);

struct NonnegResult {
  bool nonneg = false;
  std::optional<mpq_class> witness;  // p(witness) < 0 when nonneg is false
  std::vector<IsolatingInterval> roots;
  std::string certificate;
};
NonnegResult univariate_nonneg(const RatPoly& p);
NonnegResult univariate_nonneg(const Polynomial& p);
// No real roots and positive at 0.
bool strictly_positive(const RatPoly& p);

// True when f (over Q or a real Q(sqrt D)) has a real root.
bool has_real_root(const FieldPoly& f);

// Numeric complex roots (Aberth iteration in long double), with multiplicity
// represented by repetition.
std::vector<std::complex<long double>> numeric_roots(const RatPoly& p);

// A root represented exactly in Q or a single Q(sqrt D).
struct ExactRoot {
  Coefficient value;
  int multiplicity = 1;
};

struct RootSplit {
  std::vector<ExactRoot> roots;          // real and complex, exact
  std::vector<FieldPoly> unsupported;    // square-free leftover factors without exact roots
  std::vector<int> unsupported_multiplicity;
  bool unsupported_real_roots = false;
};

// All roots lying in Q or a quadratic field, for p over Q.
RootSplit exact_roots(const RatPoly& p);
// Roots of p (over Q(sqrt D)) that lie in Q(sqrt D).
RootSplit exact_roots(const FieldPoly& p);

// Projective direction [x:y], normalized to y = 1 or [1:0].
struct Direction {
  Coefficient x = 0, y = 1;
  int multiplicity = 1;
  bool real() const { return x.is_real() && y.is_real(); }
  std::string to_string() const;
};

struct BinaryFormFactorization {
  std::vector<Direction> rational_linear;  // real directions over Q or Q(sqrt D), D > 0
  // Non-real directions. For a real form one representative (positive imaginary
  // part) per conjugate pair; otherwise every non-real root.
  std::vector<Direction> complex_pairs;
  bool conjugate_closed = true;
  Polynomial irreducible_remainder;        // input divided by the real linear factors
  std::vector<int> remainder_degrees;      // degrees of unsupported factor classes
  std::vector<FieldPoly> unsupported;      // those factors, dehomogenized in the second variable
  std::vector<int> unsupported_multiplicity;
  bool has_unsupported_real_roots = false;
};

// Linear factors of a binary form over Q or Q(sqrt D).
BinaryFormFactorization binary_real_tangents(const Polynomial& F);

// f_{n,r}(t) = sum_{i<=r} C(n,i) t^i.
RatPoly truncated_binomial(int n, int r);
bool truncated_binomial_positive(int n, int r);
// Homogeneous F_{n,r}(t1,t2) = sum_{i<=r} C(n,i) t1^i t2^(r-i).
Polynomial truncated_binomial_form(int n, int r, const std::string& t1 = "t1",
                                   const std::string& t2 = "t2");

}  // namespace stubborn

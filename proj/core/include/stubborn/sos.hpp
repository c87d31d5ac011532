#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "stubborn/polynomial.hpp"

namespace stubborn {

struct GramConstraint {
  Exponent monomial;
  std::vector<std::pair<int, int>> pairs;  // basis indices i <= j with a_i + a_j = monomial
  mpq_class target;
};

struct GramProblem {
  std::vector<std::string> vars;
  std::vector<Exponent> basis;
  std::vector<GramConstraint> constraints;
  std::vector<std::vector<int>> blocks;  // one block unless split by parity
  bool parity_blocks = false;
};

// Gram parametrization over the half support; parity blocks only for even forms.
GramProblem gram_problem(const Polynomial& p, bool use_parity_blocks = true);

constexpr std::size_t kMaxGramBasis = 400;

struct SdpTolerances {
  double eig_tol = 1e-7;   // feasible: lambda_min >= -eig_tol
  double res_tol = 1e-8;   // max constraint residual
  double margin = 1e-6;    // infeasible: optimal lambda_min <= -margin
  int max_iterations = 120;
  std::ostream* trace = nullptr;
};

enum class SdpStatus { Feasible, Infeasible, Indeterminate };
std::string to_string(SdpStatus s);

using DenseMatrix = std::vector<std::vector<double>>;

// Tolerances apply to p scaled to unit max coefficient; reported matrices are unscaled.
struct SdpResult {
  SdpStatus status = SdpStatus::Indeterminate;
  double scale = 1;          // max |coefficient| of p
  double lambda_opt = 0;     // optimal lambda_min of the scaled problem
  DenseMatrix gram;          // Gram matrix of p
  double min_eigenvalue = 0; // of the scaled Gram matrix
  double residual = 0;       // of the scaled Gram matrix
  DenseMatrix dual;          // moment-like matrix X with <X, Q> = lambda_opt for all Gram Q
  double dual_objective = 0;
  double dual_min_eigenvalue = 0;
  double dual_residual = 0;
  int iterations = 0;
  bool converged = false;
  std::string note;
};

SdpResult sdp_feasibility(const GramProblem& problem, const SdpTolerances& tol = {});
SdpResult sdp_feasibility(const Polynomial& p, const SdpTolerances& tol = {},
                          bool use_parity_blocks = true);

struct SOSCertificate {
  std::vector<WeightedSquare> terms;  // constant nonnegative weights
  bool exact = false;                 // rational Gram matrix satisfying every constraint
  mpq_class residual;                 // max |coefficient| of p - sum w h^2
};

// Throws InapplicableError unless the SDP reports feasible.
SOSCertificate sos_decompose(const Polynomial& p, const SdpTolerances& tol = {});

// Max |coefficient| of p - sum w h^2, computed exactly. Throws InputError when a
// term uses a variable that p does not have.
mpq_class verify_certificate(const Polynomial& p, const std::vector<WeightedSquare>& terms);
mpq_class verify_certificate(const Polynomial& p, const SOSCertificate& cert);

struct TwoSquares {
  Polynomial g, h;
  double residual = 0;  // max |coefficient| of F - g^2 - h^2 relative to max |coefficient| of F
};

// F = g^2 + h^2 for a binary form positive on R^2 minus the origin; variables
// (t1, t2) in the order of F. Throws InapplicableError when F has a real zero.
TwoSquares two_square_decomposition(const Polynomial& F);

// Certificate for (P1 + P2)^(k1 + k2 - 1) from certificates of P1^k1 and P2^k2,
// k1 and k2 odd. Missing certificates are computed with sos_decompose.
SOSCertificate convex_sum_certificate(const Polynomial& P1, std::optional<SOSCertificate> cert1,
                                      unsigned k1, const Polynomial& P2,
                                      std::optional<SOSCertificate> cert2, unsigned k2,
                                      const SdpTolerances& tol = {});

// Each square restricted by the assignment must be divisible by the divisor.
struct RestrictionCheck {
  bool all_divisible = true;
  std::vector<bool> divisible;
};
RestrictionCheck restriction_divisibility(const std::vector<WeightedSquare>& terms,
                                          const std::map<std::string, Polynomial>& assignment,
                                          const Polynomial& divisor);

enum class ProbeVerdict { Feasible, Infeasible, Indeterminate };
std::string to_string(ProbeVerdict v);

struct Probe {
  mpq_class value;
  ProbeVerdict verdict = ProbeVerdict::Indeterminate;
  double evidence = 0;  // lambda_opt for SDP probes, 0 for exact ones
  std::string note;
};

using ProbeFn = std::function<Probe(const mpq_class&)>;

struct ThresholdResult {
  std::string parameter;
  mpq_class lo, hi;            // feasible side, other side
  bool feasible_below = true;  // orientation of the bracket
  std::vector<Probe> probes;   // endpoints first, then midpoints
  int iterations = 0;
};

// Bisection between a feasible and an infeasible endpoint. Indeterminate
// midpoints are not counted as feasible.
ThresholdResult threshold_bisection(const std::string& parameter, const ProbeFn& probe,
                                    const mpq_class& lo, const mpq_class& hi,
                                    const mpq_class& tol);

// SDP probe of family(a)^k.
ProbeFn sdp_power_probe(std::function<Polynomial(const mpq_class&)> family, unsigned k,
                        const SdpTolerances& tol = {});
// Exact nonnegativity probe for T_c.
ProbeFn stengle_probe();

nlohmann::json to_json(const SdpResult& r, bool include_matrices = false);
nlohmann::json to_json(const SOSCertificate& cert);
nlohmann::json to_json(const ThresholdResult& r);

}  // namespace stubborn

#include "stubborn/sos.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "sdp_solver.hpp"
#include "stubborn/errors.hpp"
#include "stubborn/fixtures.hpp"
#include "stubborn/newton.hpp"
#include "stubborn/realroots.hpp"

namespace stubborn {
namespace {

using MatQ = std::vector<std::vector<mpq_class>>;

struct Slot {
  int block = 0, local = 0;
};

std::vector<Slot> slots(const GramProblem& g) {
  std::vector<Slot> s(g.basis.size());
  for (std::size_t b = 0; b < g.blocks.size(); ++b)
    for (std::size_t l = 0; l < g.blocks[b].size(); ++l)
      s[g.blocks[b][l]] = {static_cast<int>(b), static_cast<int>(l)};
  return s;
}

Polynomial basis_combination(const GramProblem& g, const std::vector<mpq_class>& coeffs) {
  Polynomial h(g.vars);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (sgn(coeffs[i]) != 0) h.add_term(g.basis[i], Coefficient(coeffs[i]));
  return h;
}

// Exact LDL^T of a symmetric rational matrix; empty when not psd.
std::optional<std::pair<MatQ, std::vector<mpq_class>>> ldlt_psd(MatQ a) {
  const std::size_t n = a.size();
  MatQ L(n, std::vector<mpq_class>(n, 0));
  std::vector<mpq_class> d(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    L[k][k] = 1;
    d[k] = a[k][k];
    if (sgn(d[k]) < 0) return std::nullopt;
    if (sgn(d[k]) == 0) {
      for (std::size_t i = k + 1; i < n; ++i)
        if (sgn(a[i][k]) != 0) return std::nullopt;
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) L[i][k] = a[i][k] / d[k];
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= L[i][k] * a[k][j];
  }
  return std::make_pair(std::move(L), std::move(d));
}

mpq_class round_to(double x, long den) {
  mpq_class q(std::lround(x * static_cast<double>(den)), den);
  q.canonicalize();
  return q;
}

// Rounded Gram matrix projected exactly onto the constraints; empty when not psd.
std::optional<MatQ> rational_gram(const GramProblem& g, const DenseMatrix& gram, long den) {
  const std::size_t n = g.basis.size();
  MatQ q(n, std::vector<mpq_class>(n, 0));
  for (const auto& c : g.constraints) {
    if (c.pairs.empty()) {
      if (sgn(c.target) != 0) return std::nullopt;
      continue;
    }
    mpq_class sum = 0;
    long count = 0;
    for (auto [i, j] : c.pairs) {
      q[i][j] = q[j][i] = round_to(gram[i][j], den);
      sum += (i == j ? 1 : 2) * q[i][j];
      count += i == j ? 1 : 2;
    }
    mpq_class shift = (c.target - sum) / count;
    for (auto [i, j] : c.pairs) {
      q[i][j] += shift;
      q[j][i] = q[i][j];
    }
  }
  return q;
}

std::vector<WeightedSquare> squares_from_rational(const GramProblem& g, const MatQ& q) {
  std::vector<WeightedSquare> terms;
  for (const auto& block : g.blocks) {
    MatQ sub(block.size(), std::vector<mpq_class>(block.size()));
    for (std::size_t a = 0; a < block.size(); ++a)
      for (std::size_t b = 0; b < block.size(); ++b) sub[a][b] = q[block[a]][block[b]];
    auto f = *ldlt_psd(sub);
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (sgn(f.second[k]) == 0) continue;
      std::vector<mpq_class> coeffs(g.basis.size(), 0);
      for (std::size_t i = k; i < block.size(); ++i) coeffs[block[i]] = f.first[i][k];
      terms.push_back({Polynomial::constant(Coefficient(f.second[k]), g.vars),
                       basis_combination(g, coeffs)});
    }
  }
  return terms;
}

std::vector<WeightedSquare> squares_from_numeric(const GramProblem& g, const DenseMatrix& gram) {
  const int n = static_cast<int>(g.basis.size());
  Eigen::MatrixXd Q(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) Q(i, j) = gram[i][j];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Q);
  double top = std::max(es.eigenvalues().cwiseAbs().maxCoeff(), 1e-300);
  std::vector<WeightedSquare> terms;
  for (int k = 0; k < n; ++k) {
    double lam = es.eigenvalues()[k];
    if (lam <= 1e-14 * top) continue;
    std::vector<mpq_class> coeffs(n);
    for (int i = 0; i < n; ++i) coeffs[i] = mpq_class(es.eigenvectors()(i, k));
    terms.push_back({Polynomial::constant(Coefficient(mpq_class(lam)), g.vars),
                     basis_combination(g, coeffs)});
  }
  return terms;
}

mpq_class max_abs(const Polynomial& p) {
  mpq_class m = 0;
  for (const auto& [e, c] : p.terms()) {
    if (!c.is_rational()) throw InputError("expected rational coefficients");
    m = std::max(m, mpq_class(abs(c.rational())));
  }
  return m;
}

Polynomial from_double(const std::vector<std::string>& vars, const Exponent& e, double v) {
  return Polynomial::monomial(vars, e, Coefficient(mpq_class(v)));
}

}  // namespace

std::string to_string(SdpStatus s) {
  switch (s) {
    case SdpStatus::Feasible: return "feasible";
    case SdpStatus::Infeasible: return "infeasible";
    default: return "indeterminate";
  }
}

std::string to_string(ProbeVerdict v) {
  switch (v) {
    case ProbeVerdict::Feasible: return "feasible";
    case ProbeVerdict::Infeasible: return "infeasible";
    default: return "indeterminate";
  }
}

GramProblem gram_problem(const Polynomial& p, bool use_parity_blocks) {
  if (p.is_zero()) throw InputError("Gram problem of the zero polynomial");
  if (!p.is_rational()) throw InputError("Gram problem needs rational coefficients");
  GramProblem g;
  g.vars = p.vars();
  g.basis = half_support(p);
  if (g.basis.size() > kMaxGramBasis)
    throw InputError("Gram basis of size " + std::to_string(g.basis.size()) + " exceeds " +
                     std::to_string(kMaxGramBasis));
  if (use_parity_blocks && is_even_form(p)) {
    g.parity_blocks = true;
    std::map<Exponent, std::vector<int>> by_class;
    for (std::size_t i = 0; i < g.basis.size(); ++i) {
      Exponent key = g.basis[i];
      for (auto& x : key) x %= 2;
      by_class[key].push_back(static_cast<int>(i));
    }
    for (auto& [key, idx] : by_class) g.blocks.push_back(std::move(idx));
  } else {
    std::vector<int> all(g.basis.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    g.blocks.push_back(std::move(all));
  }
  std::map<Exponent, GramConstraint, GrlexGreater> cons;
  for (const auto& block : g.blocks)
    for (std::size_t a = 0; a < block.size(); ++a)
      for (std::size_t b = a; b < block.size(); ++b) {
        int i = std::min(block[a], block[b]), j = std::max(block[a], block[b]);
        Exponent s = g.basis[i];
        for (std::size_t k = 0; k < s.size(); ++k) s[k] += g.basis[j][k];
        cons[s].monomial = s;
        cons[s].pairs.emplace_back(i, j);
      }
  for (const auto& [e, c] : p.terms()) {
    cons[e].monomial = e;
    cons[e].target = c.rational();
  }
  for (auto& [e, c] : cons) g.constraints.push_back(std::move(c));
  return g;
}

SdpResult sdp_feasibility(const GramProblem& g, const SdpTolerances& tol) {
  SdpResult res;
  const std::size_t n = g.basis.size();
  mpq_class scale_q = 0;
  for (const auto& c : g.constraints) scale_q = std::max(scale_q, mpq_class(abs(c.target)));
  if (sgn(scale_q) == 0) scale_q = 1;
  res.scale = scale_q.get_d();

  auto sl = slots(g);
  sdp::Problem prob;
  for (const auto& b : g.blocks) prob.block_sizes.push_back(static_cast<int>(b.size()));
  for (int s : prob.block_sizes) prob.C.push_back(Eigen::MatrixXd::Zero(s, s));
  const double r2 = std::sqrt(2.0);

  for (const auto& c : g.constraints) {
    double target = mpq_class(c.target / scale_q).get_d();
    if (c.pairs.empty()) {
      if (sgn(c.target) != 0) {
        res.status = SdpStatus::Infeasible;
        res.converged = true;
        res.note = "monomial " + Polynomial::monomial(g.vars, c.monomial).to_string() +
                   " has no Gram entry";
        return res;
      }
      continue;
    }
    const std::size_t k = c.pairs.size();
    Eigen::VectorXd w(k);
    for (std::size_t p = 0; p < k; ++p) w[p] = c.pairs[p].first == c.pairs[p].second ? 1 : r2;
    Eigen::VectorXd q0 = target * w / w.squaredNorm();
    // Pairs of one constraint may lie in different parity blocks.
    auto place = [&](sdp::SparseSym* sym, sdp::Blocks* dense, const Eigen::VectorXd& z,
                     double sign) {
      for (std::size_t p = 0; p < k; ++p) {
        auto [i, j] = c.pairs[p];
        Slot a = sl[i], b = sl[j];
        double v = sign * (i == j ? z[p] : z[p] / r2);
        if (sym) sym->entries.push_back({a.block, std::min(a.local, b.local),
                                         std::max(a.local, b.local), v});
        if (dense) {
          (*dense)[a.block](a.local, b.local) += v;
          if (i != j) (*dense)[a.block](b.local, a.local) += v;
        }
      }
    };
    place(nullptr, &prob.C, q0, 1);
    if (k >= 2) {
      // Orthonormal complement of w via one Householder reflection.
      Eigen::VectorXd u = w;
      u[0] -= w.norm();
      Eigen::MatrixXd H = Eigen::MatrixXd::Identity(k, k) - 2 * u * u.transpose() / u.squaredNorm();
      for (std::size_t col = 1; col < k; ++col) {
        sdp::SparseSym a;
        place(&a, nullptr, H.col(col), -1);
        prob.A.push_back(std::move(a));
      }
    }
  }
  const std::size_t K = prob.A.size();
  sdp::SparseSym id;
  for (std::size_t b = 0; b < g.blocks.size(); ++b)
    for (int i = 0; i < prob.block_sizes[b]; ++i) id.entries.push_back({static_cast<int>(b), i, i, 1});
  prob.A.push_back(std::move(id));
  prob.b = Eigen::VectorXd::Zero(K + 1);
  prob.b[K] = 1;

  sdp::Solution sol = sdp::solve(prob, tol.max_iterations, 1e-10, tol.trace);
  res.iterations = sol.iterations;
  res.converged = sol.converged;
  res.lambda_opt = sol.y[K];

  Eigen::VectorXd yk = sol.y;
  yk[K] = 0;
  sdp::Blocks Q = prob.C;
  sdp::Blocks adj = sdp::adjoint(prob, yk);
  for (std::size_t b = 0; b < Q.size(); ++b) Q[b] -= adj[b];
  res.min_eigenvalue = sdp::min_eigenvalue(Q);

  double resid = 0;
  for (const auto& c : g.constraints) {
    double s = 0;
    for (auto [i, j] : c.pairs) s += (i == j ? 1 : 2) * Q[sl[i].block](sl[i].local, sl[j].local);
    resid = std::max(resid, std::abs(s - mpq_class(c.target / scale_q).get_d()));
  }
  res.residual = resid;

  res.dual_objective = sdp::inner(prob.C, sol.X);
  res.dual_min_eigenvalue = sdp::min_eigenvalue(sol.X);
  res.dual_residual = (sdp::constraint_map(prob, sol.X) - prob.b).cwiseAbs().maxCoeff();

  res.gram.assign(n, std::vector<double>(n, 0));
  res.dual.assign(n, std::vector<double>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sl[i].block == sl[j].block) {
        res.gram[i][j] = res.scale * Q[sl[i].block](sl[i].local, sl[j].local);
        res.dual[i][j] = sol.X[sl[i].block](sl[i].local, sl[j].local);
      }

  if (res.min_eigenvalue >= -tol.eig_tol && res.residual <= tol.res_tol) {
    res.status = SdpStatus::Feasible;
  } else if (res.lambda_opt <= -tol.margin && res.dual_objective <= -tol.margin &&
             res.dual_residual <= tol.res_tol && res.dual_min_eigenvalue >= -tol.eig_tol) {
    res.status = SdpStatus::Infeasible;
    res.note = "dual matrix separates p from the SOS cone";
  } else {
    res.status = SdpStatus::Indeterminate;
    res.note = "optimal lambda_min within the tolerance band";
  }
  return res;
}

SdpResult sdp_feasibility(const Polynomial& p, const SdpTolerances& tol, bool use_parity_blocks) {
  return sdp_feasibility(gram_problem(p, use_parity_blocks), tol);
}

SOSCertificate sos_decompose(const Polynomial& p, const SdpTolerances& tol) {
  GramProblem g = gram_problem(p, true);
  SdpResult r = sdp_feasibility(g, tol);
  if (r.status != SdpStatus::Feasible)
    throw InapplicableError("no SOS certificate: SDP reports " + to_string(r.status));
  SOSCertificate cert;
  for (long den : {1L, 2L, 4L, 6L, 12L, 24L, 60L, 120L, 360L, 720L, 2520L, 5040L, 27720L,
                   55440L, 720720L, 1000000L}) {
    auto q = rational_gram(g, r.gram, den);
    if (!q) continue;
    bool psd = true;
    for (const auto& block : g.blocks) {
      MatQ sub(block.size(), std::vector<mpq_class>(block.size()));
      for (std::size_t a = 0; a < block.size(); ++a)
        for (std::size_t b = 0; b < block.size(); ++b) sub[a][b] = (*q)[block[a]][block[b]];
      if (!ldlt_psd(sub)) {
        psd = false;
        break;
      }
    }
    if (!psd) continue;
    cert.terms = squares_from_rational(g, *q);
    cert.exact = true;
    break;
  }
  if (!cert.exact) cert.terms = squares_from_numeric(g, r.gram);
  cert.residual = verify_certificate(p, cert.terms);
  return cert;
}

mpq_class verify_certificate(const Polynomial& p, const std::vector<WeightedSquare>& terms) {
  auto check_vars = [&](const Polynomial& q) {
    for (std::size_t i = 0; i < q.nvars(); ++i)
      if (q.degree_in(i) > 0 && p.var_index(q.vars()[i]) < 0)
        throw InputError("certificate variable " + q.vars()[i] + " does not occur in the form");
  };
  Polynomial diff = p;
  for (const auto& t : terms) {
    check_vars(t.weight);
    check_vars(t.square);
    diff -= t.weight * t.square * t.square;
  }
  return max_abs(diff);
}

mpq_class verify_certificate(const Polynomial& p, const SOSCertificate& cert) {
  return verify_certificate(p, cert.terms);
}

TwoSquares two_square_decomposition(const Polynomial& F) {
  if (F.is_zero() || !F.is_homogeneous() || !F.is_rational())
    throw InputError("two-square decomposition needs a nonzero rational binary form");
  if (F.nvars() != 2) throw InputError("two-square decomposition needs a binary form");
  const int d = F.degree();
  if (d % 2 != 0) throw InapplicableError("form of odd degree has a real zero");
  std::vector<mpq_class> c(d + 1);
  for (int i = 0; i <= d; ++i)
    c[i] = F.coeff({static_cast<unsigned>(i), static_cast<unsigned>(d - i)}).rational();
  RatPoly f(c);
  if (f.degree() != d || !strictly_positive(f))
    throw InapplicableError("form has a real zero: " + F.to_string());

  using C = std::complex<long double>;
  std::vector<C> prod{C(std::sqrt(static_cast<long double>(f.lc().get_d())))};
  if (d > 0) {
    auto roots = numeric_roots(f);
    auto eval = [&](C z, C& dz) {
      C v = 0;
      dz = 0;
      for (int i = d; i >= 0; --i) {
        dz = dz * z + v;
        v = v * z + C(static_cast<long double>(c[i].get_d()));
      }
      return v;
    };
    for (auto& r : roots)
      for (int it = 0; it < 3; ++it) {
        C dz;
        C v = eval(r, dz);
        if (std::abs(dz) == 0) break;
        r -= v / dz;
      }
    std::sort(roots.begin(), roots.end(), [](C a, C b) { return a.imag() > b.imag(); });
    roots.resize(d / 2);
    for (const auto& r : roots) {
      if (r.imag() <= 0) throw Error("root pairing failed for " + F.to_string());
      std::vector<C> next(prod.size() + 1, C(0));
      for (std::size_t i = 0; i < prod.size(); ++i) {
        next[i + 1] += prod[i];
        next[i] -= r * prod[i];
      }
      prod = std::move(next);
    }
  }
  TwoSquares out{Polynomial(F.vars()), Polynomial(F.vars()), 0};
  const unsigned h = d / 2;
  for (unsigned i = 0; i <= h; ++i) {
    Exponent e{i, h - i};
    out.g += from_double(F.vars(), e, static_cast<double>(prod[i].real()));
    out.h += from_double(F.vars(), e, static_cast<double>(prod[i].imag()));
  }
  mpq_class diff = max_abs(F - out.g * out.g - out.h * out.h);
  out.residual = mpq_class(diff / max_abs(F)).get_d();
  return out;
}

SOSCertificate convex_sum_certificate(const Polynomial& P1, std::optional<SOSCertificate> cert1,
                                      unsigned k1, const Polynomial& P2,
                                      std::optional<SOSCertificate> cert2, unsigned k2,
                                      const SdpTolerances& tol) {
  if (k1 % 2 == 0 || k2 % 2 == 0) throw InputError("powers must be odd");
  if (!cert1) cert1 = sos_decompose(power(P1, k1), tol);
  if (!cert2) cert2 = sos_decompose(power(P2, k2), tol);
  const int n = static_cast<int>(k1 + k2 - 1);
  SOSCertificate out;
  // (P1+P2)^n = P2^k2 f_{n,k1-1}(P1, P2) + P1^k1 f_{n,k2-1}(P2, P1).
  auto distribute = [&](const SOSCertificate& base, int r, const Polynomial& A,
                        const Polynomial& B) {
    TwoSquares gh = two_square_decomposition(truncated_binomial_form(n, r, "s1", "s2"));
    for (const Polynomial* part : {&gh.g, &gh.h}) {
      if (part->is_zero()) continue;
      Polynomial sub = substitute(*part, {{"s1", A}, {"s2", B}});
      for (const auto& t : base.terms) out.terms.push_back({t.weight, t.square * sub});
    }
  };
  distribute(*cert2, static_cast<int>(k1) - 1, P1, P2);
  distribute(*cert1, static_cast<int>(k2) - 1, P2, P1);
  Polynomial target = power(P1 + P2, static_cast<unsigned>(n));
  out.residual = verify_certificate(target, out.terms);
  out.exact = cert1->exact && cert2->exact && sgn(out.residual) == 0;
  return out;
}

RestrictionCheck restriction_divisibility(const std::vector<WeightedSquare>& terms,
                                          const std::map<std::string, Polynomial>& assignment,
                                          const Polynomial& divisor) {
  RestrictionCheck rc;
  for (const auto& t : terms) {
    Polynomial r = substitute(t.square, assignment);
    bool ok = true;
    if (!r.is_zero()) {
      try {
        exact_divide(r, divisor);
      } catch (const InputError&) {
        ok = false;
      }
    }
    rc.divisible.push_back(ok);
    rc.all_divisible = rc.all_divisible && ok;
  }
  return rc;
}

ThresholdResult threshold_bisection(const std::string& parameter, const ProbeFn& probe,
                                    const mpq_class& lo, const mpq_class& hi,
                                    const mpq_class& tol) {
  if (!(lo < hi) || sgn(tol) <= 0) throw InputError("bracket needs lo < hi and tol > 0");
  ThresholdResult res;
  res.parameter = parameter;
  Probe a = probe(lo), b = probe(hi);
  res.probes = {a, b};
  mpq_class good, bad;
  if (a.verdict == ProbeVerdict::Feasible && b.verdict == ProbeVerdict::Infeasible) {
    good = lo, bad = hi;
  } else if (a.verdict == ProbeVerdict::Infeasible && b.verdict == ProbeVerdict::Feasible) {
    good = hi, bad = lo;
    res.feasible_below = false;
  } else {
    throw InputError("invalid bracket: " + to_string(a.verdict) + " at " +
                     rational_to_string(lo) + ", " + to_string(b.verdict) + " at " +
                     rational_to_string(hi));
  }
  while (abs(bad - good) > tol) {
    mpq_class mid = (good + bad) / 2;
    Probe p = probe(mid);
    res.probes.push_back(p);
    ++res.iterations;
    (p.verdict == ProbeVerdict::Feasible ? good : bad) = mid;
  }
  res.lo = std::min(good, bad);
  res.hi = std::max(good, bad);
  return res;
}

ProbeFn sdp_power_probe(std::function<Polynomial(const mpq_class&)> family, unsigned k,
                        const SdpTolerances& tol) {
  return [family = std::move(family), k, tol](const mpq_class& a) {
    SdpResult r = sdp_feasibility(power(family(a), k), tol);
    Probe p;
    p.value = a;
    p.verdict = r.status == SdpStatus::Feasible     ? ProbeVerdict::Feasible
                : r.status == SdpStatus::Infeasible ? ProbeVerdict::Infeasible
                                                    : ProbeVerdict::Indeterminate;
    p.evidence = r.lambda_opt;
    p.note = "sdp " + to_string(r.status) + ", lambda_min " + std::to_string(r.min_eigenvalue) +
             ", " + std::to_string(r.iterations) + " iterations";
    return p;
  };
}

ProbeFn stengle_probe() {
  return [](const mpq_class& c) {
    Probe p;
    p.value = c;
    if (sgn(c) < 0) {
      // The square vanishes where X2^2 X3 = X1^3 + X1 X3^2 with X1, X3 > 0.
      p.verdict = ProbeVerdict::Infeasible;
      p.note = "c X1^3 X3^3 < 0 on the zero set of the square";
      return p;
    }
    // Minimizing over X2 at X3 = 1 leaves X2 = 0 where X1 < 0; X3 = 0 gives X1^6.
    Polynomial slice =
        substitute(fixtures::stengle_tc(Coefficient(c)),
                   {{"X2", Polynomial::constant(0)}, {"X3", Polynomial::constant(1)}});
    NonnegResult r = univariate_nonneg(slice.compact());
    p.verdict = r.nonneg ? ProbeVerdict::Feasible : ProbeVerdict::Infeasible;
    p.note = r.nonneg ? "slice nonnegative" : "slice negative at X1 = " + rational_to_string(*r.witness);
    return p;
  };
}

nlohmann::json to_json(const SdpResult& r, bool include_matrices) {
  nlohmann::json j = {{"status", to_string(r.status)},
                      {"scale", r.scale},
                      {"lambda_opt", r.lambda_opt},
                      {"min_eigenvalue", r.min_eigenvalue},
                      {"residual", r.residual},
                      {"dual_objective", r.dual_objective},
                      {"dual_min_eigenvalue", r.dual_min_eigenvalue},
                      {"dual_residual", r.dual_residual},
                      {"iterations", r.iterations},
                      {"converged", r.converged}};
  if (!r.note.empty()) j["note"] = r.note;
  if (include_matrices) {
    j["gram"] = r.gram;
    j["dual"] = r.dual;
  }
  return j;
}

nlohmann::json to_json(const SOSCertificate& cert) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : cert.terms)
    terms.push_back({{"weight", t.weight.to_string()}, {"square", t.square.to_string()}});
  return {{"exact", cert.exact}, {"residual", rational_to_string(cert.residual)}, {"terms", terms}};
}

nlohmann::json to_json(const ThresholdResult& r) {
  nlohmann::json probes = nlohmann::json::array();
  for (const auto& p : r.probes)
    probes.push_back({{"value", rational_to_string(p.value)},
                      {"value_decimal", p.value.get_d()},
                      {"verdict", to_string(p.verdict)},
                      {"evidence", p.evidence},
                      {"note", p.note}});
  return {{"parameter", r.parameter},
          {"lo", rational_to_string(r.lo)},
          {"hi", rational_to_string(r.hi)},
          {"lo_decimal", r.lo.get_d()},
          {"hi_decimal", r.hi.get_d()},
          {"feasible_below", r.feasible_below},
          {"iterations", r.iterations},
          {"probes", probes}};
}

}  // namespace stubborn

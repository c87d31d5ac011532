#include "sdp_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace stubborn::sdp {
namespace {

Blocks zeros(const std::vector<int>& sizes) {
  Blocks out;
  for (int n : sizes) out.push_back(Eigen::MatrixXd::Zero(n, n));
  return out;
}

Blocks identity(const std::vector<int>& sizes, double s) {
  Blocks out;
  for (int n : sizes) out.push_back(s * Eigen::MatrixXd::Identity(n, n));
  return out;
}

double frobenius(const Blocks& a) { return std::sqrt(inner(a, a)); }

void symmetrize(Blocks& a) {
  for (auto& m : a) m = 0.5 * (m + m.transpose()).eval();
}

Blocks minus(const Blocks& a, const Blocks& b) {
  Blocks out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Blocks product(const Blocks& a, const Blocks& b) {
  Blocks out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

// Largest step alpha with X + alpha dX psd.
double max_step(const Blocks& X, const Blocks& dX) {
  double step = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (X[i].rows() == 0) continue;
    Eigen::LLT<Eigen::MatrixXd> llt(X[i]);
    Eigen::MatrixXd L = llt.matrixL();
    Eigen::MatrixXd W = L.triangularView<Eigen::Lower>().solve(dX[i]);
    W = L.triangularView<Eigen::Lower>().solve(W.transpose()).transpose();
    W = 0.5 * (W + W.transpose()).eval();
    double lmin = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(W, Eigen::EigenvaluesOnly)
                      .eigenvalues()
                      .minCoeff();
    if (lmin < 0) step = std::min(step, -1.0 / lmin);
  }
  return step;
}

double sparse_inner(const SparseSym& a, const Blocks& G) {
  double s = 0;
  for (const auto& e : a.entries) {
    const auto& g = G[e.block];
    s += e.v * (e.r == e.c ? g(e.r, e.r) : g(e.r, e.c) + g(e.c, e.r));
  }
  return s;
}

}  // namespace

double inner(const Blocks& a, const Blocks& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i].array() * b[i].array()).sum();
  return s;
}

Eigen::VectorXd constraint_map(const Problem& p, const Blocks& X) {
  Eigen::VectorXd out(p.A.size());
  for (std::size_t i = 0; i < p.A.size(); ++i) out[i] = sparse_inner(p.A[i], X);
  return out;
}

Blocks adjoint(const Problem& p, const Eigen::VectorXd& y) {
  Blocks out = zeros(p.block_sizes);
  for (std::size_t i = 0; i < p.A.size(); ++i)
    for (const auto& e : p.A[i].entries) {
      out[e.block](e.r, e.c) += y[i] * e.v;
      if (e.r != e.c) out[e.block](e.c, e.r) += y[i] * e.v;
    }
  return out;
}

double min_eigenvalue(const Blocks& X) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& b : X)
    if (b.rows() > 0)
      m = std::min(m, Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(b, Eigen::EigenvaluesOnly)
                          .eigenvalues()
                          .minCoeff());
  return m;
}

Solution solve(const Problem& p, int max_iterations, double tol, std::ostream* trace) {
  const std::size_t m = p.A.size();
  int n = 0;
  for (int s : p.block_sizes) n += s;

  double normC = frobenius(p.C), normb = p.b.norm(), normA = 0;
  for (const auto& a : p.A) {
    double s = 0;
    for (const auto& e : a.entries) s += (e.r == e.c ? 1 : 2) * e.v * e.v;
    normA = std::max(normA, std::sqrt(s));
  }
  double xs = std::sqrt(static_cast<double>(n)), zs = xs;
  for (std::size_t i = 0; i < m; ++i) xs = std::max(xs, (1 + std::abs(p.b[i])) / (1 + normA));
  zs = std::max({zs, normC, normA});

  Solution s;
  s.X = identity(p.block_sizes, xs);
  s.Z = identity(p.block_sizes, zs);
  s.y = Eigen::VectorXd::Zero(m);

  for (int it = 0;; ++it) {
    Eigen::VectorXd rp = p.b - constraint_map(p, s.X);
    Blocks Rd = minus(minus(p.C, s.Z), adjoint(p, s.y));
    double mu = inner(s.X, s.Z) / n;
    s.primal_objective = inner(p.C, s.X);
    s.dual_objective = p.b.dot(s.y);
    s.primal_infeasibility = rp.norm() / (1 + normb);
    s.dual_infeasibility = frobenius(Rd) / (1 + normC);
    s.gap = std::abs(s.primal_objective - s.dual_objective) /
            (1 + std::abs(s.primal_objective) + std::abs(s.dual_objective));
    s.iterations = it;
    if (trace)
      *trace << "iter " << it << " pobj " << s.primal_objective << " dobj " << s.dual_objective
             << " pinf " << s.primal_infeasibility << " dinf " << s.dual_infeasibility << " gap "
             << s.gap << " mu " << mu << "\n";
    if (std::max({s.primal_infeasibility, s.dual_infeasibility, s.gap}) < tol) {
      s.converged = true;
      return s;
    }
    if (it >= max_iterations) return s;

    Blocks Zinv(s.Z.size());
    for (std::size_t k = 0; k < s.Z.size(); ++k)
      Zinv[k] = s.Z[k].llt().solve(Eigen::MatrixXd::Identity(s.Z[k].rows(), s.Z[k].cols()));

    // Schur complement M_ij = <A_i, X A_j Z^-1>.
    Eigen::MatrixXd M(m, m);
    for (std::size_t j = 0; j < m; ++j) {
      Blocks G = zeros(p.block_sizes);
      for (const auto& e : p.A[j].entries) {
        const auto& X = s.X[e.block];
        const auto& Zi = Zinv[e.block];
        G[e.block] += e.v * X.col(e.r) * Zi.row(e.c);
        if (e.r != e.c) G[e.block] += e.v * X.col(e.c) * Zi.row(e.r);
      }
      for (std::size_t i = 0; i < m; ++i) M(i, j) = sparse_inner(p.A[i], G);
    }
    M = 0.5 * (M + M.transpose()).eval();
    Eigen::LDLT<Eigen::MatrixXd> schur(M);

    Blocks XRdZi = product(product(s.X, Rd), Zinv);
    auto direction = [&](const Blocks& Rc, Blocks& dX, Eigen::VectorXd& dy, Blocks& dZ) {
      dy = schur.solve(rp - constraint_map(p, minus(Rc, XRdZi)));
      dZ = minus(Rd, adjoint(p, dy));
      dX = minus(Rc, product(product(s.X, dZ), Zinv));
      symmetrize(dX);
    };

    Blocks dXa, dZa, dX, dZ;
    Eigen::VectorXd dya, dy;
    Blocks Rc(s.X.size());
    for (std::size_t k = 0; k < s.X.size(); ++k) Rc[k] = -s.X[k];
    direction(Rc, dXa, dya, dZa);
    double ap = std::min(1.0, max_step(s.X, dXa)), ad = std::min(1.0, max_step(s.Z, dZa));
    Blocks Xa = s.X, Za = s.Z;
    for (std::size_t k = 0; k < Xa.size(); ++k) {
      Xa[k] += ap * dXa[k];
      Za[k] += ad * dZa[k];
    }
    double mu_aff = inner(Xa, Za) / n;
    double sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 0.0, 1.0);

    Blocks corr = product(product(dXa, dZa), Zinv);
    for (std::size_t k = 0; k < Rc.size(); ++k)
      Rc[k] = sigma * mu * Zinv[k] - s.X[k] - corr[k];
    direction(Rc, dX, dy, dZ);

    const double gamma = 0.95;
    ap = std::min(1.0, gamma * max_step(s.X, dX));
    ad = std::min(1.0, gamma * max_step(s.Z, dZ));
    for (std::size_t k = 0; k < s.X.size(); ++k) {
      s.X[k] += ap * dX[k];
      s.Z[k] += ad * dZ[k];
    }
    s.y += ad * dy;
    symmetrize(s.X);
    symmetrize(s.Z);
  }
}

}  // namespace stubborn::sdp

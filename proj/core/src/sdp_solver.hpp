#pragma once

#include <Eigen/Dense>

#include <iosfwd>
#include <vector>

namespace stubborn::sdp {

using Blocks = std::vector<Eigen::MatrixXd>;

// Symmetric matrix with entries (r, c) and (c, r) equal to v; r <= c.
struct SparseSym {
  struct Entry {
    int block, r, c;
    double v;
  };
  std::vector<Entry> entries;
};

// min <C, X> s.t. <A_i, X> = b_i, X psd; dual max b'y s.t. sum y_i A_i + Z = C, Z psd.
struct Problem {
  std::vector<int> block_sizes;
  Blocks C;
  std::vector<SparseSym> A;
  Eigen::VectorXd b;
};

struct Solution {
  Blocks X, Z;
  Eigen::VectorXd y;
  double primal_objective = 0, dual_objective = 0;
  double primal_infeasibility = 0, dual_infeasibility = 0, gap = 0;
  int iterations = 0;
  bool converged = false;
};

double inner(const Blocks& a, const Blocks& b);
Eigen::VectorXd constraint_map(const Problem& p, const Blocks& X);  // A(X)
Blocks adjoint(const Problem& p, const Eigen::VectorXd& y);  // sum y_i A_i
double min_eigenvalue(const Blocks& X);

// Infeasible-start primal-dual path following, HKM direction with Mehrotra
// predictor-corrector.
Solution solve(const Problem& p, int max_iterations, double tol, std::ostream* trace);

}  // namespace stubborn::sdp

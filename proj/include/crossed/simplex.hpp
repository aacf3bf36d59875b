#ifndef CROSSED_SIMPLEX_HPP_
#define CROSSED_SIMPLEX_HPP_

#include <vector>

#include <Eigen/Dense>

namespace crossed::lp {

  // minimize c.x subject to A x <= b, with x_j >= 0 unless free_vars[j].
  struct Problem {
    Eigen::VectorXd   c;
    Eigen::MatrixXd   A;
    Eigen::VectorXd   b;
    std::vector<bool> free_vars;
  };

  enum class Status { optimal, infeasible, unbounded };

  struct Solution {
    Status          status = Status::infeasible;
    double          value  = 0.0;
    Eigen::VectorXd x;
  };

  // Dense two-phase tableau simplex with Bland's rule.
  Solution solve(Problem const& problem);

}  // namespace crossed::lp

#endif  // CROSSED_SIMPLEX_HPP_

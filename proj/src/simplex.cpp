#include "crossed/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace crossed::lp {

  namespace {

    constexpr double kCostTol      = 1e-9;
    constexpr double kPivotTol     = 1e-9;
    constexpr double kRatioTol     = 1e-12;
    constexpr double kUnboundedTol = 1e-6;

    // Tableau in canonical form: rows 0..m-1 are constraints with the
    // right-hand side in the last column; `basis[i]` is the basic column of
    // row i.
    struct Tableau {
      Eigen::MatrixXd  T;
      std::vector<int> basis;

      int rows() const {
        return static_cast<int>(T.rows());
      }
      int rhs() const {
        return static_cast<int>(T.cols()) - 1;
      }

      void pivot(int r, int col) {
        T.row(r) /= T(r, col);
        for (int i = 0; i < rows(); ++i) {
          if (i != r && T(i, col) != 0.0) {
            T.row(i) -= T(i, col) * T.row(r);
          }
        }
        basis[r] = col;
      }

      // Minimizes cost.x over the columns with index < n_cols. Dantzig
      // pricing, switching to Bland's rule after an iteration budget. Returns
      // false when unbounded.
      bool optimize(Eigen::VectorXd const& cost, int n_cols) {
        long const budget = 50L * (rows() + n_cols);
        for (long iter = 0;; ++iter) {
          bool const bland = iter > budget;
          Eigen::VectorXd red(n_cols);
          for (int j = 0; j < n_cols; ++j) {
            red(j) = cost(j);
          }
          for (int i = 0; i < rows(); ++i) {
            double cb = cost(basis[i]);
            if (cb != 0.0) {
              red -= cb * T.row(i).head(n_cols).transpose();
            }
          }
          std::vector<int> candidates;
          for (int j = 0; j < n_cols; ++j) {
            if (red(j) < -kCostTol) {
              candidates.push_back(j);
            }
          }
          if (!bland) {
            std::sort(candidates.begin(), candidates.end(),
                      [&](int a, int b) { return red(a) < red(b); });
          }
          int enter = -1;
          int leave = -1;
          for (int j : candidates) {
            leave = ratio_test(j, bland);
            if (leave >= 0) {
              enter = j;
              break;
            }
            if (red(j) < -kUnboundedTol) {
              return false;
            }
          }
          if (enter < 0) {
            return true;
          }
          pivot(leave, enter);
        }
      }

      // Minimum ratio row; among near ties the largest pivot, or the
      // smallest basic index under Bland's rule.
      int ratio_test(int col, bool bland) const {
        int    leave = -1;
        double best  = std::numeric_limits<double>::infinity();
        for (int i = 0; i < rows(); ++i) {
          if (T(i, col) > kPivotTol) {
            double ratio = std::max(0.0, T(i, rhs())) / T(i, col);
            if (ratio < best - kRatioTol) {
              best  = ratio;
              leave = i;
            } else if (ratio <= best + kRatioTol
                       && (bland ? basis[i] < basis[leave] : T(i, col) > T(leave, col))) {
              best  = std::min(best, ratio);
              leave = i;
            }
          }
        }
        return leave;
      }
    };

  }  // namespace

  Solution solve(Problem const& problem) {
    int const m       = static_cast<int>(problem.A.rows());
    int const n_orig  = static_cast<int>(problem.A.cols());

    // Column layout: structural (free variables split into +/-), slacks,
    // artificials.
    std::vector<int> plus(n_orig), minus(n_orig, -1);
    int              n = 0;
    for (int j = 0; j < n_orig; ++j) {
      plus[j] = n++;
      if (!problem.free_vars.empty() && problem.free_vars[j]) {
        minus[j] = n++;
      }
    }
    int const slack0 = n;
    n += m;
    std::vector<int> needs_art;
    for (int i = 0; i < m; ++i) {
      if (problem.b(i) < 0) {
        needs_art.push_back(i);
      }
    }
    int const art0   = n;
    int const n_cols = n + static_cast<int>(needs_art.size());

    Tableau tab;
    tab.T = Eigen::MatrixXd::Zero(m, n_cols + 1);
    tab.basis.assign(m, -1);
    for (int i = 0; i < m; ++i) {
      double sign = problem.b(i) < 0 ? -1.0 : 1.0;
      for (int j = 0; j < n_orig; ++j) {
        tab.T(i, plus[j]) = sign * problem.A(i, j);
        if (minus[j] >= 0) {
          tab.T(i, minus[j]) = -sign * problem.A(i, j);
        }
      }
      tab.T(i, slack0 + i) = sign;
      tab.T(i, n_cols)     = sign * problem.b(i);
      if (sign > 0) {
        tab.basis[i] = slack0 + i;
      }
    }
    for (std::size_t k = 0; k < needs_art.size(); ++k) {
      int i                          = needs_art[k];
      tab.T(i, art0 + static_cast<int>(k)) = 1.0;
      tab.basis[i]                   = art0 + static_cast<int>(k);
    }

    Solution result;
    if (!needs_art.empty()) {
      Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(n_cols);
      phase1.tail(needs_art.size()).setOnes();
      tab.optimize(phase1, n_cols);
      double infeas = 0.0;
      for (int i = 0; i < m; ++i) {
        if (tab.basis[i] >= art0) {
          infeas += tab.T(i, n_cols);
        }
      }
      if (infeas > 1e-9) {
        result.status = Status::infeasible;
        return result;
      }
      // Drive remaining (zero-valued) artificials out of the basis.
      for (int i = 0; i < m; ++i) {
        if (tab.basis[i] >= art0) {
          for (int j = 0; j < art0; ++j) {
            if (std::abs(tab.T(i, j)) > 1e-9) {
              tab.pivot(i, j);
              break;
            }
          }
        }
      }
    }

    Eigen::VectorXd cost = Eigen::VectorXd::Zero(n_cols);
    for (int j = 0; j < n_orig; ++j) {
      cost(plus[j]) = problem.c(j);
      if (minus[j] >= 0) {
        cost(minus[j]) = -problem.c(j);
      }
    }
    if (!tab.optimize(cost, art0)) {
      result.status = Status::unbounded;
      return result;
    }

    Eigen::VectorXd values = Eigen::VectorXd::Zero(n_cols);
    for (int i = 0; i < m; ++i) {
      values(tab.basis[i]) = tab.T(i, n_cols);
    }
    result.x.resize(n_orig);
    for (int j = 0; j < n_orig; ++j) {
      result.x(j) = values(plus[j]) - (minus[j] >= 0 ? values(minus[j]) : 0.0);
    }
    result.value  = problem.c.dot(result.x);
    result.status = Status::optimal;
    return result;
  }

}  // namespace crossed::lp

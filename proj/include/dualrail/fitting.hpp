// fitting.hpp
// Small least-squares front end over Eigen's Levenberg-Marquardt, plus the
// exponential-decay helpers shared by the chevron and Pauli-decay fits.

#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace dualrail {

// Residual model: fills r (length n_residuals) given parameters p.
using ResidualFn = std::function<void(const Eigen::VectorXd& p, Eigen::VectorXd& r)>;

struct FitResult {
  Eigen::VectorXd params;
  Eigen::VectorXd std_errors; // from residual variance * (J^T J)^-1
  double rss = 0.0;           // residual sum of squares at the solution
  int iterations = 0;
  bool converged = false;

  double ci95_low(int i) const { return params(i) - 1.96 * std_errors(i); }
  double ci95_high(int i) const { return params(i) + 1.96 * std_errors(i); }
};

// Levenberg-Marquardt with a numerically differentiated Jacobian. Throws
// std::runtime_error when the solver fails outright (n_residuals < n_params,
// or an improper input status).
FitResult fit_least_squares(const ResidualFn& f, const Eigen::VectorXd& init,
                            int n_residuals);

// Fit y = A exp(-rate * t). Initializes from a log-linear regression.
FitResult fit_exponential(const std::vector<double>& t, const std::vector<double>& y);

} // namespace dualrail

#include "dualrail/fitting.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>

namespace dualrail {

namespace {

struct Functor {
  using Scalar = double;
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

  const ResidualFn* fn;
  int n_params;
  int n_residuals;

  int operator()(const Eigen::VectorXd& p, Eigen::VectorXd& r) const {
    (*fn)(p, r);
    return 0;
  }
  int inputs() const { return n_params; }
  int values() const { return n_residuals; }
};

} // namespace

FitResult fit_least_squares(const ResidualFn& f, const Eigen::VectorXd& init,
                            int n_residuals) {
  const int n_params = int(init.size());
  if (n_residuals < n_params)
    throw std::runtime_error("fit_least_squares: more parameters than residuals");

  Functor functor{&f, n_params, n_residuals};
  Eigen::NumericalDiff<Functor> nd(functor);
  Eigen::LevenbergMarquardt<Eigen::NumericalDiff<Functor>> lm(nd);
  lm.parameters.maxfev = 2000;

  Eigen::VectorXd p = init;
  const auto status = lm.minimize(p);
  if (status == Eigen::LevenbergMarquardtSpace::ImproperInputParameters)
    throw std::runtime_error("fit_least_squares: improper input parameters");

  FitResult out;
  out.params = p;
  out.iterations = int(lm.iter);
  out.converged = status != Eigen::LevenbergMarquardtSpace::TooManyFunctionEvaluation;

  Eigen::VectorXd r(n_residuals);
  f(p, r);
  out.rss = r.squaredNorm();

  // Standard errors from the numerical Jacobian at the solution.
  Eigen::MatrixXd jac(n_residuals, n_params);
  nd.df(p, jac);
  const int dof = n_residuals - n_params;
  const double variance = dof > 0 ? out.rss / double(dof) : 0.0;
  Eigen::MatrixXd jtj = jac.transpose() * jac;
  Eigen::MatrixXd cov =
      variance * jtj.completeOrthogonalDecomposition().pseudoInverse();
  out.std_errors.resize(n_params);
  for (int i = 0; i < n_params; ++i)
    out.std_errors(i) = std::sqrt(std::max(0.0, cov(i, i)));
  return out;
}

FitResult fit_exponential(const std::vector<double>& t, const std::vector<double>& y) {
  if (t.size() != y.size() || t.size() < 3)
    throw std::runtime_error("fit_exponential: need >= 3 samples");
  const int n = int(t.size());

  // Log-linear initialization over the positive samples.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (int i = 0; i < n; ++i) {
    if (y[i] > 1e-12) {
      const double ly = std::log(y[i]);
      sx += t[i];
      sy += ly;
      sxx += t[i] * t[i];
      sxy += t[i] * ly;
      ++m;
    }
  }
  double a0 = 1.0, r0 = 0.0;
  if (m >= 2 && (m * sxx - sx * sx) > 1e-30) {
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    const double icept = (sy - slope * sx) / m;
    a0 = std::exp(icept);
    r0 = -slope;
  } else if (!y.empty()) {
    a0 = y.front();
  }

  ResidualFn f = [&t, &y, n](const Eigen::VectorXd& p, Eigen::VectorXd& r) {
    for (int i = 0; i < n; ++i)
      r(i) = p(0) * std::exp(-p(1) * t[i]) - y[i];
  };
  Eigen::VectorXd init(2);
  init << a0, r0;
  return fit_least_squares(f, init, n);
}

} // namespace dualrail

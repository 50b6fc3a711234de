#pragma once

#include <Eigen/Dense>

namespace attnscope::detail {

struct OlsFit {
  Eigen::VectorXd beta;
  Eigen::VectorXd resid;
  double ssr = 0.0;
  Eigen::VectorXd std_err;  // empty unless requested
};

/// Least squares through a column-pivoted QR on an equilibrated design.
/// Throws Errc::SingularRegression when the design is rank deficient and
/// Errc::TooShort when there are no residual degrees of freedom.
OlsFit ols(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, bool std_errors = false);

/// Gaussian log-likelihood at the MLE variance, as reported by common
/// regression packages.
double ols_loglik(double ssr, Eigen::Index n);

}  // namespace attnscope::detail

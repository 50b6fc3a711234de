#include "ols.hpp"

#include <cmath>
#include <numbers>

#include "attnscope/error.hpp"

namespace attnscope::detail {

OlsFit ols(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, bool std_errors) {
  const Eigen::Index n = x.rows(), k = x.cols();
  if (n <= k) throw Error(Errc::TooShort, "regression has no residual degrees of freedom");

  // Unit-norm columns so the rank threshold does not depend on units.
  Eigen::VectorXd scale = x.colwise().norm().transpose();
  for (Eigen::Index j = 0; j < k; ++j) {
    if (!(scale(j) > 0.0) || !std::isfinite(scale(j))) {
      throw Error(Errc::SingularRegression, "zero or non-finite regressor column");
    }
  }
  const Eigen::MatrixXd xs = x * scale.cwiseInverse().asDiagonal();
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(xs);
  qr.setThreshold(1e-10);
  if (qr.rank() < k) throw Error(Errc::SingularRegression, "collinear regressors");

  OlsFit fit;
  fit.beta = qr.solve(y).cwiseQuotient(scale);
  fit.resid = y - x * fit.beta;
  fit.ssr = fit.resid.squaredNorm();
  if (std_errors) {
    const Eigen::MatrixXd r = qr.matrixR().topLeftCorner(k, k).triangularView<Eigen::Upper>();
    const Eigen::MatrixXd r_inv =
        r.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(k, k));
    // (Xs'Xs)^-1 = P R^-1 R^-T P'
    const Eigen::MatrixXd perm = qr.colsPermutation();
    const Eigen::MatrixXd cov_s = perm * (r_inv * r_inv.transpose()) * perm.transpose();
    const double sigma2 = fit.ssr / static_cast<double>(n - k);
    fit.std_err = (sigma2 * cov_s.diagonal()).cwiseSqrt().cwiseQuotient(scale);
  }
  return fit;
}

double ols_loglik(double ssr, Eigen::Index n) {
  const double nn = static_cast<double>(n);
  return -0.5 * nn * (std::log(2.0 * std::numbers::pi) + std::log(ssr / nn) + 1.0);
}

}  // namespace attnscope::detail

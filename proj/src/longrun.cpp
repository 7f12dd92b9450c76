#include "dyntaylor/longrun.hpp"

#include <cmath>
#include <stdexcept>

namespace dyntaylor {

std::int64_t default_bandwidth(std::int64_t n) {
  if (n < 1) {
    throw std::domain_error("default_bandwidth: n must be >= 1");
  }
  const auto b = static_cast<std::int64_t>(
      std::floor(1.3 * std::cbrt(static_cast<double>(n))));
  return std::min(std::max<std::int64_t>(b, 0), n - 1);
}

double sample_mean(const Eigen::VectorXd& values) {
  if (values.size() < 1) {
    throw std::domain_error("sample_mean: empty input");
  }
  return values.mean();
}

double bartlett_lrv(const Eigen::VectorXd& values, std::int64_t bandwidth) {
  const std::int64_t n = values.size();
  if (n < 2) {
    throw std::domain_error("bartlett_lrv: needs at least two values");
  }
  if (bandwidth < 0 || bandwidth >= n) {
    throw std::domain_error("bartlett_lrv: bandwidth must lie in [0, n)");
  }
  const Eigen::VectorXd centred = values.array() - values.mean();
  const double inv_n = 1.0 / static_cast<double>(n);
  double acc = centred.squaredNorm() * inv_n;  // gamma_0
  for (std::int64_t j = 1; j <= bandwidth; ++j) {
    const double gj =
        centred.head(n - j).dot(centred.tail(n - j)) * inv_n;
    const double w = 1.0 - static_cast<double>(j) /
                               static_cast<double>(bandwidth + 1);
    acc += 2.0 * w * gj;
  }
  // Bartlett weights with denominator n keep the estimate nonnegative;
  // clamp only the residual floating-point dust.
  return acc < 0.0 ? 0.0 : acc;
}

double lrv_of_squares(const Eigen::VectorXd& values, double m_hat,
                      std::int64_t bandwidth) {
  if (values.size() < 2) {
    throw std::domain_error("lrv_of_squares: needs at least two values");
  }
  const Eigen::VectorXd squares = (values.array() - m_hat).square();
  return bartlett_lrv(squares, bandwidth);
}

double analytic_gamma_variance(const ProcessSpec& spec, std::int64_t p) {
  if (p < 1) {
    throw std::domain_error("analytic_gamma_variance: p must be >= 1");
  }
  double acc = autocovariance(spec, 0);
  for (std::int64_t j = 1; j < p; ++j) {
    const double w =
        1.0 - static_cast<double>(j) / static_cast<double>(p);
    acc += 2.0 * w * autocovariance(spec, j);
  }
  return acc;
}

LongRunVarianceEstimate estimate_lrv(const Eigen::VectorXd& values,
                                     std::int64_t bandwidth,
                                     bool with_squares) {
  LongRunVarianceEstimate est;
  est.n = values.size();
  est.bandwidth = bandwidth < 0 ? default_bandwidth(est.n) : bandwidth;
  est.m_hat = sample_mean(values);
  est.sigma2_hat = bartlett_lrv(values, est.bandwidth);
  if (with_squares) {
    est.sigma0_sq_hat = lrv_of_squares(values, est.m_hat, est.bandwidth);
  }
  return est;
}

}  // namespace dyntaylor

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>

#include "dyntaylor/process.hpp"

namespace dyntaylor {

struct LongRunVarianceEstimate {
  double m_hat = 0.0;
  double sigma2_hat = 0.0;
  std::optional<double> sigma0_sq_hat;  // long-run variance of (x - m_hat)^2
  std::int64_t bandwidth = 0;
  std::string kernel = "BARTLETT";
  std::int64_t n = 0;
};

// Default lag-window bandwidth floor(1.3 * n^{1/3}).
std::int64_t default_bandwidth(std::int64_t n);

double sample_mean(const Eigen::VectorXd& values);

// Bartlett (Newey-West) long-run variance estimate
//   gamma_0 + 2 * sum_{j=1}^{b} (1 - j/(b+1)) gamma_j,
// autocovariances centred at the sample mean with denominator n (keeps the
// estimate nonnegative). bandwidth = 0 reduces to the marginal variance.
double bartlett_lrv(const Eigen::VectorXd& values, std::int64_t bandwidth);

// Bartlett estimator applied to the derived series (x_i - m_hat)^2;
// estimates the long-run variance of the squared deviations.
double lrv_of_squares(const Eigen::VectorXd& values, double m_hat,
                      std::int64_t bandwidth);

// Exact variance of the normalised block sum over p observations,
//   E Gamma_p^2 = gamma_0 + 2 * sum_{j=1}^{p-1} (1 - j/p) gamma_j,
// from the spec's closed-form autocovariances.
double analytic_gamma_variance(const ProcessSpec& spec, std::int64_t p);

// Convenience wrapper: m_hat, Bartlett sigma2_hat and (optionally) the
// squared-series estimate, with bandwidth < 0 meaning the default rule.
LongRunVarianceEstimate estimate_lrv(const Eigen::VectorXd& values,
                                     std::int64_t bandwidth,
                                     bool with_squares);

}  // namespace dyntaylor

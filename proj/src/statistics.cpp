#include "dyntaylor/statistics.hpp"

#include <cmath>
#include <stdexcept>

namespace dyntaylor {

namespace {
void require_positive(const Eigen::VectorXd& values, const char* where) {
  if (!(values.array() > 0.0).all()) {
    throw std::domain_error(std::string(where) +
                            ": values must be strictly positive");
  }
}
}  // namespace

double pow_real(double y, double beta) {
  if (!(y > 0.0)) {
    throw std::domain_error("pow_real: base must be > 0");
  }
  const double r = std::rint(beta);
  if (beta == r && std::fabs(r) <= 64.0) {
    double acc = 1.0;
    const int e = static_cast<int>(std::fabs(r));
    for (int i = 0; i < e; ++i) acc *= y;
    return r < 0.0 ? 1.0 / acc : acc;
  }
  return std::exp(beta * std::log(y));
}

double taylor_T(const Eigen::VectorXd& values, double beta) {
  if (values.size() < 2) {
    throw std::domain_error("taylor_T: needs at least two values");
  }
  require_positive(values, "taylor_T");
  return taylor_T(values, beta, values.mean());
}

double taylor_T(const Eigen::VectorXd& values, double beta, double mean_ref) {
  const auto k = values.size();
  if (k < 2) {
    throw std::domain_error("taylor_T: needs at least two values");
  }
  if (!(mean_ref > 0.0)) {
    throw std::domain_error("taylor_T: mean reference must be > 0");
  }
  // Two-pass form: with level >> dispersion the textbook sum-of-squares
  // route cancels catastrophically.
  const double w =
      (values.array() - mean_ref).square().sum() / static_cast<double>(k - 1);
  return w / pow_real(mean_ref, beta);
}

double selfnorm_S(const Eigen::VectorXd& values, double beta) {
  if (values.size() < 1) {
    throw std::domain_error("selfnorm_S: needs at least one value");
  }
  require_positive(values, "selfnorm_S");
  return selfnorm_S(values, beta, values.mean());
}

double selfnorm_S(const Eigen::VectorXd& values, double beta,
                  double mean_ref) {
  const auto k = values.size();
  if (k < 1) {
    throw std::domain_error("selfnorm_S: needs at least one value");
  }
  if (!(mean_ref > 0.0)) {
    throw std::domain_error("selfnorm_S: mean reference must be > 0");
  }
  return (values.squaredNorm() / static_cast<double>(k)) /
         pow_real(mean_ref, beta);
}

TaylorStatistics dynamic_taylor(const Eigen::VectorXd& series,
                                const BlockPlan& plan, double beta) {
  require_positive(series, "dynamic_taylor");
  const BlockMeans bm = block_means(series, plan);
  if (plan.k < 2) {
    throw std::domain_error("dynamic_taylor: needs at least two blocks");
  }
  TaylorStatistics stats;
  // The reference mean is the sample mean of the used prefix of length p*k
  // (identical to the mean of the block means up to rounding).
  stats.mean_used = series.head(bm.used_length).mean();
  stats.T = taylor_T(bm.means, beta, stats.mean_used);
  stats.S = selfnorm_S(bm.means, beta, stats.mean_used);
  stats.beta = beta;
  stats.k = plan.k;
  stats.p = plan.p;
  stats.mode = plan.p == 1 ? TaylorMode::Static : TaylorMode::Dynamic;
  return stats;
}

TaylorStatistics dynamic_taylor(const Trajectory& traj, const BlockPlan& plan,
                                double beta) {
  return dynamic_taylor(traj.values, plan, beta);
}

double scaled_statistic(const TaylorStatistics& stats, double m_ref) {
  if (!(m_ref > 0.0)) {
    throw std::domain_error("scaled_statistic: m_ref must be > 0");
  }
  return std::sqrt(static_cast<double>(stats.k)) *
         (stats.T - pow_real(m_ref, 2.0 - stats.beta));
}

double recentered_taylor(const TaylorStatistics& stats, double m_ref,
                         double var_ref) {
  if (!(m_ref > 0.0)) {
    throw std::domain_error("recentered_taylor: m_ref must be > 0");
  }
  if (var_ref < 0.0) {
    throw std::domain_error("recentered_taylor: var_ref must be >= 0");
  }
  if (stats.k < 2) {
    throw std::domain_error("recentered_taylor: needs k >= 2");
  }
  const double root_k = std::sqrt(static_cast<double>(stats.k));
  return pow_real(m_ref, 2.0 - stats.beta) +
         static_cast<double>(stats.p) * stats.T -
         (1.0 - 1.0 / root_k) * var_ref / pow_real(m_ref, stats.beta);
}

}  // namespace dyntaylor

#pragma once

#include <Eigen/Dense>

#include <cstdint>

#include "dyntaylor/blocks.hpp"
#include "dyntaylor/process.hpp"

namespace dyntaylor {

enum class TaylorMode { Static, Dynamic };

struct TaylorStatistics {
  double T = 0.0;     // variance-over-mean^beta ratio
  double S = 0.0;     // self-normalised mean-of-squares ratio
  double beta = 2.0;
  std::int64_t k = 0;  // effective sample / block count
  std::int64_t p = 1;  // block length (1 in static mode)
  double mean_used = 0.0;
  TaylorMode mode = TaylorMode::Static;
};

// y^beta with y > 0; integer exponents by repeated multiplication,
// otherwise exp(beta * ln y).
double pow_real(double y, double beta);

// T = [sum (y_i - ybar)^2 / (k-1)] / ybar^beta, two-pass variance.
// Requires k >= 2 and strictly positive values.
double taylor_T(const Eigen::VectorXd& values, double beta);

// S = [sum y_i^2 / k] / ybar^beta. Requires k >= 1 and positive values.
double selfnorm_S(const Eigen::VectorXd& values, double beta);

// Variants with an explicit centering / denominator reference (the
// used-prefix mean in block mode).
double taylor_T(const Eigen::VectorXd& values, double beta, double mean_ref);
double selfnorm_S(const Eigen::VectorXd& values, double beta, double mean_ref);

// Block-mean statistics: block means per plan, reference mean taken over the
// used prefix of length p*k. p = 1 reduces exactly to the static statistics.
TaylorStatistics dynamic_taylor(const Eigen::VectorXd& series,
                                const BlockPlan& plan, double beta);
TaylorStatistics dynamic_taylor(const Trajectory& traj, const BlockPlan& plan,
                                double beta);

// sqrt(k) * (T - m_ref^{2 - beta}).
double scaled_statistic(const TaylorStatistics& stats, double m_ref);

// Recentred block statistic
//
//   m_ref^{2-beta} + p*T - (1 - 1/sqrt(k)) * var_ref / m_ref^beta.
//
// p*T estimates var_ref / m_ref^beta, so the probability limit is
// m_ref^{2-beta} while the 1/sqrt(k)-order location term
// var_ref / (sqrt(k) m_ref^beta) is kept. This is the object the limit
// theorems, the goodness-of-fit interval and the exponent estimator act on;
// var_ref is the long-run variance (estimated or oracle).
double recentered_taylor(const TaylorStatistics& stats, double m_ref,
                         double var_ref);

}  // namespace dyntaylor

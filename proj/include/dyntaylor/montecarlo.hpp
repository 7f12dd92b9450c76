#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dyntaylor/process.hpp"
#include "dyntaylor/statistics.hpp"

namespace dyntaylor {

struct MCConfig {
  ProcessSpec process;
  std::int64_t n = 0;
  double kappa = 1.0;
  double zeta = 0.5;
  double beta = 2.0;
  double eta = 0.05;
  std::int64_t replicates = 0;
  std::uint64_t base_seed = 0;
  TaylorMode mode = TaylorMode::Dynamic;
  std::int64_t bandwidth = -1;  // for the data-driven test leg; -1 = default
  double budget = 2e9;          // cap on n * replicates

  void validate() const;
};

struct MCReport {
  TaylorMode mode = TaylorMode::Dynamic;
  double beta = 2.0;
  double eta = 0.05;
  std::int64_t n = 0;
  std::int64_t p = 0;
  std::int64_t k = 0;
  std::int64_t replicates = 0;
  std::uint64_t base_seed = 0;
  std::string seed_rule = "base_seed + replicate_index";

  // Moments of the scaled statistic sqrt(k) * (That - m^{2-beta}).
  double empirical_mean = 0.0;
  double empirical_var = 0.0;
  double centered_mean = 0.0;  // empirical_mean - target_mean
  double target_mean = 0.0;    // sigma^2 / m^beta
  double target_var = 0.0;     // 2 sigma^4 / m^{2 beta}, or Sigma0^2 / m^{2 beta}
  double ks_distance = 0.0;
  double ci_coverage = 0.0;     // oracle-plug-in interval coverage
  double rejection_rate = 0.0;  // data-driven gof_test rejections
  std::int64_t bandwidth = 0;

  double oracle_mean = 0.0;
  double oracle_gamma0 = 0.0;
  double oracle_sigma2 = 0.0;
  std::optional<double> oracle_sigma0_sq;

  // Wall clock; logged to stderr by the CLI, kept out of the JSON payload so
  // reruns stay byte-identical.
  double runtime_ms = 0.0;
};

// Simulates `replicates` independent trajectories (seed = base_seed + index),
// computes the oracle-recentred scaled statistic per replicate and compares
// the pool against the Gaussian target: moments, KS distance, oracle-interval
// coverage and the data-driven rejection rate. Deterministic in base_seed and
// independent of the thread count. z_out, when non-null, receives the pooled
// scaled statistics in replicate order.
MCReport run_clt_experiment(const MCConfig& config, int threads = 1,
                            std::vector<double>* z_out = nullptr);

// Two-sided Kolmogorov-Smirnov distance between the empirical CDF of the
// samples and N(mean, variance).
double ks_statistic(std::vector<double> samples, double mean, double variance);
double ks_statistic(const Eigen::VectorXd& samples, double mean,
                    double variance);

struct CumulantCheck {
  std::int64_t lag_i = 0;
  std::int64_t lag_j = 0;
  std::int64_t lag_k = 0;
  double lhs = 0.0;           // Cov-hat(Xc_0 Xc_i, Xc_j Xc_k)
  double cov_products = 0.0;  // gamma_j gamma_{k-i} + gamma_k gamma_{j-i}
  double kappa_hat = 0.0;     // lhs - cov_products
  double kappa_se = 0.0;      // batch-means standard error
  int batches = 0;
};

// Empirical fourth-order cumulant kappa(Xc_0, Xc_i, Xc_j, Xc_k) of the
// mean-centred series via the symmetric product expansion; the standard error
// comes from contiguous equal-length batches. Requires max lag < n/2.
CumulantCheck cumulant_identity_check(const Eigen::VectorXd& series,
                                      std::int64_t lag_i, std::int64_t lag_j,
                                      std::int64_t lag_k, int batches = 32);

struct BiasRateRow {
  std::int64_t p = 0;
  double gamma_variance = 0.0;  // E Gamma_p^2
  double abs_bias = 0.0;        // |sigma^2 - E Gamma_p^2|
};

struct BiasRateResult {
  std::vector<BiasRateRow> rows;
  double loglog_slope = 0.0;  // OLS slope of ln(bias) on ln(p)
  double sigma2 = 0.0;
};

// Exact finite-block bias table from closed-form autocovariances; the fitted
// log-log slope checks the O(1/p) decay.
BiasRateResult bias_rate_experiment(const ProcessSpec& spec,
                                    const std::vector<std::int64_t>& p_grid);

struct MomentDiagnosticRow {
  std::int64_t p = 0;
  double mean_g4 = 0.0;  // Monte Carlo E |Gamma_p|^4
};

struct MomentDiagnosticResult {
  std::vector<MomentDiagnosticRow> rows;
  double max_min_ratio = 0.0;
};

// Monte Carlo fourth moment of the normalised block sum across block sizes;
// boundedness of the max/min ratio is the diagnostic.
MomentDiagnosticResult moment_boundedness_diagnostic(
    const ProcessSpec& spec, const std::vector<std::int64_t>& p_grid,
    std::uint64_t base_seed, std::int64_t replicates, int threads = 1);

// Runs fn(i) for i in [0, count) on a deterministic static partition across
// `threads` workers; results written by index stay thread-count independent.
void parallel_replicates(std::int64_t count, int threads,
                         const std::function<void(std::int64_t)>& fn);

// requested > 0 passes through; otherwise DYNTAYLOR_THREADS, then hardware
// concurrency, then 1.
int resolve_threads(int requested);

}  // namespace dyntaylor

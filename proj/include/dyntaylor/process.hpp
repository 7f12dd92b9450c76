#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dyntaylor {

enum class ProcessKind { IidLognormal, ShiftedAr1, ShiftedMa, ExpAr1 };

// Declared polynomial decay rate of the dependence coefficients.
// Documentation / validation metadata only; never estimated from data.
struct DecayMeta {
  std::optional<double> alpha_exponent;
  std::optional<double> theta_exponent;
};

// Parametric description of a stationary positive-valued process.
//
//   iid-lognormal(mu, s)            X_t = exp(mu + s Z_t)
//   shifted-ar1(shift, phi, sd)     X_t = shift + A_t,  A_t = phi A_{t-1} + sd Z_t
//   shifted-ma(shift, coeffs, sd)   X_t = shift + sum_i coeffs[i] sd Z_{t-i}
//   exp-ar1(mu, phi, sd)            X_t = exp(mu + A_t), A_t as above
//
// with Z_t iid standard normal. Shifted kinds require the shift to exceed
// six stationary standard deviations so the process stays positive.
struct ProcessSpec {
  ProcessKind kind = ProcessKind::IidLognormal;
  double mu = 0.0;
  double s = 1.0;
  double shift = 0.0;
  double phi = 0.0;
  double noise_sd = 1.0;
  std::vector<double> coeffs;  // MA weights, lag 0 first
  std::optional<DecayMeta> decay_meta;

  // Throws std::invalid_argument when parameters are outside their domain.
  void validate() const;

  // Standard deviation of the stationary marginal.
  double stationary_sd() const;
};

ProcessSpec iid_lognormal(double mu, double s);
ProcessSpec shifted_ar1(double shift, double phi, double noise_sd);
ProcessSpec shifted_ma(double shift, std::vector<double> coeffs,
                       double noise_sd);
ProcessSpec exp_ar1(double mu, double phi, double noise_sd);

struct Trajectory {
  Eigen::VectorXd values;
  ProcessSpec spec;
  std::uint64_t seed = 0;
  std::int64_t burn_in = 0;
};

// Closed-form moments used as test oracles.
struct TheoreticalMoments {
  double mean = 0.0;
  double marginal_variance = 0.0;  // gamma_0
  double longrun_variance = 0.0;   // sigma^2 = sum over all lags of gamma_j
  // Long-run variance of (X - m)^2; present only where a closed form exists
  // (Gaussian kinds via the Isserlis identity, lognormal via raw moments).
  std::optional<double> longrun_variance_of_squares;
  bool autocovariance_closed_form = false;
};

// Warm-up steps discarded before recording: 1000 for the AR recursions
// (initialisation bias below 1e-3 relative for |phi| <= 0.9), 0 otherwise.
std::int64_t burn_in_steps(const ProcessSpec& spec);

// Deterministic in (spec, n, seed); every value is strictly positive or the
// call throws. Rerunning with identical arguments reproduces the exact bytes.
Trajectory simulate(const ProcessSpec& spec, std::int64_t n,
                    std::uint64_t seed);

TheoreticalMoments theoretical_moments(const ProcessSpec& spec);

// Exact gamma_lag for the spec's stationary process, lag >= 0.
double autocovariance(const ProcessSpec& spec, std::int64_t lag);

std::string kind_name(ProcessKind kind);
ProcessKind kind_from_name(const std::string& name);

}  // namespace dyntaylor

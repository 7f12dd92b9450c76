#include "dyntaylor/process.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "dyntaylor/errors.hpp"
#include "dyntaylor/rng.hpp"

namespace dyntaylor {

namespace {
constexpr std::int64_t kArBurnIn = 1000;
constexpr double kShiftMultiple = 6.0;

void check_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string("ProcessSpec: ") + name +
                                " must be finite");
  }
}

// Stationary variance of the Gaussian layer of exp-ar1.
double exp_ar1_layer_variance(const ProcessSpec& spec) {
  return spec.noise_sd * spec.noise_sd / (1.0 - spec.phi * spec.phi);
}

// Lognormal raw moment E X^k for log-mean mu and log-sd s.
double lognormal_raw_moment(double mu, double s, int k) {
  return std::exp(k * mu + 0.5 * k * k * s * s);
}

// Central fourth moment of a lognormal marginal.
double lognormal_central_m4(double mu, double s) {
  const double m1 = lognormal_raw_moment(mu, s, 1);
  const double m2 = lognormal_raw_moment(mu, s, 2);
  const double m3 = lognormal_raw_moment(mu, s, 3);
  const double m4 = lognormal_raw_moment(mu, s, 4);
  return m4 - 4.0 * m3 * m1 + 6.0 * m2 * m1 * m1 - 3.0 * m1 * m1 * m1 * m1;
}
}  // namespace

ProcessSpec iid_lognormal(double mu, double s) {
  ProcessSpec spec;
  spec.kind = ProcessKind::IidLognormal;
  spec.mu = mu;
  spec.s = s;
  spec.validate();
  return spec;
}

ProcessSpec shifted_ar1(double shift, double phi, double noise_sd) {
  ProcessSpec spec;
  spec.kind = ProcessKind::ShiftedAr1;
  spec.shift = shift;
  spec.phi = phi;
  spec.noise_sd = noise_sd;
  spec.validate();
  return spec;
}

ProcessSpec shifted_ma(double shift, std::vector<double> coeffs,
                       double noise_sd) {
  ProcessSpec spec;
  spec.kind = ProcessKind::ShiftedMa;
  spec.shift = shift;
  spec.coeffs = std::move(coeffs);
  spec.noise_sd = noise_sd;
  spec.validate();
  return spec;
}

ProcessSpec exp_ar1(double mu, double phi, double noise_sd) {
  ProcessSpec spec;
  spec.kind = ProcessKind::ExpAr1;
  spec.mu = mu;
  spec.phi = phi;
  spec.noise_sd = noise_sd;
  spec.validate();
  return spec;
}

double ProcessSpec::stationary_sd() const {
  switch (kind) {
    case ProcessKind::IidLognormal: {
      const double m1 = lognormal_raw_moment(mu, s, 1);
      const double m2 = lognormal_raw_moment(mu, s, 2);
      return std::sqrt(m2 - m1 * m1);
    }
    case ProcessKind::ShiftedAr1:
      return noise_sd / std::sqrt(1.0 - phi * phi);
    case ProcessKind::ShiftedMa: {
      double ssq = 0.0;
      for (double c : coeffs) ssq += c * c;
      return noise_sd * std::sqrt(ssq);
    }
    case ProcessKind::ExpAr1: {
      const double g0 = exp_ar1_layer_variance(*this);
      const double m = std::exp(mu + 0.5 * g0);
      return std::sqrt(m * m * (std::exp(g0) - 1.0));
    }
  }
  throw std::logic_error("ProcessSpec: unknown kind");
}

void ProcessSpec::validate() const {
  switch (kind) {
    case ProcessKind::IidLognormal:
      check_finite(mu, "mu");
      check_finite(s, "s");
      if (!(s > 0.0)) {
        throw std::invalid_argument("iid-lognormal: s must be > 0");
      }
      break;
    case ProcessKind::ShiftedAr1:
    case ProcessKind::ExpAr1:
      check_finite(phi, "phi");
      check_finite(noise_sd, "noise_sd");
      if (!(std::fabs(phi) < 1.0)) {
        throw std::invalid_argument("AR kinds require |phi| < 1");
      }
      if (!(noise_sd > 0.0)) {
        throw std::invalid_argument("noise_sd must be > 0");
      }
      if (kind == ProcessKind::ShiftedAr1) {
        check_finite(shift, "shift");
        if (!(shift >= kShiftMultiple * stationary_sd())) {
          throw std::invalid_argument(
              "shifted-ar1: shift must be at least 6 stationary standard "
              "deviations to keep the process positive");
        }
      } else {
        check_finite(mu, "mu");
      }
      break;
    case ProcessKind::ShiftedMa: {
      check_finite(shift, "shift");
      check_finite(noise_sd, "noise_sd");
      if (!(noise_sd > 0.0)) {
        throw std::invalid_argument("noise_sd must be > 0");
      }
      if (coeffs.empty()) {
        throw std::invalid_argument(
            "shifted-ma: coefficient list must be nonempty");
      }
      for (double c : coeffs) check_finite(c, "coeffs");
      if (!(shift >= kShiftMultiple * stationary_sd())) {
        throw std::invalid_argument(
            "shifted-ma: shift must be at least 6 stationary standard "
            "deviations to keep the process positive");
      }
      break;
    }
  }
  if (decay_meta) {
    for (const auto& v : {decay_meta->alpha_exponent,
                          decay_meta->theta_exponent}) {
      if (v && !(*v > 0.0)) {
        throw std::invalid_argument("decay_meta exponents must be > 0");
      }
    }
  }
}

std::int64_t burn_in_steps(const ProcessSpec& spec) {
  switch (spec.kind) {
    case ProcessKind::ShiftedAr1:
    case ProcessKind::ExpAr1:
      return kArBurnIn;
    default:
      return 0;
  }
}

Trajectory simulate(const ProcessSpec& spec, std::int64_t n,
                    std::uint64_t seed) {
  spec.validate();
  if (n < 1) {
    throw std::domain_error("simulate: n must be >= 1");
  }
  Trajectory traj;
  traj.spec = spec;
  traj.seed = seed;
  traj.burn_in = burn_in_steps(spec);
  traj.values.resize(n);

  RandomStream rng(seed);
  switch (spec.kind) {
    case ProcessKind::IidLognormal: {
      for (std::int64_t t = 0; t < n; ++t) {
        traj.values[t] = std::exp(spec.mu + spec.s * rng.gaussian());
      }
      break;
    }
    case ProcessKind::ShiftedAr1: {
      double z = 0.0;
      for (std::int64_t t = 0; t < traj.burn_in; ++t) {
        z = spec.phi * z + spec.noise_sd * rng.gaussian();
      }
      for (std::int64_t t = 0; t < n; ++t) {
        z = spec.phi * z + spec.noise_sd * rng.gaussian();
        traj.values[t] = spec.shift + z;
      }
      break;
    }
    case ProcessKind::ShiftedMa: {
      const std::int64_t L = static_cast<std::int64_t>(spec.coeffs.size());
      // Prehistory innovations give an exact stationary start.
      std::vector<double> eps(static_cast<std::size_t>(L), 0.0);
      for (std::int64_t i = 0; i + 1 < L; ++i) {
        eps[static_cast<std::size_t>(i)] = spec.noise_sd * rng.gaussian();
      }
      std::int64_t head = L - 1;  // slot of the newest innovation
      for (std::int64_t t = 0; t < n; ++t) {
        eps[static_cast<std::size_t>(head)] = spec.noise_sd * rng.gaussian();
        double acc = spec.shift;
        for (std::int64_t i = 0; i < L; ++i) {
          const std::int64_t idx = (head - i + L) % L;
          acc += spec.coeffs[static_cast<std::size_t>(i)] *
                 eps[static_cast<std::size_t>(idx)];
        }
        traj.values[t] = acc;
        head = (head + 1) % L;
      }
      break;
    }
    case ProcessKind::ExpAr1: {
      double z = 0.0;
      for (std::int64_t t = 0; t < traj.burn_in; ++t) {
        z = spec.phi * z + spec.noise_sd * rng.gaussian();
      }
      for (std::int64_t t = 0; t < n; ++t) {
        z = spec.phi * z + spec.noise_sd * rng.gaussian();
        traj.values[t] = std::exp(spec.mu + z);
      }
      break;
    }
  }

  if (!(traj.values.array() > 0.0).all()) {
    throw std::runtime_error(
        "simulate: trajectory contains a nonpositive value (shift too small "
        "for the realised noise)");
  }
  return traj;
}

double autocovariance(const ProcessSpec& spec, std::int64_t lag) {
  spec.validate();
  if (lag < 0) {
    throw std::domain_error("autocovariance: lag must be >= 0");
  }
  switch (spec.kind) {
    case ProcessKind::IidLognormal: {
      if (lag > 0) return 0.0;
      const double m1 = lognormal_raw_moment(spec.mu, spec.s, 1);
      const double m2 = lognormal_raw_moment(spec.mu, spec.s, 2);
      return m2 - m1 * m1;
    }
    case ProcessKind::ShiftedAr1: {
      const double g0 =
          spec.noise_sd * spec.noise_sd / (1.0 - spec.phi * spec.phi);
      return g0 * std::pow(spec.phi, static_cast<double>(lag));
    }
    case ProcessKind::ShiftedMa: {
      const std::int64_t L = static_cast<std::int64_t>(spec.coeffs.size());
      if (lag >= L) return 0.0;
      double acc = 0.0;
      for (std::int64_t i = 0; i + lag < L; ++i) {
        acc += spec.coeffs[static_cast<std::size_t>(i)] *
               spec.coeffs[static_cast<std::size_t>(i + lag)];
      }
      return spec.noise_sd * spec.noise_sd * acc;
    }
    case ProcessKind::ExpAr1: {
      const double g0 = exp_ar1_layer_variance(spec);
      const double gj = g0 * std::pow(spec.phi, static_cast<double>(lag));
      const double m = std::exp(spec.mu + 0.5 * g0);
      return m * m * (std::exp(gj) - 1.0);
    }
  }
  throw not_available_error("autocovariance: unsupported process kind");
}

TheoreticalMoments theoretical_moments(const ProcessSpec& spec) {
  spec.validate();
  TheoreticalMoments tm;
  tm.autocovariance_closed_form = true;
  switch (spec.kind) {
    case ProcessKind::IidLognormal: {
      tm.mean = lognormal_raw_moment(spec.mu, spec.s, 1);
      tm.marginal_variance = autocovariance(spec, 0);
      tm.longrun_variance = tm.marginal_variance;
      // IID: Sigma0^2 = Var((X-m)^2) = mu4 - gamma0^2.
      const double mu4 = lognormal_central_m4(spec.mu, spec.s);
      tm.longrun_variance_of_squares =
          mu4 - tm.marginal_variance * tm.marginal_variance;
      break;
    }
    case ProcessKind::ShiftedAr1: {
      tm.mean = spec.shift;
      const double g0 = autocovariance(spec, 0);
      tm.marginal_variance = g0;
      const double one_minus = 1.0 - spec.phi;
      tm.longrun_variance =
          spec.noise_sd * spec.noise_sd / (one_minus * one_minus);
      // Gaussian process: Cov((X_0-m)^2,(X_j-m)^2) = 2 gamma_j^2 (Isserlis),
      // summed over all lags.
      tm.longrun_variance_of_squares = 2.0 * g0 * g0 *
                                       (1.0 + spec.phi * spec.phi) /
                                       (1.0 - spec.phi * spec.phi);
      break;
    }
    case ProcessKind::ShiftedMa: {
      tm.mean = spec.shift;
      tm.marginal_variance = autocovariance(spec, 0);
      const std::int64_t L = static_cast<std::int64_t>(spec.coeffs.size());
      double sum = tm.marginal_variance;
      double sumsq = tm.marginal_variance * tm.marginal_variance;
      for (std::int64_t j = 1; j < L; ++j) {
        const double gj = autocovariance(spec, j);
        sum += 2.0 * gj;
        sumsq += 2.0 * gj * gj;
      }
      tm.longrun_variance = sum;
      tm.longrun_variance_of_squares = 2.0 * sumsq;
      break;
    }
    case ProcessKind::ExpAr1: {
      const double g0 = exp_ar1_layer_variance(spec);
      tm.mean = std::exp(spec.mu + 0.5 * g0);
      tm.marginal_variance = autocovariance(spec, 0);
      // No simple closed form for the full series: sum the exact lag
      // covariances m^2 (exp(gamma^G_j) - 1) until the terms fall below 1e-12.
      double acc = tm.marginal_variance;
      for (std::int64_t j = 1; j < 10000000; ++j) {
        const double term = autocovariance(spec, j);
        acc += 2.0 * term;
        if (std::fabs(term) < 1e-12) break;
      }
      tm.longrun_variance = acc;
      tm.longrun_variance_of_squares = std::nullopt;
      break;
    }
  }
  return tm;
}

std::string kind_name(ProcessKind kind) {
  switch (kind) {
    case ProcessKind::IidLognormal:
      return "iid-lognormal";
    case ProcessKind::ShiftedAr1:
      return "shifted-ar1";
    case ProcessKind::ShiftedMa:
      return "shifted-ma";
    case ProcessKind::ExpAr1:
      return "exp-ar1";
  }
  throw std::logic_error("kind_name: unknown kind");
}

ProcessKind kind_from_name(const std::string& name) {
  if (name == "iid-lognormal") return ProcessKind::IidLognormal;
  if (name == "shifted-ar1") return ProcessKind::ShiftedAr1;
  if (name == "shifted-ma") return ProcessKind::ShiftedMa;
  if (name == "exp-ar1") return ProcessKind::ExpAr1;
  throw std::invalid_argument("unknown process kind: " + name);
}

}  // namespace dyntaylor

#include "dyntaylor/blocks.hpp"

#include <cmath>
#include <stdexcept>

namespace dyntaylor {

namespace {
// Integer part with a relative nudge so exact powers (e.g. 10000^0.5) do not
// land one below due to pow rounding.
std::int64_t floor_nudged(double x) {
  return static_cast<std::int64_t>(
      std::floor(x + 1e-9 * std::max(1.0, std::fabs(x))));
}

RateFlags rate_flags_for(double zeta, std::int64_t gap_q, std::int64_t n) {
  RateFlags flags;
  flags.zeta_ok = zeta > 1.0 / 3.0;
  double v = 0.0;
  if (gap_q > 0 && n > 1) {
    v = std::log(static_cast<double>(gap_q)) / std::log(static_cast<double>(n));
  }
  flags.corollary_ok = zeta > 2.0 / 3.0 && (gap_q == 0 || v < 3.0 * zeta - 2.0);
  return flags;
}
}  // namespace

BlockPlan plan_blocks(std::int64_t n, double kappa, double zeta,
                      std::int64_t gap_q) {
  if (n < 4) {
    throw std::invalid_argument("plan_blocks: n must be >= 4");
  }
  if (!(kappa > 0.0)) {
    throw std::invalid_argument("plan_blocks: kappa must be > 0");
  }
  if (!(zeta > 0.0 && zeta < 1.0)) {
    throw std::invalid_argument("plan_blocks: zeta must lie in (0,1)");
  }
  if (gap_q < 0) {
    throw std::invalid_argument("plan_blocks: gap must be >= 0");
  }
  BlockPlan plan;
  plan.n = n;
  plan.kappa = kappa;
  plan.zeta = zeta;
  plan.gap_q = gap_q;
  plan.p = std::max<std::int64_t>(
      1, floor_nudged(kappa * std::pow(static_cast<double>(n), zeta)));
  plan.k = n / plan.p;
  if (plan.k < 2) {
    throw std::invalid_argument(
        "plan_blocks: blocks too large, fewer than two fit the sample");
  }
  plan.rate_flags = rate_flags_for(zeta, gap_q, n);
  return plan;
}

BlockPlan plan_with_length(std::int64_t n, std::int64_t p,
                           std::int64_t gap_q) {
  if (n < 4) {
    throw std::invalid_argument("plan_with_length: n must be >= 4");
  }
  if (p < 1 || p > n) {
    throw std::invalid_argument("plan_with_length: p must lie in [1, n]");
  }
  if (gap_q < 0) {
    throw std::invalid_argument("plan_with_length: gap must be >= 0");
  }
  BlockPlan plan;
  plan.n = n;
  plan.p = p;
  plan.k = n / p;
  if (plan.k < 2) {
    throw std::invalid_argument(
        "plan_with_length: fewer than two blocks fit the sample");
  }
  plan.kappa = 1.0;
  plan.zeta = p == 1 ? 0.0
                     : std::log(static_cast<double>(p)) /
                           std::log(static_cast<double>(n));
  plan.gap_q = gap_q;
  plan.rate_flags = rate_flags_for(plan.zeta, gap_q, n);
  return plan;
}

BlockMeans block_means(const Eigen::VectorXd& series, const BlockPlan& plan) {
  if (series.size() != plan.n) {
    throw std::invalid_argument(
        "block_means: plan length does not match the series");
  }
  BlockMeans bm;
  bm.plan = plan;
  bm.used_length = plan.used_length();
  // Column i of the reshape is block B_{i+1}; the trailing remainder of
  // length n - p*k is discarded.
  bm.means = series.head(bm.used_length)
                 .reshaped(plan.p, plan.k)
                 .colwise()
                 .mean()
                 .transpose();
  return bm;
}

NormalizedBlocks normalize_blocks(const BlockMeans& bm, double m_ref,
                                  double second_moment_ref) {
  if (!(m_ref > 0.0)) {
    throw std::domain_error("normalize_blocks: m_ref must be > 0");
  }
  NormalizedBlocks nb;
  nb.m_ref = m_ref;
  nb.second_moment_ref = second_moment_ref;
  const double root_p = std::sqrt(static_cast<double>(bm.plan.p));
  nb.g = root_p * (bm.means.array() - m_ref);
  nb.u = nb.g.array().square() - second_moment_ref;
  return nb;
}

}  // namespace dyntaylor

#pragma once

#include <Eigen/Dense>

#include <cstdint>

namespace dyntaylor {

struct RateFlags {
  bool zeta_ok = false;       // zeta > 1/3 (block-growth rate for the CLT)
  bool corollary_ok = false;  // zeta > 2/3 and gap exponent v < 3 zeta - 2
};

// Bernstein blocking parameters: p = max(1, floor(kappa * n^zeta)) consecutive
// observations per block, k = floor(n / p) blocks, trailing remainder unused.
struct BlockPlan {
  std::int64_t n = 0;
  std::int64_t p = 0;
  std::int64_t k = 0;
  double kappa = 1.0;
  double zeta = 0.5;
  std::int64_t gap_q = 0;  // diagnostic gap; never removes data
  RateFlags rate_flags;

  std::int64_t used_length() const { return p * k; }
};

// Throws when fewer than two blocks fit. zeta <= 1/3 only clears the
// zeta_ok flag; the statistics stay well defined for any block length.
BlockPlan plan_blocks(std::int64_t n, double kappa, double zeta,
                      std::int64_t gap_q = 0);

// Plan with an explicit block length; rate flags use the implied exponent
// log(p)/log(n). p = 1 is the static case.
BlockPlan plan_with_length(std::int64_t n, std::int64_t p,
                           std::int64_t gap_q = 0);

struct BlockMeans {
  Eigen::VectorXd means;  // Y_i, one per block
  BlockPlan plan;
  std::int64_t used_length = 0;
};

// Per-block averages over the first p*k observations.
BlockMeans block_means(const Eigen::VectorXd& series, const BlockPlan& plan);

struct NormalizedBlocks {
  Eigen::VectorXd g;  // sqrt(p) * (Y_i - m_ref)
  Eigen::VectorXd u;  // g_i^2 - second_moment_ref
  double m_ref = 0.0;
  double second_moment_ref = 0.0;
};

NormalizedBlocks normalize_blocks(const BlockMeans& bm, double m_ref,
                                  double second_moment_ref);

}  // namespace dyntaylor

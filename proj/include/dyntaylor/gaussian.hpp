#pragma once

namespace dyntaylor {

double normal_pdf(double x);
double normal_cdf(double x);

// Inverse standard normal CDF on (0, 1). Rational approximation (AS241)
// refined with one Newton step against the erfc-based CDF; absolute error
// well below 1e-8. Throws std::domain_error outside (0, 1).
double normal_quantile(double prob);

// tau such that P(|N(0,2)| > tau) = eta, i.e. sqrt(2) * Phi^{-1}(1 - eta/2).
double two_sided_quantile_n02(double eta);

}  // namespace dyntaylor

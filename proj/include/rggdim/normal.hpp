#pragma once

namespace rggdim {

/// Standard normal CDF, Phi(x) = erfc(-x / sqrt 2) / 2.
double normal_cdf(double x);

/// Upper-tail probability 1 - Phi(x), without cancellation for large x.
double normal_sf(double x);

/// x with Phi(x) = p, for p in (0, 1). Found by bisection on normal_cdf so the
/// quantile and the CDF agree with each other to the last bit of the bracket.
double normal_quantile(double p);

/// Z_{alpha/2}: the 100(1 - alpha/2)% quantile, for alpha in (0, 1).
double two_sided_critical_value(double alpha);

}  // namespace rggdim

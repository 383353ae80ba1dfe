#include "rggdim/normal.hpp"

#include <cmath>
#include <numbers>

#include "rggdim/error.hpp"

namespace rggdim {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_sf(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidInput("normal_quantile: p must lie in (0, 1)");
  // Phi(-40) underflows to zero, so every representable p in (0,1) is bracketed.
  double lo = -40.0;
  double hi = 40.0;
  while (true) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (normal_cdf(mid) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::fabs(normal_cdf(lo) - p) <= std::fabs(normal_cdf(hi) - p) ? lo : hi;
}

double two_sided_critical_value(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidInput("alpha must lie in (0, 1)");
  return normal_quantile(1.0 - 0.5 * alpha);
}

}  // namespace rggdim

#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "xrsim/rng.hpp"

namespace xrsim {

// Normal distribution truncated to [low, high]. Sampling is by rejection,
// which is cheap for the wide truncation windows used here.
struct TruncNormal {
  double mean = 0.0;
  double stddev = 1.0;
  double low = -1.0;
  double high = 1.0;

  void validate() const {
    if (!(low < high)) throw std::invalid_argument("TruncNormal: low must be < high");
    if (stddev < 0.0) throw std::invalid_argument("TruncNormal: stddev must be >= 0");
  }

  double sample(RngStream& rng) const {
    if (stddev == 0.0) return std::clamp(mean, low, high);
    for (;;) {
      const double x = mean + stddev * rng.normal();
      if (x >= low && x <= high) return x;
    }
  }

  static double phi(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI); }
  static double big_phi(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

  double analytic_mean() const {
    if (stddev == 0.0) return std::clamp(mean, low, high);
    const double a = (low - mean) / stddev;
    const double b = (high - mean) / stddev;
    const double z = big_phi(b) - big_phi(a);
    return mean + stddev * (phi(a) - phi(b)) / z;
  }

  double cdf(double x) const {
    if (x <= low) return 0.0;
    if (x >= high) return 1.0;
    const double a = (low - mean) / stddev;
    const double b = (high - mean) / stddev;
    const double z = big_phi(b) - big_phi(a);
    return (big_phi((x - mean) / stddev) - big_phi(a)) / z;
  }
};

}  // namespace xrsim

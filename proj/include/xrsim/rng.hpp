#pragma once

#include <cmath>
#include <cstdint>

namespace xrsim {

// RNG stream purposes. Each (drop, cell, ue, purpose) tuple gets its own
// stream, so adding a new consumer never perturbs existing sequences.
enum class RngPurpose : std::uint64_t {
  Placement = 1,
  ShadowingX,
  ShadowingT,
  FadingX,
  FadingT,
  TrafficPhase,
  TrafficJitter,
  TrafficSize,
  PdcchX,
  PdschX,
  PdcchT,
  PdschT,
  SoftCombine,
  TlService,
  Generic,
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

// Splittable PRNG keyed by (master_seed, drop, cell, ue, purpose).
// Identical keys give identical sequences; distinct keys give streams that
// are independent for simulation purposes.
class RngStream {
 public:
  RngStream() : RngStream(0, 0, 0, 0, RngPurpose::Generic) {}

  RngStream(std::uint64_t master_seed, std::uint64_t drop, std::uint64_t cell,
            std::uint64_t ue, RngPurpose purpose) {
    std::uint64_t s = master_seed;
    for (std::uint64_t field : {drop, cell, ue, static_cast<std::uint64_t>(purpose)}) {
      s ^= field + 0x9e3779b97f4a7c15ULL + (s << 6) + (s >> 2);
      detail::splitmix64(s);
    }
    state_ = s;
    // burn-in decorrelates nearby keys
    next_u64();
    next_u64();
  }

  std::uint64_t next_u64() { return detail::splitmix64(state_); }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0, n)
  std::uint64_t uniform_int(std::uint64_t n) {
    // modulo bias negligible for n << 2^64
    return next_u64() % n;
  }

  bool bernoulli(double p) { return uniform() < p; }

  // standard normal (Box-Muller, cached pair)
  double normal() {
    if (have_cache_) {
      have_cache_ = false;
      return cache_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    cache_ = r * std::sin(theta);
    have_cache_ = true;
    return r * std::cos(theta);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

 private:
  std::uint64_t state_ = 0;
  double cache_ = 0.0;
  bool have_cache_ = false;
};

}  // namespace xrsim

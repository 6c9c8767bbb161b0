#ifndef FERMAT_RNG_HPP
#define FERMAT_RNG_HPP

#include <cmath>
#include <cstdint>

namespace fermat {

// Counter-based generator, scheme "fermat-rng/1".
//
// Every consumer opens its own stream keyed by (seed, stream id, substream).
// The state advances as a SplitMix64 counter, so draws are a pure function
// of the key and the draw index: replayable, and independent streams never
// interact. Substreams index parallel units of work (replicate number,
// point batch) so results do not depend on scheduling.
inline constexpr const char* kRngScheme = "fermat-rng/1";

enum class Stream : std::uint64_t {
  clutter = 1,
  swiss_roll = 2,
  uniform_cube = 3,
  poisson_cube = 4,
  mc_moments = 5,
  kmedoids = 6,
};

namespace detail {
inline std::uint64_t splitmix_finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace detail

class Rng {
 public:
  Rng(std::uint64_t seed, Stream stream, std::uint64_t substream = 0) {
    std::uint64_t s = detail::splitmix_finalize(seed + 0x9E3779B97F4A7C15ULL);
    s = detail::splitmix_finalize(
        s ^ detail::splitmix_finalize(static_cast<std::uint64_t>(stream)));
    s = detail::splitmix_finalize(s ^ detail::splitmix_finalize(substream));
    state_ = s;
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return detail::splitmix_finalize(state_);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; consumes two uniforms per call.
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

  // Poisson count by Knuth's product method, chunked so exp(-mean) never
  // underflows for large means.
  std::uint64_t poisson(double mean) {
    std::uint64_t total = 0;
    while (mean > 0.0) {
      const double chunk = mean > 500.0 ? 500.0 : mean;
      const double limit = std::exp(-chunk);
      double prod = uniform();
      std::uint64_t k = 0;
      while (prod > limit) {
        ++k;
        prod *= uniform();
      }
      total += k;
      mean -= chunk;
    }
    return total;
  }

 private:
  std::uint64_t state_;
};

}  // namespace fermat

#endif  // FERMAT_RNG_HPP

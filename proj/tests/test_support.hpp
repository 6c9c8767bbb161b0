#ifndef FERMAT_TEST_SUPPORT_HPP
#define FERMAT_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "fermat/point_cloud.hpp"
#include "fermat/rng.hpp"

namespace fermat::test {

inline PointCloud random_cloud(std::size_t n, int d, std::uint64_t seed,
                               double lo = 0.0, double hi = 1.0) {
  Rng rng(seed, Stream::uniform_cube);
  PointCloud cloud;
  cloud.dim = d;
  cloud.seed = seed;
  cloud.coords.resize(n * static_cast<std::size_t>(d));
  for (auto& c : cloud.coords) c = rng.uniform(lo, hi);
  return cloud;
}

// Independent oracle: exhaustive minimum over all simple paths through the
// sample, with branch-and-bound pruning (costs only grow).
inline double brute_force_fermat(const PointCloud& cloud, double alpha,
                                 std::size_t src, std::size_t dst) {
  const std::size_t n = cloud.size();
  std::vector<char> used(n, 0);
  double best = std::numeric_limits<double>::infinity();

  auto dfs = [&](auto&& self, std::size_t u, double cost) -> void {
    if (cost >= best) return;
    if (u == dst) {
      best = cost;
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      self(self, v,
           cost + std::pow(euclidean(cloud.point(u), cloud.point(v)), alpha));
      used[v] = 0;
    }
  };
  used[src] = 1;
  dfs(dfs, src, 0.0);
  return best;
}

inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

inline LineFit least_squares(const std::vector<double>& x,
                             const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
    syy += y[i] * y[i];
  }
  LineFit fit;
  const double vx = sxx - sx * sx / n;
  const double cxy = sxy - sx * sy / n;
  const double vy = syy - sy * sy / n;
  fit.slope = cxy / vx;
  fit.intercept = (sy - fit.slope * sx) / n;
  fit.r_squared = vy > 0 ? (cxy * cxy) / (vx * vy) : 1.0;
  return fit;
}

}  // namespace fermat::test

#endif  // FERMAT_TEST_SUPPORT_HPP

#include "fermat/alpha_select.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace fermat {

namespace {

double log_density_ratio(const AlphaBoundInput& input) {
  if (!(input.a0 > 0.0))
    throw std::invalid_argument("alpha bound: a0 must be positive");
  if (!(input.a1 > input.a0))
    throw std::invalid_argument("alpha bound: need a1 > a0");
  return std::log(input.a1 / input.a0);
}

void check_common(const AlphaBoundInput& input) {
  if (input.d < 1) throw std::invalid_argument("alpha bound: d must be >= 1");
  if (!(input.tau > 0.0))
    throw std::invalid_argument("alpha bound: tau must be positive");
  if (!(input.covering_constant_c > 0.0))
    throw std::invalid_argument("alpha bound: covering constant must be "
                                "positive");
}

double clamp_at_one(double bound) { return bound < 1.0 ? 1.0 : bound; }

}  // namespace

double covering_log_argument(const AlphaBoundInput& input) {
  check_common(input);
  const double beta =
      input.covering_constant_c * std::pow(input.tau / 2.0, -input.d);
  return beta > 1.0 ? beta : 1.0;
}

double alpha_bound_covering(const AlphaBoundInput& input) {
  const double ratio = log_density_ratio(input);
  const double beta = covering_log_argument(input);
  return clamp_at_one(1.0 + input.d * std::log(beta) / ratio);
}

double alpha_bound_geodesic(const AlphaBoundInput& input) {
  check_common(input);
  if (!input.geodesic_bound_R)
    throw std::invalid_argument("alpha bound: geodesic bound R is required");
  const double R = *input.geodesic_bound_R;
  if (!(R > 0.0))
    throw std::invalid_argument("alpha bound: R must be positive");
  const double ratio = log_density_ratio(input);
  return clamp_at_one(1.0 + input.d * std::log(R / (2.0 * input.tau)) / ratio);
}

double alpha_bound_discontinuous(const AlphaBoundInput& input) {
  check_common(input);
  if (!input.eta)
    throw std::invalid_argument("alpha bound: eta is required");
  if (!input.r) throw std::invalid_argument("alpha bound: r is required");
  const double eta = *input.eta;
  const double r = *input.r;
  if (!(eta > 0.0) || !(eta < input.tau))
    throw std::invalid_argument("alpha bound: need 0 < eta < tau");
  if (!(r > 0.0) || !(r < input.tau - eta))
    throw std::invalid_argument("alpha bound: need 0 < r < tau - eta");

  const double ratio = log_density_ratio(input);
  const double covering =
      std::max(input.covering_constant_c * std::pow(r, -input.d), 1.0);
  const double denom = input.tau - (r + eta);
  const double arg = (r / denom) * covering;
  if (!std::isfinite(arg))
    return std::numeric_limits<double>::infinity();
  return clamp_at_one(1.0 + input.d * std::log(arg) / ratio);
}

MinimizedBound alpha_bound_discontinuous_min_r(AlphaBoundInput input,
                                               int grid_points) {
  check_common(input);
  if (!input.eta)
    throw std::invalid_argument("alpha bound: eta is required");
  if (grid_points < 1)
    throw std::invalid_argument("alpha bound: grid_points must be >= 1");
  const double span = input.tau - *input.eta;
  if (!(span > 0.0))
    throw std::invalid_argument("alpha bound: need eta < tau");

  MinimizedBound best;
  best.bound = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= grid_points; ++k) {
    const double r = span * k / (grid_points + 1);
    input.r = r;
    const double b = alpha_bound_discontinuous(input);
    if (b < best.bound) {
      best.bound = b;
      best.r = r;
    }
  }
  return best;
}

double alpha_bound_clutter(const ClutterSpec& spec) {
  spec.validate();
  if (spec.lambda <= 0.0 || spec.lambda >= 1.0)
    throw std::invalid_argument(
        "clutter bound: lambda in {0,1} makes the density ratio degenerate");

  const double a1 = spec.lambda / (spec.ring1_volume() + spec.ring2_volume());
  const double a0 = (1.0 - spec.lambda) / spec.cube_volume();
  if (!(a1 > a0))
    throw std::invalid_argument("clutter bound: a1 <= a0 for this lambda");

  // Longest in-ring geodesic: half the outer circumference.
  const double L = std::numbers::pi * spec.ring2_outer;
  const double bound = 1.0 + spec.d * std::log(L) / std::log(a1 / a0);
  return bound < 1.0 ? 1.0 : bound;
}

}  // namespace fermat

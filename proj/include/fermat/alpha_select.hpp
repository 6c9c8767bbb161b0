#ifndef FERMAT_ALPHA_SELECT_HPP
#define FERMAT_ALPHA_SELECT_HPP

#include <optional>

#include "fermat/datasets.hpp"

namespace fermat {

// Geometric and density parameters feeding the closed-form lower bounds on
// the critical power. The covering constant c enters through
// N_r <= c r^{-d} v 1; tau is the reach of the cluster union.
struct AlphaBoundInput {
  int d = 2;
  double a0 = 0.0;  // low density level
  double a1 = 0.0;  // high density level, a1 > a0 > 0
  double tau = 0.0;
  double covering_constant_c = 1.0;
  std::optional<double> geodesic_bound_R;
  std::optional<double> eta;  // separation of level sets
  std::optional<double> r;    // offset radius
};

// 1 + d log(c (tau/2)^{-d} v 1) / log(a1/a0); the covering-number
// instantiation with r = tau/2.
double alpha_bound_covering(const AlphaBoundInput& input);

// The log argument of the covering bound (the beta_0 constant), exposed
// for reporting.
double covering_log_argument(const AlphaBoundInput& input);

// 1 + d log(R / 2 tau) / log(a1/a0), clamped below at 1; applies when
// geodesic lengths inside the clusters are uniformly bounded by R.
double alpha_bound_geodesic(const AlphaBoundInput& input);

// 1 + d log( r/(tau-(r+eta)) * (c r^{-d} v 1) ) / log(a1/a0) for
// 0 < r < tau - eta; the continuous-density variant. Returns +infinity as
// r approaches tau - eta.
double alpha_bound_discontinuous(const AlphaBoundInput& input);

struct MinimizedBound {
  double bound = 0.0;
  double r = 0.0;
};

// The discontinuous bound holds for every admissible r, so the sharpest
// implied bound is its minimum; scanned on a uniform grid over (0, tau-eta).
MinimizedBound alpha_bound_discontinuous_min_r(AlphaBoundInput input,
                                               int grid_points = 100);

// Explicit clutter-model bound: a1 = lambda/(|C1|+|C2|), a0 = (1-lambda)/|K|,
// L = pi * outer radius (the in-ring geodesic bound, 5 pi / 2 for the
// default geometry), giving 1 + d log(L) / log(a1/a0).
double alpha_bound_clutter(const ClutterSpec& spec);

}  // namespace fermat

#endif  // FERMAT_ALPHA_SELECT_HPP

#ifndef FERMAT_SPACING_STATS_HPP
#define FERMAT_SPACING_STATS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fermat/point_cloud.hpp"

namespace fermat {

// Sum of alpha-th powers of the spacings of a 1-D sample in [0,1], with the
// interval endpoints appended as boundary points. This is the exact sample
// Fermat distance across [0,1] in one dimension.
double spacing_statistic_1d(const PointCloud& cloud, double alpha);

// Limits of the mean and of n * variance of the normalized 1-D statistic.
struct ClosedFormMoments {
  double limit_mean;  // Gamma(alpha + 1)
  double limit_nvar;  // Gamma(2 alpha + 1) - (alpha^2 + 1) Gamma(alpha + 1)^2
};

ClosedFormMoments closed_form_moments_1d(double alpha);

// Monte-Carlo estimates of the normalized Fermat statistic between two
// anchor points, with jackknife standard errors. Closed forms are filled in
// for d = 1.
struct MomentReport {
  double alpha = 0.0;
  int d = 0;
  std::size_t n = 0;
  std::size_t replicates = 0;
  double mean_hat = 0.0, se_mean = 0.0;
  double var_hat = 0.0, se_var = 0.0;
  double cv_hat = 0.0, se_cv = 0.0;
  std::optional<double> closed_form_mean;
  std::optional<double> closed_form_nvar;
};

// Each replicate draws a fresh uniform cloud on [0,1]^d and evaluates
// n^{(alpha-1)/d} * D between the anchors: d = 1 uses the spacing statistic
// over the whole interval, d >= 2 snaps the anchors to their nearest sample
// points. Replicates are keyed by (seed, replicate index) so results do not
// depend on the thread count.
MomentReport mc_moments(int d, std::size_t n, double alpha,
                        std::size_t replicates, std::span<const double> anchor_a,
                        std::span<const double> anchor_b, std::uint64_t seed,
                        int threads = 0);

// Greedy monotone path built by growing unit-sloped boxes until they
// capture a sample point; a feasible path, so its cost upper-bounds the
// Fermat distance on the same sample.
struct StaircasePath {
  std::vector<std::vector<double>> points;  // start, captured samples, target
  std::vector<double> increments;           // box growth X_k per step
  double cost = 0.0;                        // sum of |hop|^alpha
  double theta = 0.0;                       // alpha / d
};

StaircasePath staircase_path(const PointCloud& cloud, double alpha, int l,
                             std::span<const double> start,
                             std::span<const double> target);

// Upper bound on the k-th moment of the normalized Fermat distance for a
// Poisson process: 2e d^{theta + alpha/2} theta^theta (1 + Gamma(k theta + 1))
// with theta = alpha / d.
double moment_bound_constant(double alpha, int d, int k);

}  // namespace fermat

#endif  // FERMAT_SPACING_STATS_HPP

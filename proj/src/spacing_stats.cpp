#include "fermat/spacing_stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fermat/datasets.hpp"
#include "fermat/fermat_core.hpp"
#include "fermat/parallel.hpp"
#include "fermat/rng.hpp"

namespace fermat {

double spacing_statistic_1d(const PointCloud& cloud, double alpha) {
  if (cloud.dim != 1)
    throw std::invalid_argument("spacing statistic: cloud must be 1-D");
  if (!(alpha >= 1.0))
    throw std::invalid_argument("spacing statistic: alpha must be >= 1");

  std::vector<double> pts(cloud.coords);
  for (double x : pts)
    if (x < 0.0 || x > 1.0)
      throw std::invalid_argument("spacing statistic: points must lie in "
                                  "[0,1]");
  // At alpha = 1 the sum telescopes to the interval length exactly.
  if (alpha == 1.0) return 1.0;

  std::sort(pts.begin(), pts.end());
  double sum = 0.0;
  double prev = 0.0;
  for (double x : pts) {
    sum += std::pow(x - prev, alpha);
    prev = x;
  }
  sum += std::pow(1.0 - prev, alpha);
  return sum;
}

ClosedFormMoments closed_form_moments_1d(double alpha) {
  if (!(alpha >= 1.0))
    throw std::invalid_argument("closed form moments: alpha must be >= 1");
  const double g1 = std::tgamma(alpha + 1.0);
  const double g2 = std::tgamma(2.0 * alpha + 1.0);
  return {g1, g2 - (alpha * alpha + 1.0) * g1 * g1};
}

namespace {

struct JackknifeStats {
  double mean, se_mean;
  double var, se_var;
  double cv, se_cv;
};

// Leave-one-out standard errors for the mean, the (unbiased) variance and
// the coefficient of variation of the replicate values.
JackknifeStats jackknife(const std::vector<double>& x) {
  const std::size_t r = x.size();
  double s1 = 0.0, s2 = 0.0;
  for (double v : x) {
    s1 += v;
    s2 += v * v;
  }
  const double mean = s1 / r;
  const double var = (s2 - s1 * s1 / r) / (r - 1);
  const double cv = mean > 0.0 ? std::sqrt(std::max(var, 0.0)) / mean : 0.0;

  double mm = 0.0, mv = 0.0, mc = 0.0;
  std::vector<double> lm(r), lv(r), lc(r);
  for (std::size_t i = 0; i < r; ++i) {
    const double m1 = (s1 - x[i]) / (r - 1);
    double v1 = 0.0;
    if (r > 2) {
      v1 = ((s2 - x[i] * x[i]) - (r - 1) * m1 * m1) / (r - 2);
      if (v1 < 0.0) v1 = 0.0;
    }
    const double c1 = m1 > 0.0 ? std::sqrt(v1) / m1 : 0.0;
    lm[i] = m1;
    lv[i] = v1;
    lc[i] = c1;
    mm += m1;
    mv += v1;
    mc += c1;
  }
  mm /= r;
  mv /= r;
  mc /= r;
  double qm = 0.0, qv = 0.0, qc = 0.0;
  for (std::size_t i = 0; i < r; ++i) {
    qm += (lm[i] - mm) * (lm[i] - mm);
    qv += (lv[i] - mv) * (lv[i] - mv);
    qc += (lc[i] - mc) * (lc[i] - mc);
  }
  const double f = static_cast<double>(r - 1) / r;
  return {mean, std::sqrt(f * qm), var, std::sqrt(f * qv),
          cv,   std::sqrt(f * qc)};
}

}  // namespace

MomentReport mc_moments(int d, std::size_t n, double alpha,
                        std::size_t replicates,
                        std::span<const double> anchor_a,
                        std::span<const double> anchor_b, std::uint64_t seed,
                        int threads) {
  if (d < 1) throw std::invalid_argument("mc_moments: d must be >= 1");
  if (replicates < 2)
    throw std::invalid_argument("mc_moments: need at least 2 replicates");
  if (static_cast<int>(anchor_a.size()) != d ||
      static_cast<int>(anchor_b.size()) != d)
    throw std::invalid_argument("mc_moments: anchor dimension mismatch");
  for (int k = 0; k < d; ++k)
    if (anchor_a[k] < 0.0 || anchor_a[k] > 1.0 || anchor_b[k] < 0.0 ||
        anchor_b[k] > 1.0)
      throw std::invalid_argument("mc_moments: anchors must lie in [0,1]^d");

  const double factor = std::pow(static_cast<double>(n), (alpha - 1.0) / d);
  std::vector<double> stats(replicates);

  parallel_for(replicates, threads, [&](std::size_t rep) {
    // One substream per replicate keeps the draw independent of scheduling.
    Rng rng(seed, Stream::mc_moments, rep);
    PointCloud cloud;
    cloud.dim = d;
    cloud.coords.resize(n * static_cast<std::size_t>(d));
    for (auto& c : cloud.coords) c = rng.uniform();

    if (d == 1) {
      stats[rep] = factor * spacing_statistic_1d(cloud, alpha);
    } else {
      FermatGraphConfig cfg;
      cfg.alpha = alpha;
      const std::size_t src = nearest_index(cloud, anchor_a);
      const std::size_t dst = nearest_index(cloud, anchor_b);
      const auto dist = fermat_single_source(cloud, cfg, src);
      stats[rep] = factor * dist[dst];
    }
  });

  const JackknifeStats js = jackknife(stats);
  MomentReport report;
  report.alpha = alpha;
  report.d = d;
  report.n = n;
  report.replicates = replicates;
  report.mean_hat = js.mean;
  report.se_mean = js.se_mean;
  report.var_hat = js.var;
  report.se_var = js.se_var;
  report.cv_hat = js.cv;
  report.se_cv = js.se_cv;
  if (d == 1) {
    const auto cf = closed_form_moments_1d(alpha);
    report.closed_form_mean = cf.limit_mean;
    report.closed_form_nvar = cf.limit_nvar;
  }
  return report;
}

StaircasePath staircase_path(const PointCloud& cloud, double alpha, int l,
                             std::span<const double> start,
                             std::span<const double> target) {
  const std::size_t n = cloud.size();
  if (n == 0) throw std::invalid_argument("staircase: empty cloud");
  if (l < 1) throw std::invalid_argument("staircase: l must be >= 1");
  const int d = cloud.dim;
  if (static_cast<int>(start.size()) != d ||
      static_cast<int>(target.size()) != d)
    throw std::invalid_argument("staircase: point dimension mismatch");
  if (!(alpha >= 1.0))
    throw std::invalid_argument("staircase: alpha must be >= 1");

  StaircasePath path;
  path.theta = alpha / d;
  std::vector<double> cur(start.begin(), start.end());
  path.points.push_back(cur);

  std::vector<char> used(n, 0);
  for (int step = 0; step < l; ++step) {
    if (cur[0] >= target[0]) break;  // coordinate exhaustion

    // sigma grows every remaining coordinate back toward its axis.
    double best_b1 = std::numeric_limits<double>::infinity();
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      const auto q = cloud.point(i);
      const double b1 = q[0] - cur[0];
      if (!(b1 > 0.0)) continue;
      bool ok = true;
      for (int k = 1; k < d; ++k) {
        const double sigma = cur[k] > 0.0 ? -1.0 : 1.0;
        const double sb = sigma * (q[k] - cur[k]);
        if (sb < 0.0 || sb > b1) {
          ok = false;
          break;
        }
      }
      if (ok && b1 < best_b1) {
        best_b1 = b1;
        best = i;
      }
    }
    if (best == n) break;  // no particle ahead of the box

    used[best] = 1;
    const auto q = cloud.point(best);
    path.increments.push_back(best_b1);
    path.cost += std::pow(euclidean(cur, q), alpha);
    cur.assign(q.begin(), q.end());
    path.points.push_back(cur);
  }

  const double final_hop = euclidean(cur, target);
  if (final_hop > 0.0) {
    path.cost += std::pow(final_hop, alpha);
    path.points.emplace_back(target.begin(), target.end());
  }
  return path;
}

double moment_bound_constant(double alpha, int d, int k) {
  if (!(alpha >= 1.0))
    throw std::invalid_argument("moment bound: alpha must be >= 1");
  if (d < 1) throw std::invalid_argument("moment bound: d must be >= 1");
  if (k < 1) throw std::invalid_argument("moment bound: k must be >= 1");
  const double theta = alpha / d;
  const double c = 2.0 * std::numbers::e *
                   std::pow(static_cast<double>(d), theta + alpha / 2.0) *
                   std::pow(theta, theta);
  return c * (1.0 + std::tgamma(k * theta + 1.0));
}

}  // namespace fermat

#include "fermat/datasets.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fermat/rng.hpp"

namespace fermat {

double unit_ball_volume(int d) {
  return std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
}

void ClutterSpec::validate() const {
  if (d < 1) throw std::invalid_argument("clutter: d must be >= 1");
  if (lambda < 0.0 || lambda > 1.0)
    throw std::invalid_argument("clutter: lambda must be in [0,1]");
  if (!(ring1_inner < ring1_outer) || !(ring2_inner < ring2_outer))
    throw std::invalid_argument("clutter: ring radii must be increasing");
  if (!(ring1_outer <= ring2_inner))
    throw std::invalid_argument("clutter: rings must be disjoint");
  if (!(ring1_inner > 0.0))
    throw std::invalid_argument("clutter: inner radius must be positive");
  if (!(half_width > 0.0))
    throw std::invalid_argument("clutter: half_width must be positive");
}

double ClutterSpec::ring1_volume() const {
  return unit_ball_volume(d) *
         (std::pow(ring1_outer, d) - std::pow(ring1_inner, d));
}

double ClutterSpec::ring2_volume() const {
  return unit_ball_volume(d) *
         (std::pow(ring2_outer, d) - std::pow(ring2_inner, d));
}

double ClutterSpec::cube_volume() const {
  return std::pow(2.0 * half_width, d);
}

namespace {

void unit_sphere_direction(Rng& rng, int d, std::vector<double>& dir) {
  dir.resize(d);
  double norm = 0.0;
  do {
    norm = 0.0;
    for (int k = 0; k < d; ++k) {
      dir[k] = rng.normal();
      norm += dir[k] * dir[k];
    }
    norm = std::sqrt(norm);
  } while (norm == 0.0);
  for (int k = 0; k < d; ++k) dir[k] /= norm;
}

// Inverse CDF for the radial density proportional to r^{d-1} on [lo, hi].
double ring_radius(Rng& rng, int d, double lo, double hi) {
  const double u = rng.uniform();
  const double lod = std::pow(lo, d);
  const double hid = std::pow(hi, d);
  return std::pow(lod + u * (hid - lod), 1.0 / d);
}

}  // namespace

PointCloud gen_clutter(const ClutterSpec& spec, std::uint64_t seed) {
  spec.validate();

  const double v1 = spec.ring1_volume();
  const double v2 = spec.ring2_volume();
  const double p_ring1 = v1 / (v1 + v2);

  Rng rng(seed, Stream::clutter);
  PointCloud cloud;
  cloud.dim = spec.d;
  cloud.seed = seed;
  cloud.coords.reserve(spec.n * spec.d);
  cloud.labels.reserve(spec.n);

  std::vector<double> p(spec.d);
  std::vector<double> dir;
  for (std::size_t i = 0; i < spec.n; ++i) {
    if (rng.uniform() < spec.lambda) {
      const bool first = rng.uniform() < p_ring1;
      const double r = first
                           ? ring_radius(rng, spec.d, spec.ring1_inner,
                                         spec.ring1_outer)
                           : ring_radius(rng, spec.d, spec.ring2_inner,
                                         spec.ring2_outer);
      unit_sphere_direction(rng, spec.d, dir);
      for (int k = 0; k < spec.d; ++k) p[k] = r * dir[k];
    } else {
      for (int k = 0; k < spec.d; ++k)
        p[k] = rng.uniform(-spec.half_width, spec.half_width);
    }
    double norm = 0.0;
    for (int k = 0; k < spec.d; ++k) norm += p[k] * p[k];
    norm = std::sqrt(norm);
    int label = 0;
    if (norm >= spec.ring1_inner && norm <= spec.ring1_outer)
      label = 1;
    else if (norm >= spec.ring2_inner && norm <= spec.ring2_outer)
      label = 2;
    cloud.coords.insert(cloud.coords.end(), p.begin(), p.end());
    cloud.labels.push_back(label);
  }
  return cloud;
}

std::array<double, 3> swiss_roll_map(double x, double y, double a,
                                     double omega) {
  return {x * std::cos(omega * x), a * y, x * std::sin(omega * x)};
}

PointCloud gen_swiss_roll(const SwissRollSpec& spec, std::uint64_t seed) {
  if (spec.n % 4 != 0)
    throw std::invalid_argument("swiss roll: n must be divisible by 4");

  Rng rng(seed, Stream::swiss_roll);
  PointCloud cloud;
  cloud.dim = 3;
  cloud.seed = seed;
  cloud.coords.reserve(spec.n * 3);
  cloud.labels.reserve(spec.n);

  const std::size_t per_cluster = spec.n / 4;
  for (int c = 0; c < 4; ++c) {
    for (std::size_t i = 0; i < per_cluster; ++i) {
      const double x = spec.means[c][0] + spec.sigma * rng.normal();
      const double y = spec.means[c][1] + spec.sigma * rng.normal();
      const auto p = swiss_roll_map(x, y, spec.a, spec.omega);
      cloud.coords.insert(cloud.coords.end(), p.begin(), p.end());
      cloud.labels.push_back(c);
    }
  }
  return cloud;
}

PointCloud gen_uniform_cube(std::size_t n, int d, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("uniform cube: n must be >= 1");
  if (d < 1) throw std::invalid_argument("uniform cube: d must be >= 1");

  Rng rng(seed, Stream::uniform_cube);
  PointCloud cloud;
  cloud.dim = d;
  cloud.seed = seed;
  cloud.coords.resize(n * static_cast<std::size_t>(d));
  for (auto& c : cloud.coords) c = rng.uniform();
  return cloud;
}

PointCloud gen_poisson_cube(double intensity, int d, std::uint64_t seed) {
  if (!(intensity > 0.0))
    throw std::invalid_argument("poisson cube: intensity must be positive");
  if (d < 1) throw std::invalid_argument("poisson cube: d must be >= 1");

  Rng rng(seed, Stream::poisson_cube);
  const std::uint64_t n = rng.poisson(intensity);
  PointCloud cloud;
  cloud.dim = d;
  cloud.seed = seed;
  cloud.coords.resize(n * static_cast<std::size_t>(d));
  for (auto& c : cloud.coords) c = rng.uniform();
  return cloud;
}

}  // namespace fermat

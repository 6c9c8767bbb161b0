#ifndef FERMAT_DATASETS_HPP
#define FERMAT_DATASETS_HPP

#include <array>
#include <cstdint>

#include "fermat/point_cloud.hpp"

namespace fermat {

// Two concentric rings inside a hypercube, sampled as a mixture of the
// uniform measure on the rings (weight lambda) and uniform background
// noise on the cube. Default geometry: C1 = B(5/4)\B(1), C2 = B(10/4)\B(9/4),
// K = [-3,3]^d.
struct ClutterSpec {
  int d = 2;
  double lambda = 0.99;
  std::size_t n = 1000;
  double ring1_inner = 1.0;
  double ring1_outer = 1.25;
  double ring2_inner = 2.25;
  double ring2_outer = 2.5;
  double half_width = 3.0;

  void validate() const;
  double ring1_volume() const;
  double ring2_volume() const;
  double cube_volume() const;
};

// Volume of the unit d-ball.
double unit_ball_volume(int d);

// Mixture sampler for the clutter model. Points landing in a ring are
// labeled 1 or 2 by region membership regardless of which mixture branch
// produced them; background points get label 0. Radii are drawn by
// inverse-CDF on the radial density r^{d-1}, directions uniformly on the
// sphere.
PointCloud gen_clutter(const ClutterSpec& spec, std::uint64_t seed);

// Four 2-D Gaussian clusters rolled into 3-D by
// (x, y) -> (x cos(wx), a y, x sin(wx)). Labels 0..3 are assigned before
// the map, n/4 points per cluster.
struct SwissRollSpec {
  std::size_t n = 1000;
  std::array<std::array<double, 2>, 4> means{
      {{2.0, 0.0}, {4.0, 0.0}, {6.0, 0.0}, {8.0, 0.0}}};
  double sigma = 0.35;
  double a = 3.0;
  double omega = 15.0;
};

PointCloud gen_swiss_roll(const SwissRollSpec& spec, std::uint64_t seed);

std::array<double, 3> swiss_roll_map(double x, double y, double a,
                                     double omega);

// I.i.d. uniform points in [0,1]^d.
PointCloud gen_uniform_cube(std::size_t n, int d, std::uint64_t seed);

// Poisson process in [0,1]^d: N ~ Poisson(intensity), points uniform.
PointCloud gen_poisson_cube(double intensity, int d, std::uint64_t seed);

}  // namespace fermat

#endif  // FERMAT_DATASETS_HPP

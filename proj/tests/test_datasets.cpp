#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "fermat/datasets.hpp"
#include "fermat/point_cloud.hpp"

using namespace fermat;

namespace {

double norm_of(std::span<const double> p) {
  double s = 0.0;
  for (double c : p) s += c * c;
  return std::sqrt(s);
}

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("clutter ring volumes (d=2)") {
  ClutterSpec spec;
  CHECK(spec.ring1_volume() == doctest::Approx(9.0 * std::numbers::pi / 16.0)
                                   .epsilon(1e-12));
  CHECK(spec.ring2_volume() == doctest::Approx(19.0 * std::numbers::pi / 16.0)
                                   .epsilon(1e-12));
  CHECK(spec.cube_volume() == doctest::Approx(36.0).epsilon(1e-12));
}

TEST_CASE("clutter with lambda=1 stays on the rings") {
  ClutterSpec spec;
  spec.lambda = 1.0;
  spec.n = 10000;
  const PointCloud cloud = gen_clutter(spec, 42);
  REQUIRE(cloud.size() == 10000);

  std::size_t in_ring1 = 0;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const double r = norm_of(cloud.point(i));
    const bool in1 = r >= 1.0 && r <= 1.25;
    const bool in2 = r >= 2.25 && r <= 2.5;
    CHECK((in1 || in2));
    if (in1) ++in_ring1;
  }

  // Mixing proportional to volume: |C1|/(|C1|+|C2|) = 9/28.
  const double p = 9.0 / 28.0;
  const double sigma = std::sqrt(p * (1.0 - p) / 10000.0);
  CHECK(std::abs(in_ring1 / 10000.0 - p) < 3.0 * sigma);
}

TEST_CASE("clutter with lambda=0 is uniform background") {
  ClutterSpec spec;
  spec.lambda = 0.0;
  spec.n = 10000;
  const PointCloud cloud = gen_clutter(spec, 7);
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto p = cloud.point(i);
    CHECK(std::abs(p[0]) <= 3.0);
    CHECK(std::abs(p[1]) <= 3.0);
    mean_x += p[0];
    mean_y += p[1];
  }
  CHECK(std::abs(mean_x / 10000.0) < 0.1);
  CHECK(std::abs(mean_y / 10000.0) < 0.1);
}

TEST_CASE("clutter labels mark ring membership") {
  ClutterSpec spec;
  spec.lambda = 0.5;
  spec.n = 2000;
  const PointCloud cloud = gen_clutter(spec, 3);
  REQUIRE(cloud.labels.size() == cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const double r = norm_of(cloud.point(i));
    int expect = 0;
    if (r >= 1.0 && r <= 1.25)
      expect = 1;
    else if (r >= 2.25 && r <= 2.5)
      expect = 2;
    CHECK(cloud.labels[i] == expect);
  }
}

TEST_CASE("clutter rejects bad parameters") {
  ClutterSpec spec;
  spec.lambda = 1.5;
  CHECK_THROWS_AS(gen_clutter(spec, 1), std::invalid_argument);
  spec.lambda = -0.1;
  CHECK_THROWS_AS(gen_clutter(spec, 1), std::invalid_argument);
  spec = ClutterSpec{};
  spec.d = 0;
  CHECK_THROWS_AS(gen_clutter(spec, 1), std::invalid_argument);
}

TEST_CASE("generation is replayable") {
  ClutterSpec spec;
  const PointCloud a = gen_clutter(spec, 99);
  const PointCloud b = gen_clutter(spec, 99);
  CHECK(a.coords == b.coords);
  CHECK(a.labels == b.labels);
  const PointCloud c = gen_clutter(spec, 100);
  CHECK(a.coords != c.coords);
}

TEST_CASE("swiss roll map basics") {
  const auto p = swiss_roll_map(0.0, 1.0, 3.0, 15.0);
  CHECK(p[0] == 0.0);
  CHECK(p[1] == 3.0);
  CHECK(p[2] == 0.0);

  // p1^2 + p3^2 recovers x^2.
  for (double x : {0.5, 2.0, 7.3}) {
    const auto q = swiss_roll_map(x, -0.4, 3.0, 15.0);
    CHECK(q[0] * q[0] + q[2] * q[2] ==
          doctest::Approx(x * x).epsilon(1e-12));
  }
}

TEST_CASE("swiss roll labels split evenly") {
  SwissRollSpec spec;
  const PointCloud cloud = gen_swiss_roll(spec, 11);
  REQUIRE(cloud.size() == 1000);
  REQUIRE(cloud.dim == 3);
  std::array<int, 4> counts{};
  for (int lbl : cloud.labels) counts[lbl]++;
  for (int c : counts) CHECK(c == 250);

  SwissRollSpec bad;
  bad.n = 1001;
  CHECK_THROWS_AS(gen_swiss_roll(bad, 1), std::invalid_argument);
}

TEST_CASE("uniform cube moments") {
  const PointCloud one = gen_uniform_cube(100000, 1, 5);
  double mean = 0.0;
  for (double c : one.coords) mean += c;
  mean /= 100000.0;
  CHECK(mean > 0.497);
  CHECK(mean < 0.503);

  const PointCloud two = gen_uniform_cube(100000, 2, 6);
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < two.size(); ++i) {
    mx += two.point(i)[0];
    my += two.point(i)[1];
  }
  mx /= 100000.0;
  my /= 100000.0;
  double cov = 0.0;
  for (std::size_t i = 0; i < two.size(); ++i)
    cov += (two.point(i)[0] - mx) * (two.point(i)[1] - my);
  cov /= 100000.0;
  CHECK(std::abs(cov) < 0.005);

  const PointCloud single = gen_uniform_cube(1, 3, 7);
  REQUIRE(single.size() == 1);
  for (double c : single.coords) {
    CHECK(c >= 0.0);
    CHECK(c < 1.0);
  }
}

TEST_CASE("poisson cube count concentration") {
  int within = 0;
  const double lo = 1000.0 - 4.0 * std::sqrt(1000.0);
  const double hi = 1000.0 + 4.0 * std::sqrt(1000.0);
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const PointCloud cloud = gen_poisson_cube(1000.0, 2, s);
    const double n = static_cast<double>(cloud.size());
    if (n >= lo && n <= hi) ++within;
    if (s < 10)
      for (double c : cloud.coords) {
        CHECK(c >= 0.0);
        CHECK(c < 1.0);
      }
  }
  CHECK(within >= 990);

  int zero = 0;
  for (std::uint64_t s = 0; s < 1000; ++s)
    if (gen_poisson_cube(0.001, 2, s).size() == 0) ++zero;
  CHECK(zero >= 998);
}

TEST_CASE("csv round trip is bit identical") {
  ClutterSpec spec;
  spec.n = 123;
  const PointCloud cloud = gen_clutter(spec, 17);
  const auto path = temp_file("fermat_test_cloud.csv");
  save_csv(cloud, path.string());
  const PointCloud loaded = load_csv(path.string());
  REQUIRE(loaded.size() == cloud.size());
  CHECK(loaded.dim == cloud.dim);
  CHECK(loaded.coords == cloud.coords);
  CHECK(loaded.labels == cloud.labels);
  CHECK(loaded.seed == 0);
  std::filesystem::remove(path);
}

TEST_CASE("csv rejects malformed input") {
  const auto path = temp_file("fermat_test_bad.csv");
  {
    std::ofstream out(path);
    out << "x1,x2\n0.5,0.5\n1.0,2.0,3.0\n";
  }
  CHECK_THROWS_WITH_AS(load_csv(path.string()),
                       doctest::Contains("line 3"), std::runtime_error);

  {
    std::ofstream out(path, std::ios::trunc);
  }
  CHECK_THROWS_WITH_AS(load_csv(path.string()),
                       doctest::Contains("no points"), std::runtime_error);

  {
    std::ofstream out(path, std::ios::trunc);
    out << "x1,x2\n";
  }
  CHECK_THROWS_WITH_AS(load_csv(path.string()),
                       doctest::Contains("no points"), std::runtime_error);

  CHECK_THROWS_AS(load_csv("/nonexistent/definitely_missing.csv"),
                  std::runtime_error);
  std::filesystem::remove(path);
}

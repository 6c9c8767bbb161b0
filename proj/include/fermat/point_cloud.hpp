#ifndef FERMAT_POINT_CLOUD_HPP
#define FERMAT_POINT_CLOUD_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fermat {

// A sample of n points in R^D with optional integer labels.
// Coordinates are stored row-major; labels are empty or exactly n long.
struct PointCloud {
  std::vector<double> coords;
  int dim = 0;
  std::vector<int> labels;
  std::uint64_t seed = 0;  // 0 when loaded from file

  std::size_t size() const {
    return dim > 0 ? coords.size() / static_cast<std::size_t>(dim) : 0;
  }
  bool has_labels() const { return !labels.empty(); }

  std::span<const double> point(std::size_t i) const {
    return {coords.data() + i * static_cast<std::size_t>(dim),
            static_cast<std::size_t>(dim)};
  }

  void push_point(std::span<const double> p, int label = -1) {
    coords.insert(coords.end(), p.begin(), p.end());
    if (label >= 0) labels.push_back(label);
  }
};

double euclidean(std::span<const double> a, std::span<const double> b);

// Largest pairwise distance in the cloud (0 for n < 2).
double cloud_diameter(const PointCloud& cloud);

// Index of the sample point nearest to x, ties broken by lowest index.
std::size_t nearest_index(const PointCloud& cloud, std::span<const double> x);

// CSV persistence. Header `x1,...,xD[,label]`, one point per row, LF line
// endings, coordinates written with 17 significant digits so that a
// save/load round trip is bit-identical.
PointCloud load_csv(const std::string& path);
void save_csv(const PointCloud& cloud, const std::string& path);

}  // namespace fermat

#endif  // FERMAT_POINT_CLOUD_HPP

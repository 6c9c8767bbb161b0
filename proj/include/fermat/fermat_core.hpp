#ifndef FERMAT_FERMAT_CORE_HPP
#define FERMAT_FERMAT_CORE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fermat/point_cloud.hpp"

namespace fermat {

enum class GraphKind { complete, knn };

// Search space for the shortest-path computation. The complete graph gives
// the exact sample Fermat distance; knn restricts edges and is an explicit
// approximation (entries can only grow).
struct FermatGraphConfig {
  double alpha = 2.0;
  GraphKind graph = GraphKind::complete;
  int knn_k = 10;
  // Divide coordinates by the cloud diameter before exponentiation and
  // multiply results back by diameter^alpha; keeps edge weights <= 1 so
  // large alpha cannot overflow.
  bool rescale = true;
  int threads = 0;  // 0 = hardware concurrency
};

// Symmetric matrix of pairwise sample Fermat distances for one alpha,
// with the normalization metadata needed to interpret the entries.
struct FermatMatrix {
  std::size_t n = 0;
  double alpha = 1.0;
  double scale_factor = 1.0;
  bool normalized = false;
  std::optional<int> intrinsic_dim;  // set by normalize()
  bool root_variant = false;
  GraphKind graph = GraphKind::complete;
  int knn_k = 0;
  std::uint64_t seed = 0;  // seed of the originating cloud
  std::vector<double> values;

  double at(std::size_t i, std::size_t j) const { return values[i * n + j]; }
  double& at(std::size_t i, std::size_t j) { return values[i * n + j]; }
};

// All-pairs sample Fermat distances (Lagrangian cost |hop|^alpha summed
// along sample paths, minimized by single-source shortest paths from every
// source).
FermatMatrix fermat_matrix(const PointCloud& cloud,
                           const FermatGraphConfig& config);

// One row of the matrix, without materializing all of it. Usable for
// clouds too large for the full n x n computation.
std::vector<double> fermat_single_source(const PointCloud& cloud,
                                         const FermatGraphConfig& config,
                                         std::size_t source);

// Distance between arbitrary query points: both snap to their nearest
// sample point (ties to the lowest index) and the snap segments carry no
// cost, so queries at sample points reproduce matrix entries exactly.
double fermat_query(const PointCloud& cloud, const FermatMatrix& matrix,
                    std::span<const double> x, std::span<const double> y);

// Multiplies every entry by n^{(alpha-1)/d} and records d. Normalizing an
// already-normalized matrix is an error.
FermatMatrix normalize(FermatMatrix matrix, int d);

// Entrywise alpha-th root (the alternative Fermat distance definition).
FermatMatrix root_variant(FermatMatrix matrix);

}  // namespace fermat

#endif  // FERMAT_FERMAT_CORE_HPP

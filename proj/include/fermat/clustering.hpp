#ifndef FERMAT_CLUSTERING_HPP
#define FERMAT_CLUSTERING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fermat/fermat_core.hpp"

namespace fermat {

struct ClusterModel {
  std::vector<std::size_t> medoids;  // point indices, one per cluster
  std::vector<int> assignment;       // cluster slot per point
  int iterations = 0;
  bool converged = false;
  double objective = 0.0;  // sum of distances to assigned medoids
  std::vector<double> objective_trace;
};

// K-medoids by alternating assignment and in-cluster medoid updates until
// the assignment stops changing. Initialization is greedy farthest-point
// seeding on the supplied matrix; the seed only enters tie-breaking, so
// runs are fully deterministic.
ClusterModel kmedoids(const FermatMatrix& matrix, std::size_t m,
                      std::uint64_t seed, int max_iter = 100);

struct ScoreCard {
  double ami = 0.0;
  double ari = 0.0;
  double accuracy = 0.0;
  double f1 = 0.0;  // macro-F1 under the accuracy-optimal label matching
};

// External evaluation of a predicted assignment against ground truth:
// adjusted mutual information (expected-MI adjustment under the permutation
// model, max normalizer), adjusted Rand index, and accuracy / macro-F1
// under the optimal one-to-one matching of label names.
ScoreCard score(const std::vector<int>& predicted,
                const std::vector<int>& truth);

struct FeasibilityAudit {
  bool feasible = false;
  double epsilon_hat = 0.0;
};

// Literal check of the empirical alpha-feasibility condition on a
// normalized matrix: epsilon_hat is the worst margin between cross-group
// and within-group distances over all labeled point triples. Points whose
// label equals background_label (or is negative) are excluded from the
// groups but still participate as path vertices through the matrix itself.
FeasibilityAudit feasibility_audit(const FermatMatrix& matrix,
                                   const std::vector<int>& truth,
                                   std::optional<int> background_label =
                                       std::nullopt);

}  // namespace fermat

#endif  // FERMAT_CLUSTERING_HPP

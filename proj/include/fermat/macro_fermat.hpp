#ifndef FERMAT_MACRO_FERMAT_HPP
#define FERMAT_MACRO_FERMAT_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fermat/datasets.hpp"

namespace fermat {

// Density over an axis-aligned box, used by the grid oracle for the
// macroscopic Fermat distance. The evaluator must be pure and return
// finite nonnegative values on the domain.
struct DensityField {
  std::function<double(std::span<const double>)> evaluate;
  std::vector<double> lo;
  std::vector<double> hi;
  int d = 0;
};

struct GridConfig {
  int resolution = 101;  // nodes per axis
  // Neighborhood order: 1 = axis moves, 2 = axis + diagonal, 3 = adds the
  // (1,2)-type moves (2-D only, 16 neighbors). 0 picks 3 in 2-D and 2
  // otherwise.
  int stencil = 0;
  // Densities below this are clamped up to it, so zero-density regions get
  // a large finite cost instead of disconnecting the graph.
  double floor = 1e-12;
};

// Shortest path on the grid graph where an edge (u,v) costs
// |u - v| * f(midpoint)^{-(alpha-1)/d}. Converges to the macroscopic Fermat
// distance as the resolution grows; query points snap to their nearest
// grid node.
double macro_fermat_grid(const DensityField& field, const GridConfig& cfg,
                         double alpha, std::span<const double> x,
                         std::span<const double> y);

struct MacroFeasibility {
  bool feasible = false;
  double margin = 0.0;
};

// Grid surrogate of the alpha-cluster condition: margin is the worst gap
// between any cross-cluster distance and any within-cluster distance over
// the probe points; positive margin means the probes are alpha-clusters.
MacroFeasibility macro_feasibility_check(
    const DensityField& field, const GridConfig& cfg, double alpha,
    const std::vector<std::vector<std::vector<double>>>& cluster_probes);

// Built-in densities addressable from the CLI.
DensityField uniform_density(int d, std::vector<double> lo,
                             std::vector<double> hi);
DensityField clutter_density(const ClutterSpec& spec);

struct BoxRegion {
  std::vector<double> lo;
  std::vector<double> hi;
  bool contains(std::span<const double> x) const;
};

DensityField two_level_density(double a0, double a1,
                               std::vector<BoxRegion> high_regions,
                               std::vector<double> lo, std::vector<double> hi);

}  // namespace fermat

#endif  // FERMAT_MACRO_FERMAT_HPP

#include "fermat/macro_fermat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace fermat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Grid {
  const DensityField* field;
  int d;
  int res;
  double exponent;  // -(alpha-1)/d
  double floor;
  std::vector<double> spacing;
  std::vector<std::vector<int>> moves;
  std::size_t node_count;

  std::size_t index_of(const std::vector<int>& idx) const {
    std::size_t v = 0;
    for (int k = 0; k < d; ++k) v = v * res + static_cast<std::size_t>(idx[k]);
    return v;
  }

  void decode(std::size_t node, std::vector<int>& idx) const {
    for (int k = d - 1; k >= 0; --k) {
      idx[k] = static_cast<int>(node % res);
      node /= res;
    }
  }

  double coord(int axis, int i) const {
    return field->lo[axis] + spacing[axis] * i;
  }
};

std::vector<std::vector<int>> make_stencil(int d, int order) {
  std::vector<std::vector<int>> moves;
  if (order <= 1) {
    for (int k = 0; k < d; ++k)
      for (int s : {-1, 1}) {
        std::vector<int> mv(d, 0);
        mv[k] = s;
        moves.push_back(mv);
      }
    return moves;
  }
  // All nonzero offsets in {-1,0,1}^d.
  std::vector<int> mv(d, -1);
  for (;;) {
    if (std::any_of(mv.begin(), mv.end(), [](int v) { return v != 0; }))
      moves.push_back(mv);
    int k = d - 1;
    while (k >= 0 && mv[k] == 1) mv[k--] = -1;
    if (k < 0) break;
    ++mv[k];
  }
  if (order >= 3 && d == 2) {
    for (int a : {-1, 1})
      for (int b : {-2, 2}) {
        moves.push_back({a, b});
        moves.push_back({b, a});
      }
  }
  return moves;
}

Grid make_grid(const DensityField& field, const GridConfig& cfg,
               double alpha) {
  if (field.d < 1 || static_cast<int>(field.lo.size()) != field.d ||
      static_cast<int>(field.hi.size()) != field.d)
    throw std::invalid_argument("density field: inconsistent dimensions");
  if (cfg.resolution < 2)
    throw std::invalid_argument("grid: resolution must be >= 2");
  if (!(cfg.floor > 0.0))
    throw std::invalid_argument("grid: floor must be positive");
  if (!(alpha >= 1.0)) throw std::invalid_argument("grid: alpha must be >= 1");

  Grid g;
  g.field = &field;
  g.d = field.d;
  g.res = cfg.resolution;
  g.exponent = -(alpha - 1.0) / field.d;
  g.floor = cfg.floor;
  g.spacing.resize(field.d);
  for (int k = 0; k < field.d; ++k) {
    if (!(field.hi[k] > field.lo[k]))
      throw std::invalid_argument("density field: empty domain box");
    g.spacing[k] = (field.hi[k] - field.lo[k]) / (cfg.resolution - 1);
  }
  const int order = cfg.stencil != 0 ? cfg.stencil : (field.d == 2 ? 3 : 2);
  g.moves = make_stencil(field.d, order);

  double count = 1;
  for (int k = 0; k < field.d; ++k) count *= cfg.resolution;
  if (count > 8e6)
    throw std::invalid_argument("grid: too many nodes (> 8e6); lower the "
                                "resolution or dimension");
  g.node_count = static_cast<std::size_t>(count);
  return g;
}

std::size_t snap_to_grid(const Grid& g, std::span<const double> x) {
  if (static_cast<int>(x.size()) != g.d)
    throw std::invalid_argument("grid: point dimension mismatch");
  std::vector<int> idx(g.d);
  for (int k = 0; k < g.d; ++k) {
    const double lo = g.field->lo[k];
    const double hi = g.field->hi[k];
    if (x[k] < lo - 1e-12 || x[k] > hi + 1e-12)
      throw std::invalid_argument("grid: query point outside the domain");
    int i = static_cast<int>(std::lround((x[k] - lo) / g.spacing[k]));
    i = std::clamp(i, 0, g.res - 1);
    idx[k] = i;
  }
  return g.index_of(idx);
}

double density_at(const Grid& g, const std::vector<double>& p) {
  const double f = g.field->evaluate(p);
  if (!std::isfinite(f) || f < 0.0)
    throw std::runtime_error("density field returned a non-finite or "
                             "negative value");
  return f < g.floor ? g.floor : f;
}

// Single-source Dijkstra over the implicit grid graph. Stops early once
// `until` is settled (pass node_count to settle everything).
std::vector<double> grid_dijkstra(const Grid& g, std::size_t src,
                                  std::size_t until) {
  std::vector<double> dist(g.node_count, kInf);
  dist[src] = 0.0;
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.emplace(0.0, src);

  std::vector<int> idx(g.d);
  std::vector<double> pu(g.d), mid(g.d);
  while (!heap.empty()) {
    const auto [du, u] = heap.top();
    heap.pop();
    if (du > dist[u]) continue;
    if (u == until) break;
    g.decode(u, idx);
    for (int k = 0; k < g.d; ++k) pu[k] = g.coord(k, idx[k]);
    for (const auto& mv : g.moves) {
      bool ok = true;
      std::size_t v = 0;
      for (int k = 0; k < g.d; ++k) {
        const int j = idx[k] + mv[k];
        if (j < 0 || j >= g.res) {
          ok = false;
          break;
        }
        v = v * g.res + static_cast<std::size_t>(j);
      }
      if (!ok) continue;
      double len2 = 0.0;
      for (int k = 0; k < g.d; ++k) {
        const double step = mv[k] * g.spacing[k];
        len2 += step * step;
        mid[k] = pu[k] + 0.5 * step;
      }
      const double cost =
          std::sqrt(len2) * std::pow(density_at(g, mid), g.exponent);
      const double cand = du + cost;
      if (cand < dist[v]) {
        dist[v] = cand;
        heap.emplace(cand, v);
      }
    }
  }
  return dist;
}

}  // namespace

double macro_fermat_grid(const DensityField& field, const GridConfig& cfg,
                         double alpha, std::span<const double> x,
                         std::span<const double> y) {
  const Grid g = make_grid(field, cfg, alpha);
  const std::size_t sx = snap_to_grid(g, x);
  const std::size_t sy = snap_to_grid(g, y);
  if (sx == sy) return 0.0;
  const auto dist = grid_dijkstra(g, sx, sy);
  return dist[sy];
}

MacroFeasibility macro_feasibility_check(
    const DensityField& field, const GridConfig& cfg, double alpha,
    const std::vector<std::vector<std::vector<double>>>& cluster_probes) {
  if (cluster_probes.size() < 2)
    throw std::invalid_argument("feasibility: need at least 2 clusters");
  for (const auto& probes : cluster_probes)
    if (probes.size() < 2)
      throw std::invalid_argument(
          "feasibility: each cluster needs at least 2 probe points");

  const Grid g = make_grid(field, cfg, alpha);

  std::vector<std::vector<std::size_t>> nodes(cluster_probes.size());
  for (std::size_t c = 0; c < cluster_probes.size(); ++c)
    for (const auto& p : cluster_probes[c])
      nodes[c].push_back(snap_to_grid(g, p));

  double margin = kInf;
  for (std::size_t c = 0; c < nodes.size(); ++c) {
    for (const std::size_t x : nodes[c]) {
      const auto dist = grid_dijkstra(g, x, g.node_count);
      double max_within = 0.0;
      for (const std::size_t y : nodes[c])
        max_within = std::max(max_within, dist[y]);
      double min_cross = kInf;
      for (std::size_t o = 0; o < nodes.size(); ++o) {
        if (o == c) continue;
        for (const std::size_t y : nodes[o])
          min_cross = std::min(min_cross, dist[y]);
      }
      margin = std::min(margin, min_cross - max_within);
    }
  }
  return {margin > 0.0, margin};
}

bool BoxRegion::contains(std::span<const double> x) const {
  for (std::size_t k = 0; k < lo.size(); ++k)
    if (x[k] < lo[k] || x[k] > hi[k]) return false;
  return true;
}

DensityField uniform_density(int d, std::vector<double> lo,
                             std::vector<double> hi) {
  DensityField f;
  f.d = d;
  f.lo = std::move(lo);
  f.hi = std::move(hi);
  f.evaluate = [](std::span<const double>) { return 1.0; };
  return f;
}

DensityField clutter_density(const ClutterSpec& spec) {
  spec.validate();
  const double signal = spec.lambda / (spec.ring1_volume() +
                                       spec.ring2_volume());
  const double background = (1.0 - spec.lambda) / spec.cube_volume();

  DensityField f;
  f.d = spec.d;
  f.lo.assign(spec.d, -spec.half_width);
  f.hi.assign(spec.d, spec.half_width);
  f.evaluate = [spec, signal, background](std::span<const double> x) {
    double norm = 0.0;
    for (double c : x) norm += c * c;
    norm = std::sqrt(norm);
    const bool in_ring =
        (norm >= spec.ring1_inner && norm <= spec.ring1_outer) ||
        (norm >= spec.ring2_inner && norm <= spec.ring2_outer);
    return background + (in_ring ? signal : 0.0);
  };
  return f;
}

DensityField two_level_density(double a0, double a1,
                               std::vector<BoxRegion> high_regions,
                               std::vector<double> lo,
                               std::vector<double> hi) {
  if (!(a1 > a0) || !(a0 >= 0.0))
    throw std::invalid_argument("two_level_density: need a1 > a0 >= 0");
  DensityField f;
  f.d = static_cast<int>(lo.size());
  f.lo = std::move(lo);
  f.hi = std::move(hi);
  f.evaluate = [a0, a1, regions = std::move(high_regions)](
                   std::span<const double> x) {
    for (const auto& r : regions)
      if (r.contains(x)) return a1;
    return a0;
  };
  return f;
}

}  // namespace fermat

#include "fermat/fermat_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

#include "fermat/parallel.hpp"

namespace fermat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Weight matrices above this size are not materialized; edge weights are
// recomputed on the fly instead.
constexpr std::size_t kDenseWeightLimit = 6000;

void check_config(const FermatGraphConfig& config) {
  if (!(config.alpha >= 1.0))
    throw std::invalid_argument("fermat: alpha must be >= 1");
  if (config.graph == GraphKind::knn && config.knn_k < 1)
    throw std::invalid_argument("fermat: knn k must be >= 1");
}

double rescale_factor(const PointCloud& cloud, const FermatGraphConfig& cfg) {
  if (!cfg.rescale) return 1.0;
  const double s = cloud_diameter(cloud);
  return s > 0.0 ? s : 1.0;
}

// Dijkstra over the complete graph with a precomputed weight row per node.
// Each settled vertex relaxes its row while the same pass scans for the
// next minimum.
void dense_dijkstra(const double* weights, std::size_t n, std::size_t src,
                    double* dist, unsigned char* done) {
  std::fill(dist, dist + n, kInf);
  std::fill(done, done + n, 0);
  dist[src] = 0.0;
  std::size_t u = src;
  for (std::size_t settled = 0; settled + 1 < n; ++settled) {
    done[u] = 1;
    const double du = dist[u];
    const double* row = weights + u * n;
    double best = kInf;
    std::size_t next = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (done[v]) continue;
      const double cand = du + row[v];
      if (cand < dist[v]) dist[v] = cand;
      if (dist[v] < best) {
        best = dist[v];
        next = v;
      }
    }
    if (next == n) break;
    u = next;
  }
}

// Same, recomputing weights from coordinates (large-n path).
void dense_dijkstra_onthefly(const PointCloud& cloud, double inv_scale,
                             double alpha, std::size_t src, double* dist,
                             unsigned char* done) {
  const std::size_t n = cloud.size();
  std::fill(dist, dist + n, kInf);
  std::fill(done, done + n, 0);
  dist[src] = 0.0;
  std::size_t u = src;
  for (std::size_t settled = 0; settled + 1 < n; ++settled) {
    done[u] = 1;
    const double du = dist[u];
    const auto pu = cloud.point(u);
    double best = kInf;
    std::size_t next = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (done[v]) continue;
      const double w =
          std::pow(euclidean(pu, cloud.point(v)) * inv_scale, alpha);
      const double cand = du + w;
      if (cand < dist[v]) dist[v] = cand;
      if (dist[v] < best) {
        best = dist[v];
        next = v;
      }
    }
    if (next == n) break;
    u = next;
  }
}

struct KnnGraph {
  std::vector<std::vector<std::pair<std::size_t, double>>> adj;
};

KnnGraph build_knn_graph(const PointCloud& cloud, int k, double inv_scale,
                         double alpha) {
  const std::size_t n = cloud.size();
  KnnGraph g;
  g.adj.resize(n);

  std::vector<std::pair<double, std::size_t>> cand;
  for (std::size_t i = 0; i < n; ++i) {
    cand.clear();
    cand.reserve(n - 1);
    const auto pi = cloud.point(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      cand.emplace_back(euclidean(pi, cloud.point(j)), j);
    }
    const std::size_t kk = std::min<std::size_t>(k, cand.size());
    std::partial_sort(cand.begin(), cand.begin() + kk, cand.end());
    for (std::size_t t = 0; t < kk; ++t) {
      const double w = std::pow(cand[t].first * inv_scale, alpha);
      g.adj[i].emplace_back(cand[t].second, w);
    }
  }

  // Symmetrize: keep the union of directed kNN edges.
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [j, w] : g.adj[i]) {
      bool found = false;
      for (const auto& [b, bw] : g.adj[j])
        if (b == i) {
          found = true;
          break;
        }
      if (!found) g.adj[j].emplace_back(i, w);
    }
  }
  for (auto& lst : g.adj) std::sort(lst.begin(), lst.end());
  return g;
}

void check_connected(const KnnGraph& g, int k) {
  const std::size_t n = g.adj.size();
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (const auto& [v, w] : g.adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
  }
  if (reached < n) {
    const std::size_t cut = std::min(reached, n - reached);
    throw std::runtime_error(
        "knn graph (k=" + std::to_string(k) +
        ") is disconnected: component of size " + std::to_string(cut) +
        " is unreachable; raise k");
  }
}

void sparse_dijkstra(const KnnGraph& g, std::size_t src, double* dist) {
  const std::size_t n = g.adj.size();
  std::fill(dist, dist + n, kInf);
  dist[src] = 0.0;
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.emplace(0.0, src);
  while (!heap.empty()) {
    const auto [du, u] = heap.top();
    heap.pop();
    if (du > dist[u]) continue;
    for (const auto& [v, w] : g.adj[u]) {
      const double cand = du + w;
      if (cand < dist[v]) {
        dist[v] = cand;
        heap.emplace(cand, v);
      }
    }
  }
}

}  // namespace

FermatMatrix fermat_matrix(const PointCloud& cloud,
                           const FermatGraphConfig& config) {
  check_config(config);
  const std::size_t n = cloud.size();
  if (n < 2) throw std::invalid_argument("fermat_matrix: need n >= 2 points");

  const double scale = rescale_factor(cloud, config);
  const double inv_scale = 1.0 / scale;
  const double unscale = std::pow(scale, config.alpha);

  FermatMatrix m;
  m.n = n;
  m.alpha = config.alpha;
  m.scale_factor = scale;
  m.graph = config.graph;
  m.knn_k = config.graph == GraphKind::knn ? config.knn_k : 0;
  m.seed = cloud.seed;
  m.values.assign(n * n, 0.0);

  if (config.graph == GraphKind::complete) {
    if (n <= kDenseWeightLimit) {
      std::vector<double> weights(n * n);
      parallel_for(n, config.threads, [&](std::size_t i) {
        const auto pi = cloud.point(i);
        double* row = weights.data() + i * n;
        for (std::size_t j = 0; j < n; ++j)
          row[j] = std::pow(euclidean(pi, cloud.point(j)) * inv_scale,
                            config.alpha);
        row[i] = 0.0;
      });
      parallel_for(n, config.threads, [&](std::size_t src) {
        std::vector<unsigned char> done(n);
        dense_dijkstra(weights.data(), n, src, m.values.data() + src * n,
                       done.data());
      });
    } else {
      parallel_for(n, config.threads, [&](std::size_t src) {
        std::vector<unsigned char> done(n);
        dense_dijkstra_onthefly(cloud, inv_scale, config.alpha, src,
                                m.values.data() + src * n, done.data());
      });
    }
  } else {
    const KnnGraph g = build_knn_graph(cloud, config.knn_k, inv_scale,
                                       config.alpha);
    check_connected(g, config.knn_k);
    parallel_for(n, config.threads, [&](std::size_t src) {
      sparse_dijkstra(g, src, m.values.data() + src * n);
    });
  }

  // Paths reverse, so the matrix is symmetric in exact arithmetic; pick the
  // tighter of the two rounded sums so it is symmetric in floating point too.
  for (std::size_t i = 0; i < n; ++i) {
    m.values[i * n + i] = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = std::min(m.values[i * n + j], m.values[j * n + i]);
      m.values[i * n + j] = v * unscale;
      m.values[j * n + i] = m.values[i * n + j];
    }
  }
  return m;
}

std::vector<double> fermat_single_source(const PointCloud& cloud,
                                         const FermatGraphConfig& config,
                                         std::size_t source) {
  check_config(config);
  const std::size_t n = cloud.size();
  if (n < 2)
    throw std::invalid_argument("fermat_single_source: need n >= 2 points");
  if (source >= n)
    throw std::invalid_argument("fermat_single_source: source out of range");

  const double scale = rescale_factor(cloud, config);
  const double inv_scale = 1.0 / scale;
  const double unscale = std::pow(scale, config.alpha);

  std::vector<double> dist(n);
  if (config.graph == GraphKind::complete) {
    std::vector<unsigned char> done(n);
    dense_dijkstra_onthefly(cloud, inv_scale, config.alpha, source,
                            dist.data(), done.data());
  } else {
    const KnnGraph g = build_knn_graph(cloud, config.knn_k, inv_scale,
                                       config.alpha);
    check_connected(g, config.knn_k);
    sparse_dijkstra(g, source, dist.data());
  }
  for (auto& v : dist) v *= unscale;
  return dist;
}

double fermat_query(const PointCloud& cloud, const FermatMatrix& matrix,
                    std::span<const double> x, std::span<const double> y) {
  if (cloud.size() == 0)
    throw std::invalid_argument("fermat_query: empty cloud");
  if (matrix.n != cloud.size())
    throw std::invalid_argument("fermat_query: matrix/cloud size mismatch");
  const std::size_t i = nearest_index(cloud, x);
  const std::size_t j = nearest_index(cloud, y);
  return matrix.at(i, j);
}

FermatMatrix normalize(FermatMatrix matrix, int d) {
  if (matrix.normalized)
    throw std::invalid_argument("normalize: matrix already normalized");
  if (d < 1) throw std::invalid_argument("normalize: d must be >= 1");
  const double factor =
      std::pow(static_cast<double>(matrix.n), (matrix.alpha - 1.0) / d);
  for (auto& v : matrix.values) v *= factor;
  matrix.normalized = true;
  matrix.intrinsic_dim = d;
  return matrix;
}

FermatMatrix root_variant(FermatMatrix matrix) {
  if (matrix.alpha != 1.0) {
    const double inv_alpha = 1.0 / matrix.alpha;
    for (auto& v : matrix.values) v = std::pow(v, inv_alpha);
  }
  matrix.root_variant = true;
  return matrix;
}

}  // namespace fermat

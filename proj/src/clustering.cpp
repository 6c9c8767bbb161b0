#include "fermat/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "fermat/rng.hpp"

namespace fermat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t tie_rank(std::uint64_t seed, std::size_t index) {
  return detail::splitmix_finalize(seed ^ detail::splitmix_finalize(index));
}

// Greedy farthest-point seeding: start from the index minimizing the total
// distance, then repeatedly add the index maximizing the distance to its
// nearest chosen medoid. Exact ties fall back to the seeded rank.
std::vector<std::size_t> seed_medoids(const FermatMatrix& m, std::size_t k,
                                      std::uint64_t seed) {
  const std::size_t n = m.n;
  std::vector<std::size_t> medoids;
  medoids.reserve(k);

  std::size_t first = 0;
  double best_total = kInf;
  for (std::size_t i = 0; i < n; ++i) {
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) total += m.at(i, j);
    if (total < best_total ||
        (total == best_total &&
         tie_rank(seed, i) < tie_rank(seed, first))) {
      best_total = total;
      first = i;
    }
  }
  medoids.push_back(first);

  std::vector<double> min_dist(n);
  for (std::size_t i = 0; i < n; ++i) min_dist[i] = m.at(first, i);
  while (medoids.size() < k) {
    std::size_t next = n;
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::find(medoids.begin(), medoids.end(), i) != medoids.end())
        continue;
      if (min_dist[i] > best ||
          (min_dist[i] == best && next < n &&
           tie_rank(seed, i) < tie_rank(seed, next))) {
        best = min_dist[i];
        next = i;
      }
    }
    medoids.push_back(next);
    for (std::size_t i = 0; i < n; ++i)
      min_dist[i] = std::min(min_dist[i], m.at(next, i));
  }
  return medoids;
}

}  // namespace

ClusterModel kmedoids(const FermatMatrix& matrix, std::size_t m,
                      std::uint64_t seed, int max_iter) {
  const std::size_t n = matrix.n;
  if (m > n) throw std::invalid_argument("kmedoids: m > n");
  if (m < 2) throw std::invalid_argument("kmedoids: need m >= 2");
  if (max_iter < 1) throw std::invalid_argument("kmedoids: max_iter < 1");

  bool any_positive = false;
  for (double v : matrix.values)
    if (v > 0.0) {
      any_positive = true;
      break;
    }
  if (!any_positive)
    throw std::invalid_argument("kmedoids: degenerate all-zero matrix");

  ClusterModel model;
  model.medoids = seed_medoids(matrix, m, seed);
  model.assignment.assign(n, 0);

  auto assign_all = [&]() {
    for (std::size_t i = 0; i < n; ++i) {
      int best_slot = 0;
      double best = kInf;
      for (std::size_t s = 0; s < m; ++s) {
        const double d = matrix.at(i, model.medoids[s]);
        if (d < best) {  // ties keep the lowest slot
          best = d;
          best_slot = static_cast<int>(s);
        }
      }
      model.assignment[i] = best_slot;
    }
  };

  auto objective = [&]() {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      total += matrix.at(i, model.medoids[model.assignment[i]]);
    return total;
  };

  assign_all();
  model.objective_trace.push_back(objective());

  std::vector<std::vector<std::size_t>> members(m);
  for (int iter = 0; iter < max_iter; ++iter) {
    model.iterations = iter + 1;

    for (auto& lst : members) lst.clear();
    for (std::size_t i = 0; i < n; ++i)
      members[model.assignment[i]].push_back(i);

    for (std::size_t s = 0; s < m; ++s) {
      const auto& lst = members[s];
      if (lst.empty()) continue;  // keep the old medoid for empty slots
      std::size_t best_c = lst.front();
      double best_cost = kInf;
      for (const std::size_t c : lst) {
        double cost = 0.0;
        for (const std::size_t x : lst) cost += matrix.at(x, c);
        if (cost < best_cost) {  // ties keep the lowest index (list order)
          best_cost = cost;
          best_c = c;
        }
      }
      model.medoids[s] = best_c;
    }

    const std::vector<int> before = model.assignment;
    assign_all();
    model.objective_trace.push_back(objective());
    if (model.assignment == before) {
      model.converged = true;
      break;
    }
  }
  model.objective = model.objective_trace.back();
  return model;
}

namespace {

struct Contingency {
  std::vector<std::vector<std::size_t>> cells;  // pred x truth
  std::vector<std::size_t> pred_sizes, truth_sizes;
  std::size_t n = 0;
};

Contingency contingency(const std::vector<int>& predicted,
                        const std::vector<int>& truth) {
  if (predicted.size() != truth.size())
    throw std::invalid_argument("score: predicted/truth length mismatch");
  if (predicted.empty())
    throw std::invalid_argument("score: empty label vectors");

  std::map<int, std::size_t> pmap, tmap;
  for (int v : predicted) pmap.emplace(v, pmap.size());
  for (int v : truth) tmap.emplace(v, tmap.size());

  Contingency c;
  c.n = predicted.size();
  c.cells.assign(pmap.size(), std::vector<std::size_t>(tmap.size(), 0));
  c.pred_sizes.assign(pmap.size(), 0);
  c.truth_sizes.assign(tmap.size(), 0);
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const std::size_t p = pmap.at(predicted[i]);
    const std::size_t t = tmap.at(truth[i]);
    ++c.cells[p][t];
    ++c.pred_sizes[p];
    ++c.truth_sizes[t];
  }
  return c;
}

double entropy(const std::vector<std::size_t>& sizes, std::size_t n) {
  double h = 0.0;
  for (std::size_t s : sizes)
    if (s > 0) {
      const double p = static_cast<double>(s) / n;
      h -= p * std::log(p);
    }
  return h;
}

double mutual_information(const Contingency& c) {
  double mi = 0.0;
  const double n = static_cast<double>(c.n);
  for (std::size_t i = 0; i < c.cells.size(); ++i)
    for (std::size_t j = 0; j < c.cells[i].size(); ++j) {
      const std::size_t nij = c.cells[i][j];
      if (nij == 0) continue;
      mi += (nij / n) * std::log((n * nij) /
                                 (static_cast<double>(c.pred_sizes[i]) *
                                  c.truth_sizes[j]));
    }
  return mi;
}

// Expected mutual information under the permutation (hypergeometric) model.
double expected_mutual_information(const Contingency& c) {
  const std::size_t n = c.n;
  std::vector<double> lfact(n + 1, 0.0);
  for (std::size_t i = 1; i <= n; ++i) lfact[i] = lfact[i - 1] + std::log(i);

  const double dn = static_cast<double>(n);
  double emi = 0.0;
  for (const std::size_t ai : c.pred_sizes) {
    for (const std::size_t bj : c.truth_sizes) {
      const std::size_t lo = ai + bj > n ? ai + bj - n : 1;
      const std::size_t hi = std::min(ai, bj);
      for (std::size_t nij = lo; nij <= hi; ++nij) {
        const double log_term =
            std::log(dn * nij / (static_cast<double>(ai) * bj));
        const double log_prob =
            lfact[ai] + lfact[n - ai] + lfact[bj] + lfact[n - bj] -
            lfact[n] - lfact[nij] - lfact[ai - nij] - lfact[bj - nij] -
            lfact[n - ai - bj + nij];
        emi += (nij / dn) * log_term * std::exp(log_prob);
      }
    }
  }
  return emi;
}

double comb2(std::size_t v) {
  return 0.5 * static_cast<double>(v) * (static_cast<double>(v) - 1.0);
}

double adjusted_rand(const Contingency& c) {
  double sum_cells = 0.0;
  for (const auto& row : c.cells)
    for (std::size_t v : row) sum_cells += comb2(v);
  double sum_pred = 0.0, sum_truth = 0.0;
  for (std::size_t v : c.pred_sizes) sum_pred += comb2(v);
  for (std::size_t v : c.truth_sizes) sum_truth += comb2(v);
  const double total = comb2(c.n);
  const double expected = sum_pred * sum_truth / total;
  const double maximum = 0.5 * (sum_pred + sum_truth);
  if (maximum == expected) return 1.0;  // both partitions trivial
  return (sum_cells - expected) / (maximum - expected);
}

// Exact one-to-one matching of pred classes to truth classes maximizing the
// matched count (bitmask DP over truth classes).
std::vector<int> best_matching(const Contingency& c) {
  const std::size_t r = c.cells.size();
  const std::size_t t = c.cells[0].size();
  const std::size_t m = std::max(r, t);
  if (m > 16)
    throw std::invalid_argument("score: more than 16 classes not supported "
                                "by exact matching");

  const std::size_t full = std::size_t{1} << t;
  std::vector<double> dp(full, -1.0);
  std::vector<std::vector<int>> choice(r, std::vector<int>(full, -1));
  dp[0] = 0.0;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<double> next(full, -1.0);
    for (std::size_t mask = 0; mask < full; ++mask) {
      if (dp[mask] < 0.0) continue;
      // pred class i left unmatched
      if (next[mask] < dp[mask]) {
        next[mask] = dp[mask];
        choice[i][mask] = -1;
      }
      for (std::size_t j = 0; j < t; ++j) {
        if (mask & (std::size_t{1} << j)) continue;
        const std::size_t nm = mask | (std::size_t{1} << j);
        const double cand = dp[mask] + static_cast<double>(c.cells[i][j]);
        if (cand > next[nm]) {
          next[nm] = cand;
          choice[i][nm] = static_cast<int>(j);
        }
      }
    }
    dp.swap(next);
  }

  std::size_t best_mask = 0;
  for (std::size_t mask = 1; mask < full; ++mask)
    if (dp[mask] > dp[best_mask]) best_mask = mask;

  std::vector<int> match(r, -1);
  std::size_t mask = best_mask;
  for (std::size_t i = r; i-- > 0;) {
    const int j = choice[i][mask];
    match[i] = j;
    if (j >= 0) mask &= ~(std::size_t{1} << j);
  }
  return match;
}

}  // namespace

ScoreCard score(const std::vector<int>& predicted,
                const std::vector<int>& truth) {
  const Contingency c = contingency(predicted, truth);
  if (c.truth_sizes.size() < 2)
    throw std::invalid_argument("score: need at least 2 distinct truth "
                                "labels");

  ScoreCard card;
  card.ari = adjusted_rand(c);

  const double h_pred = entropy(c.pred_sizes, c.n);
  const double h_truth = entropy(c.truth_sizes, c.n);
  const double mi = mutual_information(c);
  const double emi = expected_mutual_information(c);
  const double normalizer = std::max(h_pred, h_truth);
  double denom = normalizer - emi;
  if (std::abs(denom) < 1e-15) {
    card.ami = mi >= normalizer - 1e-12 ? 1.0 : 0.0;
  } else {
    card.ami = (mi - emi) / denom;
  }

  const auto match = best_matching(c);
  double matched = 0.0;
  for (std::size_t i = 0; i < match.size(); ++i)
    if (match[i] >= 0) matched += static_cast<double>(c.cells[i][match[i]]);
  card.accuracy = matched / static_cast<double>(c.n);

  const std::size_t t = c.truth_sizes.size();
  std::vector<int> matched_pred(t, -1);
  for (std::size_t i = 0; i < match.size(); ++i)
    if (match[i] >= 0) matched_pred[match[i]] = static_cast<int>(i);
  double f1_sum = 0.0;
  for (std::size_t j = 0; j < t; ++j) {
    const int i = matched_pred[j];
    if (i < 0) continue;  // unmatched truth class scores 0
    const double tp = static_cast<double>(c.cells[i][j]);
    const double fp = static_cast<double>(c.pred_sizes[i]) - tp;
    const double fn = static_cast<double>(c.truth_sizes[j]) - tp;
    const double denom_f1 = 2.0 * tp + fp + fn;
    if (denom_f1 > 0.0) f1_sum += 2.0 * tp / denom_f1;
  }
  card.f1 = f1_sum / static_cast<double>(t);
  return card;
}

FeasibilityAudit feasibility_audit(const FermatMatrix& matrix,
                                   const std::vector<int>& truth,
                                   std::optional<int> background_label) {
  if (truth.size() != matrix.n)
    throw std::invalid_argument("feasibility audit: labels/matrix size "
                                "mismatch");
  if (!matrix.normalized)
    throw std::invalid_argument("feasibility audit: matrix must be "
                                "normalized");

  std::map<int, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const int lbl = truth[i];
    if (lbl < 0) continue;
    if (background_label && lbl == *background_label) continue;
    groups[lbl].push_back(i);
  }
  if (groups.size() < 2)
    throw std::invalid_argument("feasibility audit: need at least 2 groups");
  for (const auto& [lbl, members] : groups)
    if (members.size() < 2)
      throw std::invalid_argument("feasibility audit: group " +
                                  std::to_string(lbl) +
                                  " has fewer than 2 points");

  double epsilon = kInf;
  for (const auto& [lbl, members] : groups) {
    for (const std::size_t x : members) {
      double max_within = 0.0;
      for (const std::size_t y : members)
        max_within = std::max(max_within, matrix.at(x, y));
      double min_cross = kInf;
      for (const auto& [other, others] : groups) {
        if (other == lbl) continue;
        for (const std::size_t y : others)
          min_cross = std::min(min_cross, matrix.at(x, y));
      }
      epsilon = std::min(epsilon, min_cross - max_within);
    }
  }
  return {epsilon > 0.0, epsilon};
}

}  // namespace fermat

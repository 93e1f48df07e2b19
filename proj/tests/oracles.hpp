#pragma once

// Independent reference implementations used only by tests. These stay
// deliberately naive (dense matrices, exhaustive enumeration) so they share
// no code path with the library routines they check.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "semnet/graph.hpp"
#include "semnet/rng.hpp"

namespace oracle {

inline std::vector<std::vector<double>> dense_weights(const semnet::WeightedGraph& g) {
  const int n = g.node_count();
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
  for (const semnet::Edge& e : g.edges()) {
    w[e.a][e.b] = e.weight;
    w[e.b][e.a] = e.weight;
  }
  return w;
}

struct AsplOracle {
  double value;
  double reachable_fraction;
};

// All-pairs shortest paths by Floyd-Warshall over distances 1 - w.
inline AsplOracle floyd_warshall_aspl(const semnet::WeightedGraph& g) {
  const int n = g.node_count();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0.0;
  for (const semnet::Edge& e : g.edges()) {
    d[e.a][e.b] = std::min(d[e.a][e.b], 1.0 - e.weight);
    d[e.b][e.a] = d[e.a][e.b];
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  double sum = 0.0;
  long reachable = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && std::isfinite(d[i][j])) {
        sum += d[i][j];
        ++reachable;
      }
    }
  }
  const double pairs = static_cast<double>(n) * (n - 1);
  return {reachable == 0 ? 0.0 : sum / reachable, reachable / pairs};
}

// Direct evaluation of the weighted clustering coefficient of one node,
// iterating every ordered pair (j, h) of other nodes.
inline double clustering_direct(const semnet::WeightedGraph& g, int i) {
  const auto w = dense_weights(g);
  const int n = g.node_count();
  int k = 0;
  double s = 0.0;
  for (int j = 0; j < n; ++j) {
    if (w[i][j] > 0.0) {
      ++k;
      s += w[i][j];
    }
  }
  if (k < 2) return 0.0;
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int h = 0; h < n; ++h) {
      if (j == h) continue;
      if (w[i][j] > 0.0 && w[i][h] > 0.0 && w[j][h] > 0.0) {
        sum += 0.5 * (w[i][j] + w[i][h]);
      }
    }
  }
  return sum / (s * (k - 1));
}

inline double average_clustering_direct(const semnet::WeightedGraph& g) {
  double total = 0.0;
  for (int i = 0; i < g.node_count(); ++i) total += clustering_direct(g, i);
  return g.node_count() == 0 ? 0.0 : total / g.node_count();
}

// Modularity evaluated straight from the ordered-pair definition.
inline double modularity_direct(const semnet::WeightedGraph& g, const std::vector<int>& comm) {
  const auto w = dense_weights(g);
  const int n = g.node_count();
  std::vector<double> s(n, 0.0);
  double two_m = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s[i] += w[i][j];
    two_m += s[i];
  }
  double q = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (comm[i] == comm[j]) q += w[i][j] - s[i] * s[j] / two_m;
    }
  }
  return q / two_m;
}

// Exhaustive best-partition modularity via restricted-growth enumeration.
// Feasible up to ~10 nodes.
inline double best_partition_modularity(const semnet::WeightedGraph& g) {
  const int n = g.node_count();
  std::vector<int> comm(n, 0);
  double best = -std::numeric_limits<double>::infinity();
  // Restricted growth strings: comm[0] = 0, comm[i] <= 1 + max(previous).
  std::vector<int> maxes(n, 0);
  auto recurse = [&](auto&& self, int i, int mx) -> void {
    if (i == n) {
      best = std::max(best, modularity_direct(g, comm));
      return;
    }
    for (int c = 0; c <= mx + 1; ++c) {
      comm[i] = c;
      self(self, i + 1, std::max(mx, c));
    }
  };
  comm[0] = 0;
  recurse(recurse, 1, 0);
  return best;
}

// Spearman via positional rank counting + textbook Pearson, an independent
// route from the library's sort-based ranking.
inline double spearman_direct(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  auto rank_of = [&](const std::vector<double>& v, std::size_t i) {
    double below = 0.0, equal = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] < v[i]) ++below;
      if (v[j] == v[i]) ++equal;
    }
    return below + 0.5 * (equal - 1.0) + 1.0;
  };
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double rx = rank_of(x, i);
    const double ry = rank_of(y, i);
    sx += rx;
    sy += ry;
    sxx += rx * rx;
    syy += ry * ry;
    sxy += rx * ry;
  }
  const double num = n * sxy - sx * sy;
  const double den = std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
  return num / den;
}

// Random connected-ish test graph with weights in (0, 1].
inline semnet::WeightedGraph random_graph(semnet::Rng& rng, int max_nodes = 12,
                                          double edge_prob = 0.45) {
  const int n = 2 + static_cast<int>(rng.integer(static_cast<std::uint64_t>(max_nodes - 1)));
  std::vector<semnet::Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.uniform() < edge_prob) {
        edges.push_back({i, j, 0.05 + 0.95 * rng.uniform()});
      }
    }
  }
  return semnet::WeightedGraph(n, std::move(edges));
}

}  // namespace oracle

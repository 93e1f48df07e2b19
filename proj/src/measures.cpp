#include "semnet/measures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "semnet/rng.hpp"

namespace semnet {

double node_strength(const WeightedGraph& g, int node) {
  double s = 0.0;
  for (const auto& [nbr, w] : g.neighbors(node)) s += w;
  return s;
}

Eigen::VectorXd node_strengths(const WeightedGraph& g) {
  Eigen::VectorXd s = Eigen::VectorXd::Zero(g.node_count());
  for (const Edge& e : g.edges()) {
    s[e.a] += e.weight;
    s[e.b] += e.weight;
  }
  return s;
}

double average_strength(const WeightedGraph& g) {
  if (g.node_count() == 0) throw std::invalid_argument("average_strength: empty graph");
  return node_strengths(g).mean();
}

AsplResult aspl(const WeightedGraph& g) {
  const int n = g.node_count();
  if (n < 2) throw std::invalid_argument("aspl: need at least two nodes");
  double sum = 0.0;
  std::size_t reachable = 0;
  std::vector<double> dist(n);
  using Item = std::pair<double, int>;
  for (int src = 0; src < n; ++src) {
    std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
    dist[src] = 0.0;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
    queue.push({0.0, src});
    while (!queue.empty()) {
      const auto [d, u] = queue.top();
      queue.pop();
      if (d > dist[u]) continue;
      for (const auto& [v, w] : g.neighbors(u)) {
        const double nd = d + (1.0 - w);
        if (nd < dist[v]) {
          dist[v] = nd;
          queue.push({nd, v});
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      if (v != src && std::isfinite(dist[v])) {
        sum += dist[v];
        ++reachable;
      }
    }
  }
  const double pairs = static_cast<double>(n) * (n - 1);
  AsplResult result;
  result.reachable_pair_fraction = static_cast<double>(reachable) / pairs;
  result.value = reachable == 0 ? 0.0 : sum / static_cast<double>(reachable);
  return result;
}

double local_clustering(const WeightedGraph& g, int node) {
  const auto nbrs = g.neighbors(node);
  const int k = static_cast<int>(nbrs.size());
  if (k < 2) return 0.0;
  double strength = 0.0;
  for (const auto& [nbr, w] : nbrs) strength += w;
  // Each unordered neighbor pair (j, h) with a closing edge contributes
  // (w_ij + w_ih)/2 twice across the two orderings, i.e. w_ij + w_ih once.
  double sum = 0.0;
  for (int ji = 0; ji < k; ++ji) {
    for (int hi = ji + 1; hi < k; ++hi) {
      if (g.has_edge(nbrs[ji].first, nbrs[hi].first)) {
        sum += nbrs[ji].second + nbrs[hi].second;
      }
    }
  }
  return sum / (strength * (k - 1));
}

double average_clustering(const WeightedGraph& g) {
  const int n = g.node_count();
  if (n == 0) return 0.0;
  double total = 0.0;
  for (int i = 0; i < n; ++i) total += local_clustering(g, i);
  return total / n;
}

WeightedGraph top_half_subgraph(const WeightedGraph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("top_half_subgraph: graph has no edges");
  std::vector<Edge> sorted(g.edges().begin(), g.edges().end());
  std::sort(sorted.begin(), sorted.end(), [](const Edge& x, const Edge& y) {
    if (x.weight != y.weight) return x.weight > y.weight;
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
  const std::size_t keep = (sorted.size() + 1) / 2;
  sorted.resize(keep);
  return WeightedGraph(g.node_count(), std::move(sorted),
                       std::vector<std::string>(g.labels()));
}

double modularity(const WeightedGraph& g, std::span<const int> community) {
  if (static_cast<int>(community.size()) != g.node_count()) {
    throw std::invalid_argument("modularity: partition size mismatch");
  }
  const double two_m = 2.0 * g.total_edge_weight();
  if (two_m == 0.0) throw std::invalid_argument("modularity: graph has no edges");
  int n_comm = 0;
  for (int c : community) n_comm = std::max(n_comm, c + 1);
  std::vector<double> internal(n_comm, 0.0);  // ordered-pair internal weight
  std::vector<double> strength_sum(n_comm, 0.0);
  for (const Edge& e : g.edges()) {
    if (community[e.a] == community[e.b]) internal[community[e.a]] += 2.0 * e.weight;
    strength_sum[community[e.a]] += e.weight;
    strength_sum[community[e.b]] += e.weight;
  }
  double q = 0.0;
  for (int c = 0; c < n_comm; ++c) {
    const double frac = strength_sum[c] / two_m;
    q += internal[c] / two_m - frac * frac;
  }
  return q;
}

namespace {

// Working graph for the aggregation levels: adjacency without self-loops
// plus a separate self-loop weight per node (ordered-pair convention, so an
// aggregated community's self-loop carries twice its internal edge weight).
struct LevelGraph {
  std::vector<std::vector<std::pair<int, double>>> adjacency;
  std::vector<double> self_loop;
  std::vector<double> strength;
  double two_m = 0.0;

  int size() const { return static_cast<int>(adjacency.size()); }
};

LevelGraph level_from(const WeightedGraph& g) {
  LevelGraph lg;
  lg.adjacency.resize(g.node_count());
  lg.self_loop.assign(g.node_count(), 0.0);
  lg.strength.assign(g.node_count(), 0.0);
  for (const Edge& e : g.edges()) {
    lg.adjacency[e.a].push_back({e.b, e.weight});
    lg.adjacency[e.b].push_back({e.a, e.weight});
    lg.strength[e.a] += e.weight;
    lg.strength[e.b] += e.weight;
  }
  lg.two_m = 2.0 * g.total_edge_weight();
  return lg;
}

// One round of greedy local moves. Returns true if any node changed
// community. Gains are compared in units of k_in - s_i * tot_c / 2m; the
// requested minimum Q improvement of 1e-12 translates to m * 1e-12 here.
bool local_moves(const LevelGraph& g, std::vector<int>& node_to_comm, Rng& rng) {
  const int n = g.size();
  const double m = 0.5 * g.two_m;
  const double min_gain = 1e-12 * m;
  std::vector<double> comm_strength(n, 0.0);
  for (int i = 0; i < n; ++i) comm_strength[node_to_comm[i]] += g.strength[i];

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);

  std::vector<double> link_to(n, 0.0);
  std::vector<int> touched;
  bool any_move = false;
  for (;;) {
    int moves = 0;
    for (int idx = 0; idx < n; ++idx) {
      const int node = order[idx];
      const int old_comm = node_to_comm[node];
      touched.clear();
      for (const auto& [nbr, w] : g.adjacency[node]) {
        const int c = node_to_comm[nbr];
        if (link_to[c] == 0.0) touched.push_back(c);
        link_to[c] += w;
      }
      comm_strength[old_comm] -= g.strength[node];

      const double scale = g.strength[node] / g.two_m;
      double best_gain = link_to[old_comm] - comm_strength[old_comm] * scale;
      int best_comm = old_comm;
      for (int c : touched) {
        if (c == old_comm) continue;
        const double gain = link_to[c] - comm_strength[c] * scale;
        if (gain > best_gain + min_gain) {
          best_gain = gain;
          best_comm = c;
        }
      }
      comm_strength[best_comm] += g.strength[node];
      node_to_comm[node] = best_comm;
      if (best_comm != old_comm) ++moves;
      for (int c : touched) link_to[c] = 0.0;
    }
    if (moves == 0) break;
    any_move = true;
  }
  return any_move;
}

LevelGraph aggregate(const LevelGraph& g, const std::vector<int>& node_to_comm,
                     std::vector<int>& renumbered) {
  const int n = g.size();
  renumbered.assign(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    // Communities are renumbered in order of first appearance by node id,
    // keeping the aggregation deterministic.
    int& slot = renumbered[node_to_comm[i]];
    if (slot == -1) slot = next++;
  }
  LevelGraph agg;
  agg.adjacency.resize(next);
  agg.self_loop.assign(next, 0.0);
  agg.strength.assign(next, 0.0);
  agg.two_m = g.two_m;
  std::vector<std::map<int, double>> cross(next);
  for (int i = 0; i < n; ++i) {
    const int ci = renumbered[node_to_comm[i]];
    agg.self_loop[ci] += g.self_loop[i];
    for (const auto& [j, w] : g.adjacency[i]) {
      const int cj = renumbered[node_to_comm[j]];
      if (ci == cj) {
        agg.self_loop[ci] += w;  // each internal edge visited from both ends
      } else {
        cross[ci][cj] += w;
      }
    }
  }
  for (int c = 0; c < next; ++c) {
    agg.strength[c] = agg.self_loop[c];
    for (const auto& [d, w] : cross[c]) {
      agg.adjacency[c].push_back({d, w});
      agg.strength[c] += w;
    }
  }
  return agg;
}

}  // namespace

LouvainResult modularity_louvain(const WeightedGraph& g, std::uint64_t seed) {
  if (g.edge_count() == 0) throw std::invalid_argument("modularity_louvain: graph has no edges");
  Rng rng(mix64(seed));
  LevelGraph level = level_from(g);
  std::vector<int> assignment(g.node_count());
  std::iota(assignment.begin(), assignment.end(), 0);  // node -> community in original graph

  std::vector<int> node_to_comm(level.size());
  for (;;) {
    std::iota(node_to_comm.begin(), node_to_comm.end(), 0);
    const bool moved = local_moves(level, node_to_comm, rng);
    std::vector<int> renumbered;
    LevelGraph next = aggregate(level, node_to_comm, renumbered);
    for (int& c : assignment) c = renumbered[node_to_comm[c]];
    if (!moved || next.size() == level.size()) break;
    level = std::move(next);
    node_to_comm.resize(level.size());
  }

  LouvainResult result;
  result.community = std::move(assignment);
  result.modularity = modularity(g, result.community);
  // Greedy ascent cannot end below the one-community partition; fall back to
  // it in the rare case a local optimum does.
  if (result.modularity < 0.0) {
    std::fill(result.community.begin(), result.community.end(), 0);
    result.modularity = modularity(g, result.community);
  }
  return result;
}

MeasureRecord measure_graph(const WeightedGraph& g, std::uint64_t louvain_seed) {
  MeasureRecord record;
  record.node_strengths = node_strengths(g);
  record.average_strength = g.node_count() > 0 ? record.node_strengths.mean() : 0.0;
  record.edge_weights.assign(g.edges().begin(), g.edges().end());
  if (g.node_count() >= 2) {
    const AsplResult r = aspl(g);
    record.aspl = r.value;
    record.reachable_pair_fraction = r.reachable_pair_fraction;
  }
  if (g.edge_count() > 0) {
    record.average_cc = average_clustering(top_half_subgraph(g));
    record.modularity = modularity_louvain(g, louvain_seed).modularity;
  }
  return record;
}

}  // namespace semnet

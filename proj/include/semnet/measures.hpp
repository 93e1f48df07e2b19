#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "semnet/graph.hpp"

namespace semnet {

// Strength of one node: sum of incident edge weights (0 when isolated).
double node_strength(const WeightedGraph& g, int node);

// All node strengths, indexed by node.
Eigen::VectorXd node_strengths(const WeightedGraph& g);

// Mean node strength. Requires at least one node.
double average_strength(const WeightedGraph& g);

struct AsplResult {
  double value = 0.0;
  // Share of ordered node pairs (i != j) connected by some path; pairs
  // without a path are excluded from the mean.
  double reachable_pair_fraction = 0.0;
};

// Average shortest path length where each edge contributes distance
// 1 - weight. Requires at least two nodes.
AsplResult aspl(const WeightedGraph& g);

// Weighted local clustering coefficient of one node: for every ordered pair
// of neighbors (j, h) closing a triangle with the node, the mean of the two
// incident weights, normalized by strength * (degree - 1). Nodes with fewer
// than two neighbors score 0.
double local_clustering(const WeightedGraph& g, int node);

// Mean local clustering over all nodes (degenerate nodes contribute 0).
double average_clustering(const WeightedGraph& g);

// Subgraph over the same node set keeping the ceil(E/2) highest-weight
// edges; ties at the cutoff resolved by ascending (a, b). Requires >= 1 edge.
WeightedGraph top_half_subgraph(const WeightedGraph& g);

struct LouvainResult {
  double modularity = 0.0;
  std::vector<int> community;  // node -> community id, contiguous from 0
};

// Weighted modularity of a given partition:
//   Q = (1/2m) * sum_ij (w_ij - s_i s_j / 2m) delta(c_i, c_j)
// with m the total edge weight and s the node strengths.
double modularity(const WeightedGraph& g, std::span<const int> community);

// Louvain community detection: greedy modularity ascent with node visit
// order shuffled by `seed`, followed by graph aggregation, iterated until no
// single move improves Q by more than 1e-12. Deterministic for a fixed seed.
// Requires >= 1 edge.
LouvainResult modularity_louvain(const WeightedGraph& g, std::uint64_t seed);

// The six structural measures of one network plus bookkeeping. Clustering is
// evaluated on the half of edges with the highest weights, where it retains
// dynamic range; every other measure uses the full graph. Degenerate graphs
// (no edges) yield zeros rather than errors so that downstream comparisons
// can apply their own exclusion policies.
struct MeasureRecord {
  double average_strength = 0.0;
  double aspl = 0.0;
  double reachable_pair_fraction = 0.0;
  double average_cc = 0.0;
  double modularity = 0.0;
  Eigen::VectorXd node_strengths;
  std::vector<Edge> edge_weights;
};

MeasureRecord measure_graph(const WeightedGraph& g, std::uint64_t louvain_seed);

}  // namespace semnet

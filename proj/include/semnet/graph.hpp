#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace semnet {

// Undirected edge with canonical orientation a < b.
struct Edge {
  int a = 0;
  int b = 0;
  double weight = 0.0;
};

// Immutable weighted undirected graph over a contiguous node index range.
// Invariants, enforced at construction: weights in (0, 1], no self-loops,
// no duplicate edges. Once built, all accessors are const and safe to share
// across threads; mutation means constructing a new graph.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(int node_count, std::vector<Edge> edges,
                std::vector<std::string> labels = {});

  int node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  // Neighbors of `node`, sorted ascending by neighbor index.
  std::span<const std::pair<int, double>> neighbors(int node) const;
  int degree(int node) const;

  // Weight of (i, j); 0 when the edge is absent.
  double weight(int i, int j) const;
  bool has_edge(int i, int j) const { return weight(i, j) > 0.0; }

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(int node) const;
  const std::vector<std::string>& labels() const { return labels_; }
  // Index of the node carrying `label`, or -1.
  int find_label(const std::string& label) const;

  double total_edge_weight() const;

  void require_node(int node) const;

 private:
  int node_count_ = 0;
  std::vector<Edge> edges_;  // sorted by (a, b)
  std::vector<std::pair<int, double>> adjacency_;
  std::vector<std::size_t> offsets_;
  std::vector<std::string> labels_;
};

// Induced subgraph on `nodes`, re-indexed contiguously in the given order.
// Labels are carried over when present.
WeightedGraph subgraph(const WeightedGraph& g, std::span<const int> nodes);

// Edge-list text serialization: a `#nodes N` header, optional `#label i word`
// and `#meta key value` lines, then one `a<TAB>b<TAB>w` line per edge with
// weights printed to 9 significant digits.
void save_graph(std::ostream& out, const WeightedGraph& g,
                std::span<const std::pair<std::string, std::string>> meta = {});
void save_graph(const std::filesystem::path& path, const WeightedGraph& g,
                std::span<const std::pair<std::string, std::string>> meta = {});

WeightedGraph load_graph(std::istream& in);
WeightedGraph load_graph(const std::filesystem::path& path);

// Locale-independent shortest round-trip style formatting used across all
// text outputs: 9 significant digits, general format.
std::string format_real(double value);

}  // namespace semnet

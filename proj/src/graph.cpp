#include "semnet/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace semnet {

WeightedGraph::WeightedGraph(int node_count, std::vector<Edge> edges,
                             std::vector<std::string> labels)
    : node_count_(node_count), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (node_count_ < 0) throw std::invalid_argument("graph: negative node count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != node_count_) {
    throw std::invalid_argument("graph: label count does not match node count");
  }
  for (Edge& e : edges_) {
    if (e.a == e.b) throw std::invalid_argument("graph: self-loop rejected");
    if (e.a > e.b) std::swap(e.a, e.b);
    if (e.a < 0 || e.b >= node_count_) throw std::invalid_argument("graph: edge endpoint out of range");
    if (!(e.weight > 0.0) || e.weight > 1.0 || !std::isfinite(e.weight)) {
      throw std::invalid_argument("graph: edge weight outside (0, 1]");
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].a == edges_[i - 1].a && edges_[i].b == edges_[i - 1].b) {
      throw std::invalid_argument("graph: duplicate edge");
    }
  }

  std::vector<std::size_t> degree(node_count_ + 1, 0);
  for (const Edge& e : edges_) {
    ++degree[e.a];
    ++degree[e.b];
  }
  offsets_.assign(node_count_ + 1, 0);
  for (int i = 0; i < node_count_; ++i) offsets_[i + 1] = offsets_[i] + degree[i];
  adjacency_.resize(2 * edges_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[cursor[e.a]++] = {e.b, e.weight};
    adjacency_[cursor[e.b]++] = {e.a, e.weight};
  }
  for (int i = 0; i < node_count_; ++i) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]));
  }
}

void WeightedGraph::require_node(int node) const {
  if (node < 0 || node >= node_count_) {
    throw std::invalid_argument("graph: unknown node id " + std::to_string(node));
  }
}

std::span<const std::pair<int, double>> WeightedGraph::neighbors(int node) const {
  require_node(node);
  return {adjacency_.data() + offsets_[node], offsets_[node + 1] - offsets_[node]};
}

int WeightedGraph::degree(int node) const {
  require_node(node);
  return static_cast<int>(offsets_[node + 1] - offsets_[node]);
}

double WeightedGraph::weight(int i, int j) const {
  require_node(i);
  require_node(j);
  const auto nbrs = neighbors(i);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), j,
                             [](const std::pair<int, double>& p, int v) { return p.first < v; });
  if (it != nbrs.end() && it->first == j) return it->second;
  return 0.0;
}

const std::string& WeightedGraph::label(int node) const {
  require_node(node);
  static const std::string empty;
  return labels_.empty() ? empty : labels_[node];
}

int WeightedGraph::find_label(const std::string& label) const {
  for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
    if (labels_[i] == label) return i;
  }
  return -1;
}

double WeightedGraph::total_edge_weight() const {
  double total = 0.0;
  for (const Edge& e : edges_) total += e.weight;
  return total;
}

WeightedGraph subgraph(const WeightedGraph& g, std::span<const int> nodes) {
  std::vector<int> remap(g.node_count(), -1);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    g.require_node(nodes[i]);
    if (remap[nodes[i]] != -1) throw std::invalid_argument("subgraph: duplicate node in selection");
    remap[nodes[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const int a = remap[e.a];
    const int b = remap[e.b];
    if (a != -1 && b != -1) edges.push_back({a, b, e.weight});
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(nodes.size());
    for (int n : nodes) labels.push_back(g.label(n));
  }
  return WeightedGraph(static_cast<int>(nodes.size()), std::move(edges), std::move(labels));
}

std::string format_real(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 9);
  if (ec != std::errc{}) throw std::runtime_error("format_real: conversion failed");
  return std::string(buf, ptr);
}

void save_graph(std::ostream& out, const WeightedGraph& g,
                std::span<const std::pair<std::string, std::string>> meta) {
  out << "#nodes " << g.node_count() << "\n";
  for (const auto& [key, value] : meta) out << "#meta " << key << " " << value << "\n";
  if (g.has_labels()) {
    for (int i = 0; i < g.node_count(); ++i) out << "#label " << i << " " << g.label(i) << "\n";
  }
  for (const Edge& e : g.edges()) {
    out << e.a << "\t" << e.b << "\t" << format_real(e.weight) << "\n";
  }
}

void save_graph(const std::filesystem::path& path, const WeightedGraph& g,
                std::span<const std::pair<std::string, std::string>> meta) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  save_graph(out, g, meta);
}

WeightedGraph load_graph(std::istream& in) {
  std::string line;
  int node_count = -1;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream header(line);
      std::string tag;
      header >> tag;
      if (tag == "#nodes") {
        header >> node_count;
        if (node_count >= 0) labels.assign(static_cast<std::size_t>(node_count), "");
      } else if (tag == "#label") {
        int idx = -1;
        std::string word;
        header >> idx >> word;
        if (idx < 0 || idx >= node_count) {
          throw std::runtime_error("graph load: label index out of range at line " +
                                   std::to_string(line_no));
        }
        labels[static_cast<std::size_t>(idx)] = word;
      }
      // #meta lines are provenance; skipped on load.
      continue;
    }
    std::istringstream row(line);
    Edge e;
    if (!(row >> e.a >> e.b >> e.weight)) {
      throw std::runtime_error("graph load: malformed edge at line " + std::to_string(line_no));
    }
    edges.push_back(e);
  }
  if (node_count < 0) throw std::runtime_error("graph load: missing '#nodes' header");
  const bool any_label = std::any_of(labels.begin(), labels.end(),
                                     [](const std::string& s) { return !s.empty(); });
  if (!any_label) labels.clear();
  return WeightedGraph(node_count, std::move(edges), std::move(labels));
}

WeightedGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path.string());
  return load_graph(in);
}

}  // namespace semnet

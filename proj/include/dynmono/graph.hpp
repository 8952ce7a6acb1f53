#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dynmono {

using Vertex = std::uint32_t;

// Simple undirected graph with vertex ids 0..n-1 and sorted adjacency lists.
// Immutable once constructed.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from an edge list. Throws InputError on a self-loop,
  // duplicate edge or out-of-range endpoint.
  static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex u) const { return adjacency_[u]; }
  std::size_t degree(Vertex u) const { return adjacency_[u].size(); }
  std::size_t max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;

  // Edges with u < v in ascending lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Length of a shortest cycle; std::nullopt means the graph is acyclic.
struct Girth {
  std::optional<std::size_t> value;

  bool acyclic() const { return !value.has_value(); }
  // True when every cycle has length at least `bound` (vacuous when acyclic).
  bool at_least(std::size_t bound) const { return !value || *value >= bound; }
};

// Edge-list document: '#' comment lines, a header "n m", then m lines "u v".
// Errors are reported as InputError with the offending line number.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

Graph load_graph(const std::string& path);

Girth girth(const Graph& g);

// Blocks are listed in order of their smallest vertex; each block is sorted.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  // new id -> old id (ascending); old -> new is its inverse.
  std::vector<Vertex> to_parent;
};

// `keep` may be given in any order; duplicates are ignored.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

}  // namespace dynmono

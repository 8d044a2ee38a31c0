#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bary {

/// Finite simple graph on vertices 0..n-1. Edges are stored once in
/// (min,max) order and kept sorted; the adjacency structure is built
/// eagerly so membership tests are O(log deg).
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int order() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int a, int b) const;
  bool empty() const { return n_ == 0; }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

// Sorted vertex index list; the carrier for subgraph supports and simplices.
using VertexSet = std::vector<int>;

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Named generators. All are deterministic; erdos_renyi draws each pair
// (i<j) in lexicographic order from a std::mt19937_64 seeded as given,
// taking the 53 high bits as a uniform double in [0,1).
Graph complete_graph(int n);
Graph cycle_graph(int n);       // n >= 3
Graph path_graph(int n);        // n >= 1
Graph wheel_graph(int n);       // hub + cycle of n >= 3 rim vertices
Graph star_graph(int n);        // center 0 plus n leaves
Graph cross_polytope(int d);    // d-sphere on 2(d+1) vertices
Graph icosahedron();
Graph erdos_renyi(int n, double p, std::uint64_t seed);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_host;  // local index -> vertex of the host graph
};

InducedSubgraph induced(const Graph& g, const VertexSet& support);
InducedSubgraph unit_sphere(const Graph& g, int x);

// |E(G) symmetric-difference E(H)| on an identified vertex set.
std::size_t edge_distance(const Graph& g, const Graph& h);

Graph disjoint_union(const Graph& g, int copies);

// Text format: first line n, then "i j" per edge, '#' starts a comment.
std::string to_text(const Graph& g);
Graph from_text(const std::string& text);
std::string to_json(const Graph& g);
Graph from_json(const std::string& text);

}  // namespace bary

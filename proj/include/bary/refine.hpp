#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bary/clique.hpp"
#include "bary/graph.hpp"

namespace bary {

/// Barycentric refinement together with the provenance map: vertex i of
/// the refinement is the simplex source[i] of the parent graph.
struct RefinedGraph {
  Graph graph;
  std::vector<VertexSet> source;
};

struct SizeLimitError : std::runtime_error {
  SizeLimitError(std::string what, std::string predicted)
      : std::runtime_error(std::move(what)), predicted_size(std::move(predicted)) {}
  std::string predicted_size;  // decimal, may exceed 64 bits
};

// Vertices are all simplices of the Whitney complex sorted by
// (dimension, lex support); edges are strict containment pairs.
RefinedGraph barycentric(const Graph& g);

struct RefineOptions {
  std::optional<std::string> cache_dir;
  long long size_limit = 200000;  // max simplex count of any intermediate
};

// Iterated refinement G_m with on-disk caching keyed by
// (sha256 of the input graph's text form, level). Throws SizeLimitError
// when the operator-predicted vertex count exceeds the limit.
RefinedGraph refine_iter(const Graph& g, int m, const RefineOptions& opt = {});

// Vertices are pairs of simplices (one per factor); two pairs are joined
// when both coordinates are contained in the same direction.
// graph_product(G, K1) coincides with barycentric(G) vertex-for-vertex.
Graph graph_product(const Graph& g, const Graph& h);

enum class BoundaryMode { exact, euler };

struct BoundaryResult {
  Graph graph;
  std::vector<int> to_host;
  bool conclusive = true;  // false when the exact mode ran out of budget
};

// Induced subgraph on the boundary vertices: exact mode runs sphere
// recognition per unit sphere, euler mode selects chi(S(x)) == 1.
BoundaryResult boundary(const Graph& g, BoundaryMode mode,
                        long long budget = 1000000);

// Proper coloring of a refinement by source-simplex dimension.
std::vector<int> dimension_coloring(const RefinedGraph& g);

}  // namespace bary

#pragma once

#include <string>

#include "bary/graph.hpp"

namespace bary {

// Isomorphism-invariant key for small graphs (n <= 12): degree-refined
// partitioning followed by exhaustive tie-breaking over cell orderings,
// picking the lexicographically smallest adjacency encoding. Larger
// graphs (or blown-up tie-break spaces) fall back to the labeled
// adjacency encoding, which is still a valid memo key, just coarser.
std::string canonical_key(const Graph& g);

// The labeled (non-canonical) encoding: exact on identity of labeling.
std::string exact_key(const Graph& g);

}  // namespace bary

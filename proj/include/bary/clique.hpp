#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "bary/graph.hpp"

namespace bary {

// Counts (v_0,...,v_d) of K_{k+1} subgraphs, trailing zeros trimmed.
using CliqueVector = std::vector<long long>;

// All k-cliques (vertex sets of size k spanning complete subgraphs), in
// lexicographic order. Built by extending (k-1)-cliques with a vertex
// above their maximum adjacent to every member.
std::vector<VertexSet> enumerate_cliques(const Graph& g, int k);

// Simplices of the Whitney complex sorted by (dimension, lex support).
std::vector<VertexSet> all_simplices(const Graph& g);

CliqueVector clique_vector(const Graph& g);
long long euler_characteristic(const Graph& g);
double euler_polynomial(const Graph& g, double x);
int clique_number(const Graph& g);
mpq_class graph_density(const Graph& g);

// Inductive dimension, exact rational, memoized across calls through the
// shared cache object.
class DimensionCache {
 public:
  mpq_class dimension(const Graph& g);

 private:
  std::map<std::string, mpq_class> memo_;
};

mpq_class dimension(const Graph& g);

// Sorted-ascending degree sequence (the step function H_G lives in
// stepfun.hpp; this returns its value list).
std::vector<double> degree_sequence(const Graph& g);

// K(x) = 1 - V_0/2 + V_1/3 - ... with V the clique vector of S(x).
mpq_class curvature(const Graph& g, int x);

// CliqueVector serialization: comma separated, lowest dimension first.
std::string to_string(const CliqueVector& v);

}  // namespace bary

#include "bary/graph.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace bary {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
  adj_.resize(n_);
  for (auto [a, b] : edges_) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int a, int b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
  const auto& nb = adj_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("make_graph: negative vertex count");
  std::set<std::pair<int, int>> canon;
  for (auto [a, b] : edges) {
    if (a == b)
      throw std::invalid_argument("make_graph: self-loop at vertex " +
                                  std::to_string(a));
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw std::invalid_argument("make_graph: edge (" + std::to_string(a) +
                                  "," + std::to_string(b) + ") out of range");
    canon.insert({std::min(a, b), std::max(a, b)});
  }
  return Graph(n, {canon.begin(), canon.end()});
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph: n >= 1 required");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return make_graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n >= 3 required");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return make_graph(n, e);
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph: n >= 1 required");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return make_graph(n, e);
}

Graph wheel_graph(int n) {
  if (n < 3) throw std::invalid_argument("wheel_graph: rim size >= 3 required");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i) {
    e.push_back({0, i});
    e.push_back({i, i == n ? 1 : i + 1});
  }
  return make_graph(n + 1, e);
}

Graph star_graph(int n) {
  if (n < 1) throw std::invalid_argument("star_graph: n >= 1 leaves required");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i) e.push_back({0, i});
  return make_graph(n + 1, e);
}

Graph cross_polytope(int d) {
  if (d < 0) throw std::invalid_argument("cross_polytope: d >= 0 required");
  // Vertices 2i, 2i+1 are antipodal; every non-antipodal pair is joined.
  int n = 2 * (d + 1);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(i / 2 == j / 2)) e.push_back({i, j});
  return make_graph(n, e);
}

Graph icosahedron() {
  // 12 vertices, 30 edges, all unit spheres C5.
  static const int E[30][2] = {
      {0, 1},  {0, 2},  {0, 3},  {0, 4},  {0, 5},  {1, 2},  {2, 3},  {3, 4},
      {4, 5},  {5, 1},  {1, 6},  {1, 7},  {2, 7},  {2, 8},  {3, 8},  {3, 9},
      {4, 9},  {4, 10}, {5, 10}, {5, 6},  {6, 7},  {7, 8},  {8, 9},  {9, 10},
      {10, 6}, {6, 11}, {7, 11}, {8, 11}, {9, 11}, {10, 11}};
  std::vector<std::pair<int, int>> e;
  for (auto& p : E) e.push_back({p[0], p[1]});
  return make_graph(12, e);
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
  if (n < 0 || p < 0.0 || p > 1.0)
    throw std::invalid_argument("erdos_renyi: bad parameters");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) e.push_back({i, j});
    }
  return make_graph(n, e);
}

InducedSubgraph induced(const Graph& g, const VertexSet& support) {
  std::vector<int> map(g.order(), -1);
  for (std::size_t i = 0; i < support.size(); ++i) {
    int v = support[i];
    if (v < 0 || v >= g.order())
      throw std::invalid_argument("induced: vertex out of range");
    map[v] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> e;
  for (auto [a, b] : g.edges())
    if (map[a] >= 0 && map[b] >= 0) e.push_back({map[a], map[b]});
  return {make_graph(static_cast<int>(support.size()), e), support};
}

InducedSubgraph unit_sphere(const Graph& g, int x) {
  if (x < 0 || x >= g.order())
    throw std::invalid_argument("unit_sphere: vertex out of range");
  return induced(g, g.neighbors(x));
}

std::size_t edge_distance(const Graph& g, const Graph& h) {
  if (g.order() != h.order())
    throw std::invalid_argument("edge_distance: vertex count mismatch");
  std::size_t common = 0;
  const auto& a = g.edges();
  const auto& b = h.edges();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++common, ++i, ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return a.size() + b.size() - 2 * common;
}

Graph disjoint_union(const Graph& g, int copies) {
  if (copies < 1) throw std::invalid_argument("disjoint_union: copies >= 1");
  std::vector<std::pair<int, int>> e;
  for (int c = 0; c < copies; ++c)
    for (auto [a, b] : g.edges())
      e.push_back({a + c * g.order(), b + c * g.order()});
  return make_graph(g.order() * copies, e);
}

std::string to_text(const Graph& g) {
  std::ostringstream os;
  os << g.order() << "\n";
  for (auto [a, b] : g.edges()) os << a << " " << b << "\n";
  return os.str();
}

Graph from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> e;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (n < 0) {
      if (ls >> n) continue;
      continue;  // leading blank/comment lines
    }
    int a, b;
    if (ls >> a >> b) e.push_back({a, b});
  }
  if (n < 0) throw std::invalid_argument("from_text: missing vertex count");
  return make_graph(n, e);
}

std::string to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  j["edges"] = nlohmann::json::array();
  for (auto [a, b] : g.edges()) j["edges"].push_back({a, b});
  return j.dump();
}

Graph from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::vector<std::pair<int, int>> e;
  for (auto& pr : j.at("edges")) e.push_back({pr.at(0), pr.at(1)});
  return make_graph(j.at("n"), e);
}

}  // namespace bary

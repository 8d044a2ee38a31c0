#include "bary/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bary {
namespace {

std::string adjacency_bits(const Graph& g, const std::vector<int>& order) {
  int n = g.order();
  std::string bits(static_cast<std::size_t>(n) * n, '0');
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.has_edge(order[i], order[j]))
        bits[static_cast<std::size_t>(i) * n + j] = '1';
  return bits;
}

// Iterative color refinement: color <- (color, sorted neighbor colors).
std::vector<int> refined_colors(const Graph& g) {
  int n = g.order();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s;
      s.push_back(color[v]);
      for (int u : g.neighbors(v)) s.push_back(color[u]);
      std::sort(s.begin() + 1, s.end());
      sig[v] = {std::move(s), v};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(n);
    int c = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (i > 0 && sorted[i].first != sorted[i - 1].first) ++c;
      next[sorted[i].second] = c;
    }
    if (next == color) break;
    color = next;
  }
  return color;
}

void enumerate_orders(const std::vector<std::vector<int>>& cells,
                      std::size_t cell, std::vector<int>& order,
                      const Graph& g, std::string& best) {
  if (cell == cells.size()) {
    std::string bits = adjacency_bits(g, order);
    if (best.empty() || bits < best) best = std::move(bits);
    return;
  }
  std::vector<int> perm = cells[cell];
  std::sort(perm.begin(), perm.end());
  do {
    std::size_t base = order.size();
    order.insert(order.end(), perm.begin(), perm.end());
    enumerate_orders(cells, cell + 1, order, g, best);
    order.resize(base);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

std::string exact_key(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ";";
  for (auto [a, b] : g.edges()) os << a << "," << b << ";";
  return os.str();
}

std::string canonical_key(const Graph& g) {
  int n = g.order();
  if (n == 0) return "0;";
  if (n > 12) return exact_key(g);
  auto color = refined_colors(g);
  int ncells = *std::max_element(color.begin(), color.end()) + 1;
  std::vector<std::vector<int>> cells(ncells);
  for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
  double work = 1;
  for (auto& c : cells) {
    for (std::size_t k = 2; k <= c.size(); ++k) work *= static_cast<double>(k);
    if (work > 20000) return exact_key(g);
  }
  std::string best;
  std::vector<int> order;
  order.reserve(n);
  enumerate_orders(cells, 0, order, g, best);
  return std::to_string(n) + ":" + best;
}

}  // namespace bary

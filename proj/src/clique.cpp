#include "bary/clique.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bary/canonical.hpp"

namespace bary {

namespace {

// One extension level: append every admissible vertex above the clique's
// maximum. Parallel over parents; concatenation order keeps the output
// lexicographic because parents are lexicographic.
std::vector<VertexSet> extend_level(const Graph& g,
                                    const std::vector<VertexSet>& prev) {
  std::vector<std::vector<VertexSet>> parts(prev.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (long long i = 0; i < static_cast<long long>(prev.size()); ++i) {
    const auto& c = prev[i];
    for (int v = c.back() + 1; v < g.order(); ++v) {
      bool ok = true;
      for (int u : c)
        if (!g.has_edge(u, v)) {
          ok = false;
          break;
        }
      if (ok) {
        auto ext = c;
        ext.push_back(v);
        parts[i].push_back(std::move(ext));
      }
    }
  }
  std::vector<VertexSet> out;
  for (auto& p : parts)
    out.insert(out.end(), std::make_move_iterator(p.begin()),
               std::make_move_iterator(p.end()));
  return out;
}

}  // namespace

std::vector<VertexSet> enumerate_cliques(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("enumerate_cliques: k >= 1 required");
  std::vector<VertexSet> level;
  for (int v = 0; v < g.order(); ++v) level.push_back({v});
  for (int size = 1; size < k && !level.empty(); ++size)
    level = extend_level(g, level);
  return level;
}

std::vector<VertexSet> all_simplices(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<VertexSet> level;
  for (int v = 0; v < g.order(); ++v) level.push_back({v});
  while (!level.empty()) {
    out.insert(out.end(), level.begin(), level.end());
    level = extend_level(g, level);
  }
  return out;
}

CliqueVector clique_vector(const Graph& g) {
  CliqueVector v;
  std::vector<VertexSet> level;
  for (int x = 0; x < g.order(); ++x) level.push_back({x});
  while (!level.empty()) {
    v.push_back(static_cast<long long>(level.size()));
    level = extend_level(g, level);
  }
  return v;
}

long long euler_characteristic(const Graph& g) {
  auto v = clique_vector(g);
  long long chi = 0;
  for (std::size_t k = 0; k < v.size(); ++k) chi += (k % 2 ? -v[k] : v[k]);
  return chi;
}

double euler_polynomial(const Graph& g, double x) {
  auto v = clique_vector(g);
  double acc = 0, xp = 1;
  for (long long vk : v) {
    acc += static_cast<double>(vk) * xp;
    xp *= x;
  }
  return acc;
}

int clique_number(const Graph& g) {
  return static_cast<int>(clique_vector(g).size());
}

mpq_class graph_density(const Graph& g) {
  long long n = g.order();
  if (n < 2) throw std::invalid_argument("graph_density: n >= 2 required");
  mpq_class d(static_cast<long>(g.edge_count()),
              static_cast<long>(n * (n - 1) / 2));
  d.canonicalize();
  return d;
}

mpq_class DimensionCache::dimension(const Graph& g) {
  if (g.empty()) return mpq_class(-1);
  std::string key = canonical_key(g);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  mpq_class sum = 0;
  for (int x = 0; x < g.order(); ++x)
    sum += dimension(unit_sphere(g, x).graph);
  mpq_class result = 1 + sum / g.order();
  result.canonicalize();
  memo_.emplace(std::move(key), result);
  return result;
}

mpq_class dimension(const Graph& g) {
  DimensionCache cache;
  return cache.dimension(g);
}

std::vector<double> degree_sequence(const Graph& g) {
  std::vector<double> d;
  for (int v = 0; v < g.order(); ++v)
    d.push_back(static_cast<double>(g.degree(v)));
  std::sort(d.begin(), d.end());
  return d;
}

mpq_class curvature(const Graph& g, int x) {
  auto sphere = unit_sphere(g, x).graph;
  auto v = clique_vector(sphere);
  mpq_class k = 1;
  for (std::size_t j = 0; j < v.size(); ++j) {
    mpq_class term(static_cast<long>(v[j]), static_cast<long>(j) + 2);
    k += (j % 2 ? term : -term);
  }
  k.canonicalize();
  return k;
}

std::string to_string(const CliqueVector& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

}  // namespace bary

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "bary/clique.hpp"
#include "bary/graph.hpp"
#include "bary/refine.hpp"

using namespace bary;

namespace {

// Independent oracle: test every C(n,k) subset directly.
std::vector<VertexSet> brute_force_cliques(const Graph& g, int k) {
  std::vector<VertexSet> out;
  std::vector<int> pick(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if (!g.has_edge(pick[i], pick[j])) return;
      out.push_back(VertexSet(pick.begin(), pick.end()));
      return;
    }
    for (int v = start; v < g.order(); ++v) {
      pick[depth] = v;
      rec(v + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

// Direct recursion, no memoization: the dimension oracle.
mpq_class dimension_oracle(const Graph& g) {
  if (g.empty()) return mpq_class(-1);
  mpq_class sum = 0;
  for (int x = 0; x < g.order(); ++x)
    sum += dimension_oracle(unit_sphere(g, x).graph);
  mpq_class r = 1 + sum / g.order();
  r.canonicalize();
  return r;
}

std::vector<Graph> corpus() {
  std::vector<Graph> out{complete_graph(2), complete_graph(3),
                         complete_graph(4), cycle_graph(4),  cycle_graph(5),
                         cycle_graph(6),    path_graph(4),   star_graph(3),
                         wheel_graph(5),    cross_polytope(2), icosahedron()};
  std::mt19937_64 rng(99);
  for (int i = 0; i < 6; ++i) out.push_back(erdos_renyi(8, 0.4, rng()));
  return out;
}

}  // namespace

TEST_CASE("clique enumeration matches the all-subsets oracle") {
  for (const auto& g : corpus()) {
    if (g.order() > 9) continue;
    for (int k = 1; k <= 5; ++k) {
      auto fast = enumerate_cliques(g, k);
      auto slow = brute_force_cliques(g, k);
      CHECK(fast == slow);  // both lexicographic
    }
  }
}

TEST_CASE("clique vectors of named graphs") {
  CHECK(clique_vector(complete_graph(3)) == CliqueVector{3, 3, 1});
  CHECK(clique_vector(complete_graph(4)) == CliqueVector{4, 6, 4, 1});
  CHECK(clique_vector(cross_polytope(2)) == CliqueVector{6, 12, 8});
  CHECK(clique_vector(cycle_graph(5)) == CliqueVector{5, 5});
  CHECK(enumerate_cliques(complete_graph(4), 3).size() == 4);
  CHECK(enumerate_cliques(cycle_graph(5), 3).empty());
  CHECK(enumerate_cliques(cross_polytope(2), 3).size() == 8);
  CHECK(clique_vector(barycentric(complete_graph(3)).graph) ==
        CliqueVector{7, 12, 6});
}

TEST_CASE("euler characteristic and polynomial") {
  CHECK(euler_characteristic(cross_polytope(2)) == 2);
  for (int n = 1; n <= 6; ++n)
    CHECK(euler_characteristic(complete_graph(n)) == 1);
  CHECK(euler_characteristic(cycle_graph(4)) == 0);
  CHECK(euler_polynomial(complete_graph(3), 1) == doctest::Approx(7));
  CHECK(euler_polynomial(complete_graph(3), -1) == doctest::Approx(1));
  CHECK(euler_polynomial(cycle_graph(4), 2) == doctest::Approx(12));
}

TEST_CASE("clique number and density") {
  CHECK(clique_number(complete_graph(5)) == 5);
  CHECK(clique_number(path_graph(6)) == 2);  // tree
  CHECK(graph_density(complete_graph(4)) == 1);
  CHECK(graph_density(cycle_graph(4)) == mpq_class(2, 3));
}

TEST_CASE("inductive dimension") {
  for (int d = 0; d <= 4; ++d)
    CHECK(dimension(complete_graph(d + 1)) == d);
  CHECK(dimension(cycle_graph(4)) == 1);
  CHECK(dimension(star_graph(3)) == 1);
  for (const auto& g : corpus()) {
    if (g.order() > 9) continue;
    CHECK(dimension(g) == dimension_oracle(g));
  }
}

TEST_CASE("dimension grows under refinement") {
  for (const auto& g : corpus()) {
    if (g.order() > 8 || g.empty()) continue;
    CHECK(dimension(barycentric(g).graph) >= dimension(g));
  }
}

TEST_CASE("degree sequence step data") {
  auto d = degree_sequence(cycle_graph(6));
  CHECK(std::all_of(d.begin(), d.end(), [](double x) { return x == 2; }));
  d = degree_sequence(complete_graph(4));
  CHECK(std::all_of(d.begin(), d.end(), [](double x) { return x == 3; }));
  CHECK(degree_sequence(star_graph(3)) == std::vector<double>{1, 1, 1, 3});
}

TEST_CASE("curvature") {
  // Interior vertex of a flat 2-graph patch: K = 1 - d/6 at degree 6.
  auto w = wheel_graph(6);
  CHECK(curvature(w, 0) == 0);
  CHECK(curvature(make_graph(1, {}), 0) == 1);
  for (int v = 0; v < 12; ++v)
    CHECK(curvature(icosahedron(), v) == mpq_class(1, 6));
}

TEST_CASE("Gauss-Bonnet on the corpus") {
  for (const auto& g : corpus()) {
    mpq_class total = 0;
    for (int v = 0; v < g.order(); ++v) total += curvature(g, v);
    total.canonicalize();
    CHECK(total == static_cast<long>(euler_characteristic(g)));
  }
}

TEST_CASE("dimension coloring is proper on refinements") {
  for (const auto& g : corpus()) {
    if (g.order() > 8 || g.empty()) continue;
    auto r = barycentric(g);
    auto color = dimension_coloring(r);
    for (auto [a, b] : r.graph.edges()) CHECK(color[a] != color[b]);
    int used = *std::max_element(color.begin(), color.end()) + 1;
    CHECK(used == clique_number(g));
  }
  auto edge = barycentric(complete_graph(2));
  auto c = dimension_coloring(edge);
  CHECK(*std::max_element(c.begin(), c.end()) == 1);
  // bipartite by dimension parity
  auto c5 = barycentric(cycle_graph(5));
  for (auto [a, b] : c5.graph.edges())
    CHECK(dimension_coloring(c5)[a] != dimension_coloring(c5)[b]);
  RefinedGraph unlabeled;
  unlabeled.graph = complete_graph(2);
  CHECK_THROWS_AS(dimension_coloring(unlabeled), std::invalid_argument);
}

TEST_CASE("serialization of clique vectors") {
  CHECK(to_string(CliqueVector{6, 12, 8}) == "6,12,8");
  CHECK(to_string(CliqueVector{}) == "");
}

#include "bary/topology.hpp"

#include <stdexcept>

#include "bary/canonical.hpp"
#include "bary/clique.hpp"

namespace bary {

namespace {

Verdict verdict(Answer a, TopologyBudget& b, std::vector<int> witness = {}) {
  Verdict v;
  v.answer = a;
  v.witness = std::move(witness);
  v.budget_spent = b.spent();
  return v;
}

Verdict is_ball(const Graph& g, int d, TopologyBudget& budget);

}  // namespace

Verdict is_contractible(const Graph& g, TopologyBudget& budget) {
  if (!budget.spend()) return verdict(Answer::inconclusive, budget);
  if (g.empty()) return verdict(Answer::no, budget);
  if (g.order() == 1) return verdict(Answer::yes, budget, {0});
  std::string key = canonical_key(g);
  if (auto it = budget.contractible_memo.find(key);
      it != budget.contractible_memo.end())
    return verdict(it->second, budget);
  // Contractible graphs have Euler characteristic 1; cheap exact pruning.
  if (euler_characteristic(g) != 1) {
    budget.contractible_memo[key] = Answer::no;
    return verdict(Answer::no, budget);
  }
  bool any_inconclusive = false;
  for (int x = 0; x < g.order(); ++x) {
    auto sphere = is_contractible(unit_sphere(g, x).graph, budget);
    if (sphere.answer == Answer::inconclusive) {
      any_inconclusive = true;
      continue;
    }
    if (sphere.no()) continue;
    VertexSet rest;
    for (int v = 0; v < g.order(); ++v)
      if (v != x) rest.push_back(v);
    auto sub = induced(g, rest);
    auto comp = is_contractible(sub.graph, budget);
    if (comp.answer == Answer::inconclusive) {
      any_inconclusive = true;
      continue;
    }
    if (comp.yes()) {
      std::vector<int> order{x};
      for (int w : comp.witness) order.push_back(sub.to_host[w]);
      budget.contractible_memo[key] = Answer::yes;
      if (euler_characteristic(g) != 1)
        throw std::logic_error("contractibility search broke chi == 1");
      return verdict(Answer::yes, budget, std::move(order));
    }
  }
  if (any_inconclusive) return verdict(Answer::inconclusive, budget);
  budget.contractible_memo[key] = Answer::no;
  return verdict(Answer::no, budget);
}

Verdict is_sphere(const Graph& g, int d, TopologyBudget& budget) {
  if (!budget.spend()) return verdict(Answer::inconclusive, budget);
  if (d == -1) return verdict(g.empty() ? Answer::yes : Answer::no, budget);
  if (g.empty()) return verdict(Answer::no, budget);
  auto key = std::make_pair(canonical_key(g), d);
  if (auto it = budget.sphere_memo.find(key); it != budget.sphere_memo.end())
    return verdict(it->second, budget);
  if (euler_characteristic(g) != (d % 2 == 0 ? 2 : 0)) {
    budget.sphere_memo[key] = Answer::no;
    return verdict(Answer::no, budget);
  }
  bool any_inconclusive = false;
  for (int x = 0; x < g.order(); ++x) {
    auto sub = is_sphere(unit_sphere(g, x).graph, d - 1, budget);
    if (sub.answer == Answer::inconclusive) any_inconclusive = true;
    if (sub.no()) {
      budget.sphere_memo[key] = Answer::no;
      return verdict(Answer::no, budget, {x});
    }
  }
  if (any_inconclusive) return verdict(Answer::inconclusive, budget);
  // Puncture: some vertex removal leaves a contractible graph.
  for (int x = 0; x < g.order(); ++x) {
    VertexSet rest;
    for (int v = 0; v < g.order(); ++v)
      if (v != x) rest.push_back(v);
    auto punctured = is_contractible(induced(g, rest).graph, budget);
    if (punctured.yes()) {
      budget.sphere_memo[key] = Answer::yes;
      if (euler_characteristic(g) != (d % 2 == 0 ? 2 : 0))
        throw std::logic_error("sphere search broke chi cross-check");
      return verdict(Answer::yes, budget, {x});
    }
    if (punctured.answer == Answer::inconclusive) any_inconclusive = true;
  }
  if (any_inconclusive) return verdict(Answer::inconclusive, budget);
  budget.sphere_memo[key] = Answer::no;
  return verdict(Answer::no, budget);
}

namespace {

// d-graph-with-boundary whose boundary is a (d-1)-sphere. The boundary
// is the set of vertices whose unit sphere is not a sphere.
Verdict is_ball(const Graph& g, int d, TopologyBudget& budget) {
  if (!budget.spend()) return verdict(Answer::inconclusive, budget);
  if (g.empty()) return verdict(Answer::no, budget);
  // Base cases where the boundary construction below degenerates: the
  // single vertex is the 0-ball and a single edge is the 1-ball.
  if (d == 0) return verdict(g.order() == 1 ? Answer::yes : Answer::no, budget);
  if (d == 1 && g.order() == 2 && g.edge_count() == 1)
    return verdict(Answer::yes, budget);
  VertexSet bnd;
  for (int x = 0; x < g.order(); ++x) {
    auto sph = unit_sphere(g, x).graph;
    auto as_sphere = is_sphere(sph, d - 1, budget);
    if (as_sphere.yes()) continue;
    if (as_sphere.answer == Answer::inconclusive)
      return verdict(Answer::inconclusive, budget);
    auto as_ball = is_ball(sph, d - 1, budget);
    if (as_ball.answer != Answer::yes) return verdict(as_ball.answer, budget, {x});
    bnd.push_back(x);
  }
  auto ring = is_sphere(induced(g, bnd).graph, d - 1, budget);
  return verdict(ring.answer, budget, bnd);
}

}  // namespace

Verdict is_contractible(const Graph& g, long long budget) {
  TopologyBudget b(budget);
  return is_contractible(g, b);
}

Verdict is_sphere(const Graph& g, int d, long long budget) {
  TopologyBudget b(budget);
  return is_sphere(g, d, b);
}

Classification classify(const Graph& g, long long budget) {
  TopologyBudget b(budget);
  Classification out;
  if (g.empty()) return out;
  if (g.order() == 1) {
    out = {GraphClass::ball, 0, Answer::yes, 0};
    return out;
  }
  if (g.order() == 2 && g.edge_count() == 1) {
    out = {GraphClass::ball, 1, Answer::yes, 0};
    return out;
  }
  int d = clique_number(g) - 1;
  out.d = d;
  bool all_spheres = true;
  bool all_sphere_or_ball = true;
  Answer certainty = Answer::yes;
  for (int x = 0; x < g.order(); ++x) {
    auto sph = unit_sphere(g, x).graph;
    auto vs = is_sphere(sph, d - 1, b);
    if (vs.yes()) continue;
    if (vs.answer == Answer::inconclusive) certainty = Answer::inconclusive;
    all_spheres = false;
    auto vb = is_ball(sph, d - 1, b);
    if (vb.answer == Answer::inconclusive) certainty = Answer::inconclusive;
    if (!vb.yes()) all_sphere_or_ball = false;
  }
  out.budget_spent = b.spent();
  if (certainty == Answer::inconclusive) {
    out.certainty = Answer::inconclusive;
    return out;
  }
  out.certainty = Answer::yes;
  if (all_spheres) {
    out.cls = GraphClass::d_graph;
    return out;
  }
  if (!all_sphere_or_ball) {
    out.cls = GraphClass::none;
    return out;
  }
  VertexSet bnd;
  for (int x = 0; x < g.order(); ++x)
    if (!is_sphere(unit_sphere(g, x).graph, d - 1, b).yes()) bnd.push_back(x);
  auto bnd_graph = induced(g, bnd).graph;
  auto ring = is_sphere(bnd_graph, d - 1, b);
  out.budget_spent = b.spent();
  if (ring.yes()) {
    out.cls = GraphClass::ball;
    return out;
  }
  // Not a ball: still with-boundary if the boundary is a closed
  // (d-1)-graph, i.e. all its unit spheres are (d-2)-spheres.
  Answer closed = Answer::yes;
  for (int x = 0; x < bnd_graph.order() && closed != Answer::no; ++x) {
    auto vs = is_sphere(unit_sphere(bnd_graph, x).graph, d - 2, b);
    if (vs.no()) closed = Answer::no;
    else if (vs.answer == Answer::inconclusive) closed = Answer::inconclusive;
  }
  out.budget_spent = b.spent();
  if (ring.answer == Answer::inconclusive || closed == Answer::inconclusive)
    out.certainty = Answer::inconclusive;
  out.cls = closed == Answer::no ? GraphClass::none
                                 : GraphClass::d_graph_with_boundary;
  return out;
}

}  // namespace bary

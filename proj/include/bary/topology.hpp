#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bary/graph.hpp"

namespace bary {

enum class Answer { yes, no, inconclusive };

struct Verdict {
  Answer answer = Answer::inconclusive;
  std::vector<int> witness;       // collapse order, or the failing vertex
  long long budget_spent = 0;

  bool yes() const { return answer == Answer::yes; }
  bool no() const { return answer == Answer::no; }
};

// Shared search state: one memo table and one node budget per query tree.
class TopologyBudget {
 public:
  explicit TopologyBudget(long long nodes) : remaining_(nodes) {}
  bool spend() {
    if (remaining_ <= 0) return false;
    --remaining_;
    return true;
  }
  long long remaining() const { return remaining_; }
  long long spent() const { return start_ - remaining_; }

  std::map<std::string, Answer> contractible_memo;
  std::map<std::pair<std::string, int>, Answer> sphere_memo;

 private:
  long long remaining_;
  long long start_ = remaining_;
};

// Inductive contractibility: some vertex has contractible unit sphere
// and contractible complement; K1 is the base case. Exhaustive within
// the budget; every yes verdict is cross-checked against chi == 1.
Verdict is_contractible(const Graph& g, long long budget);
Verdict is_contractible(const Graph& g, TopologyBudget& budget);

// Evako d-sphere: every unit sphere a (d-1)-sphere and some vertex whose
// removal leaves a contractible graph; the (-1)-sphere is the empty graph.
Verdict is_sphere(const Graph& g, int d, long long budget);
Verdict is_sphere(const Graph& g, int d, TopologyBudget& budget);

enum class GraphClass { d_graph, d_graph_with_boundary, ball, none };

struct Classification {
  GraphClass cls = GraphClass::none;
  int d = -1;
  Answer certainty = Answer::inconclusive;
  long long budget_spent = 0;
};

Classification classify(const Graph& g, long long budget);

}  // namespace bary

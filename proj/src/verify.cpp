#include "gundam/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "gundam/solvers.hpp"

namespace gundam {
namespace {

Verdict base_verdict(const TaskInstance& instance, const Extraction& parsed) {
  Verdict v;
  v.task = instance.task;
  v.difficulty = instance.difficulty;
  v.seed = instance.seed;
  v.parsed = parsed;
  return v;
}

void mark_exact(Verdict& v) {
  v.valid = true;
  v.exact = true;
  v.partial_credit = 1.0;
  v.reason = "correct";
}

void check_polarity(Verdict& v, bool claimed, bool truth) {
  v.valid = true;
  if (claimed == truth) {
    mark_exact(v);
  } else {
    v.reason = std::string("answered ") + (claimed ? "yes" : "no") + " but the truth is " +
               (truth ? "yes" : "no");
  }
}

// Path exists in g edge-by-edge; returns total weight when weighted.
bool path_in_graph(const Graph& g, const std::vector<int>& path, Weight* total) {
  if (path.empty()) return false;
  Weight sum{};
  for (int x : path) {
    if (x < 0 || x >= g.n) return false;
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto w = g.edge_weight(path[i], path[i + 1]);
    if (!w) return false;
    sum += *w;
  }
  if (total) *total = sum;
  return true;
}

void check_shortest_path(Verdict& v, const TaskInstance& instance,
                         const NodeSequenceAnswer& answer) {
  const auto& q = std::get<PairQuery>(instance.query);
  const auto& path = answer.nodes;
  std::set<int> distinct(path.begin(), path.end());
  if (distinct.size() != path.size()) {
    v.reason = "path repeats a node";
    return;
  }
  Weight total{};
  if (!path_in_graph(instance.graph, path, &total)) {
    v.reason = "path uses an edge absent from the graph";
    return;
  }
  if (path.front() != q.u || path.back() != q.v) {
    v.reason = "path endpoints do not match the query";
    return;
  }
  v.valid = true;
  auto truth = std::get<ShortestPathAnswer>(solve_instance(instance).answer);
  if (total == truth.total) {
    mark_exact(v);
  } else {
    v.reason = "path weight " + total.str() + " is not the optimum " + truth.total.str();
  }
}

void check_topo(Verdict& v, const TaskInstance& instance, const NodeSequenceAnswer& answer) {
  const Graph& g = instance.graph;
  const auto& order = answer.nodes;
  if (static_cast<int>(order.size()) != g.n ||
      std::set<int>(order.begin(), order.end()).size() != order.size() ||
      *std::min_element(order.begin(), order.end()) != 0 ||
      *std::max_element(order.begin(), order.end()) != g.n - 1) {
    v.reason = "output is not a permutation of all nodes";
    return;
  }
  v.valid = true;
  std::vector<int> pos(static_cast<std::size_t>(g.n));
  for (int i = 0; i < g.n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  for (const auto& e : g.edges) {
    if (pos[static_cast<std::size_t>(e.u)] >= pos[static_cast<std::size_t>(e.v)]) {
      v.reason = "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                 ") is ordered head-first";
      return;
    }
  }
  mark_exact(v);
}

void check_max_flow(Verdict& v, const TaskInstance& instance, const NumericAnswer& answer) {
  v.valid = true;
  auto truth = std::get<MaxFlowAnswer>(solve_instance(instance).answer);
  double s = truth.value.to_double();
  double t = answer.value;
  if (s == 0.0) {
    // Degenerate network; the ratio rule has no denominator.
    if (t == 0.0) {
      mark_exact(v);
    } else {
      v.partial_credit = 0.0;
      v.reason = "claimed positive flow in a zero-flow network";
    }
    return;
  }
  if (t == s) {
    mark_exact(v);
  } else if (t >= 0.0 && t <= s) {
    v.partial_credit = t / s;
    v.reason = "claimed " + std::to_string(t) + " of optimum " + std::to_string(s);
  } else {
    v.partial_credit = 0.0;
    v.reason = "claimed flow outside [0, optimum]";
  }
}

void check_matching(Verdict& v, const TaskInstance& instance, const EdgeSetAnswer& answer) {
  const Graph& g = instance.graph;
  std::set<int> used;
  for (auto [a, b] : answer.edges) {
    if (!g.has_edge(a, b)) {
      v.reason = "edge (" + std::to_string(a) + ", " + std::to_string(b) +
                 ") is not in the graph";
      return;
    }
    if (!used.insert(a).second || !used.insert(b).second) {
      v.reason = "two matching edges share a node";
      return;
    }
  }
  v.valid = true;
  auto truth = std::get<MatchingAnswer>(solve_instance(instance).answer);
  if (answer.edges.size() == truth.pairs.size()) {
    mark_exact(v);
  } else {
    v.reason = "matching has " + std::to_string(answer.edges.size()) +
               " edges; maximum is " + std::to_string(truth.pairs.size());
  }
}

void check_hamilton(Verdict& v, const TaskInstance& instance,
                    const NodeSequenceAnswer& answer) {
  const Graph& g = instance.graph;
  const auto& path = answer.nodes;
  if (static_cast<int>(path.size()) != g.n ||
      std::set<int>(path.begin(), path.end()).size() != path.size() ||
      *std::min_element(path.begin(), path.end()) != 0 ||
      *std::max_element(path.begin(), path.end()) != g.n - 1) {
    v.reason = "output does not visit every node exactly once";
    return;
  }
  v.valid = true;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!g.has_edge(path[i], path[i + 1])) {
      v.reason = "consecutive nodes " + std::to_string(path[i]) + " and " +
                 std::to_string(path[i + 1]) + " are not adjacent";
      return;
    }
  }
  mark_exact(v);
}

void check_gnn(Verdict& v, const TaskInstance& instance, const EmbeddingAnswer& answer) {
  const Graph& g = instance.graph;
  for (const auto& [node, vec] : answer.by_node) {
    (void)vec;
    if (node < 0 || node >= g.n) {
      v.reason = "embedding given for node " + std::to_string(node) +
                 " outside the graph";
      return;
    }
  }
  if (static_cast<int>(answer.by_node.size()) != g.n) {
    v.reason = "embeddings cover " + std::to_string(answer.by_node.size()) + " of " +
               std::to_string(g.n) + " nodes";
    return;
  }
  v.valid = true;
  auto truth = std::get<GnnAnswer>(solve_instance(instance).answer);
  int correct = 0;
  double re_sum = 0.0;
  for (int i = 0; i < g.n; ++i) {
    const auto& claimed = answer.by_node.at(i);
    const auto& expected = truth.embeddings[static_cast<std::size_t>(i)];
    if (claimed == expected) ++correct;
    re_sum += relative_error(claimed, expected);
  }
  v.partial_credit = static_cast<double>(correct) / static_cast<double>(g.n);
  // Per-node means average to the mean over all 2n entries.
  v.relative_error = re_sum / static_cast<double>(g.n);
  if (correct == g.n) {
    mark_exact(v);
  } else {
    v.reason = std::to_string(correct) + " of " + std::to_string(g.n) +
               " node embeddings correct";
  }
}

}  // namespace

double relative_error(const EmbeddingVec& claimed, const EmbeddingVec& truth) {
  double sum = 0.0;
  for (int k = 0; k < 2; ++k) {
    double x = static_cast<double>(claimed[static_cast<std::size_t>(k)]);
    double y = static_cast<double>(truth[static_cast<std::size_t>(k)]);
    if (x == y) continue;  // covers the 0/0 case
    double denom = (x < 0.0 || y < 0.0) ? std::max(std::abs(x), std::abs(y))
                                        : std::max(x, y);
    sum += std::abs(x - y) / denom;
  }
  return sum / 2.0;
}

Verdict verify(const TaskInstance& instance, const Extraction& parsed) {
  Verdict v = base_verdict(instance, parsed);
  if (!parsed.ok()) {
    v.reason = "parse failure: " + parsed.failure;
    return v;
  }
  const ExtractedAnswer& answer = *parsed.answer;
  switch (instance.task) {
    case Task::Connectivity: {
      const auto* p = std::get_if<PolarityAnswer>(&answer);
      if (!p) {
        v.reason = "answer is not a yes/no statement";
        return v;
      }
      const auto& q = std::get<PairQuery>(instance.query);
      auto truth = std::get<ConnectivityAnswer>(
          solve_connectivity(instance.graph, q.u, q.v).answer);
      check_polarity(v, p->yes, truth.connected);
      return v;
    }
    case Task::Cycle: {
      const auto* p = std::get_if<PolarityAnswer>(&answer);
      if (!p) {
        v.reason = "answer is not a yes/no statement";
        return v;
      }
      auto truth = std::get<CycleAnswer>(solve_cycle(instance.graph).answer);
      check_polarity(v, p->yes, truth.has_cycle);
      return v;
    }
    case Task::ShortestPath: {
      const auto* s = std::get_if<NodeSequenceAnswer>(&answer);
      if (!s) {
        v.reason = "answer is not a node path";
        return v;
      }
      check_shortest_path(v, instance, *s);
      return v;
    }
    case Task::TopoSort: {
      const auto* s = std::get_if<NodeSequenceAnswer>(&answer);
      if (!s) {
        v.reason = "answer is not a node ordering";
        return v;
      }
      check_topo(v, instance, *s);
      return v;
    }
    case Task::MaxFlow: {
      const auto* nu = std::get_if<NumericAnswer>(&answer);
      if (!nu) {
        v.reason = "answer is not a numeric flow value";
        return v;
      }
      check_max_flow(v, instance, *nu);
      return v;
    }
    case Task::Matching: {
      const auto* e = std::get_if<EdgeSetAnswer>(&answer);
      if (!e) {
        v.reason = "answer is not an edge set";
        return v;
      }
      check_matching(v, instance, *e);
      return v;
    }
    case Task::Hamilton: {
      const auto* s = std::get_if<NodeSequenceAnswer>(&answer);
      if (!s) {
        v.reason = "answer is not a node path";
        return v;
      }
      check_hamilton(v, instance, *s);
      return v;
    }
    case Task::Gnn: {
      const auto* m = std::get_if<EmbeddingAnswer>(&answer);
      if (!m) {
        v.reason = "answer is not an embedding table";
        return v;
      }
      check_gnn(v, instance, *m);
      return v;
    }
  }
  v.reason = "unknown task";
  return v;
}

Verdict verify_response(const TaskInstance& instance, const std::string& response) {
  return verify(instance, extract_answer(instance.task, response));
}

}  // namespace gundam

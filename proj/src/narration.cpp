#include "gundam/narration.hpp"

#include <sstream>

#include "gundam/projection.hpp"

namespace gundam {
namespace {

std::string arrow_path(const std::vector<int>& nodes) {
  std::ostringstream out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) out << "->";
    out << nodes[i];
  }
  return out.str();
}

// "2", "2 and 3", "2, 3, and 5"
std::string join_and(const std::vector<int>& ids) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) {
      if (ids.size() == 2) {
        out << " and ";
      } else {
        out << (i + 1 == ids.size() ? ", and " : ", ");
      }
    }
    out << ids[i];
  }
  return out.str();
}

std::string vec_str(const EmbeddingVec& v) {
  return "[" + std::to_string(v[0]) + ", " + std::to_string(v[1]) + "]";
}

std::string pairs_str(const std::vector<std::pair<int, int>>& pairs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out << ", ";
    out << "(" << pairs[i].first << ", " << pairs[i].second << ")";
  }
  return out.str();
}

AnnotatedExample base_example(const TaskInstance& instance, Style style) {
  AnnotatedExample ex;
  ex.task = instance.task;
  ex.difficulty = instance.difficulty;
  ex.seed = instance.seed;
  ex.graph_text = project(instance.graph, instance.task).text();
  ex.task_desc = task_description(instance.task);
  ex.question = render_question(instance);
  ex.style = style;
  return ex;
}

std::string narrate_connectivity(const TaskInstance& instance, const SolverResult& result) {
  const auto& q = std::get<PairQuery>(instance.query);
  const auto& answer = std::get<ConnectivityAnswer>(result.answer);
  std::ostringstream out;
  if (answer.connected) {
    if (answer.path.size() == 1) {
      out << "Node " << q.u << " and node " << q.v << " are the same node, so no edge "
          << "needs to be crossed.";
      return out.str();
    }
    // "Node 0 is connected to node 2, node 2 is connected to node 1, we can
    // follow the path: 0->2->1." -- the reference hop-by-hop wording.
    for (std::size_t i = 0; i + 1 < answer.path.size(); ++i) {
      out << (i == 0 ? "Node " : "node ") << answer.path[i] << " is connected to node "
          << answer.path[i + 1] << ", ";
    }
    out << "we can follow the path: " << arrow_path(answer.path) << ".";
    return out.str();
  }
  std::vector<int> reached(answer.explored.begin() + 1, answer.explored.end());
  if (reached.empty()) {
    out << "Starting from node " << q.u << ", we cannot reach any other node, so node "
        << q.v << " cannot be reached.";
  } else {
    out << "Starting from node " << q.u << ", we can only reach "
        << (reached.size() == 1 ? "node " : "nodes ") << join_and(reached)
        << ". Node " << q.v << " is not among them, so node " << q.v
        << " cannot be reached from node " << q.u << ".";
  }
  return out.str();
}

std::string narrate_cycle(const TaskInstance& instance, const SolverResult& result) {
  const auto& answer = std::get<CycleAnswer>(result.answer);
  std::ostringstream out;
  if (answer.has_cycle) {
    const auto& cyc = answer.cycle;
    for (std::size_t i = 0; i + 1 < cyc.size(); ++i) {
      out << (i == 0 ? "Node " : "node ") << cyc[i] << " is connected to node "
          << cyc[i + 1] << ", ";
    }
    out << "and node " << cyc.back() << " is connected back to node " << cyc.front()
        << ", so we can follow the cycle: " << arrow_path(cyc) << "->" << cyc.front()
        << ".";
    return out.str();
  }
  // Narrate the DFS forest: visit order per root.
  out << "We run a depth-first search over the graph.";
  std::vector<int> component;
  int root = -1;
  auto flush = [&]() {
    if (root < 0) return;
    if (component.size() == 1) {
      out << " Starting from node " << root << ", no other node is reachable.";
    } else {
      out << " Starting from node " << root << ", we visit nodes "
          << join_and(component) << " without meeting any visited node again.";
    }
  };
  for (const auto& step : result.trace) {
    if (step.kind != TraceKind::Visit) continue;
    if (step.from == -1) {
      flush();
      root = step.node;
      component.clear();
    }
    component.push_back(step.node);
  }
  flush();
  out << " No edge closes back onto the current path, so the graph contains no cycle.";
  return out.str();
}

std::string narrate_shortest_path(const TaskInstance& instance, const SolverResult& result) {
  const auto& q = std::get<PairQuery>(instance.query);
  const auto& answer = std::get<ShortestPathAnswer>(result.answer);
  std::ostringstream out;
  out << "We run Dijkstra's algorithm from node " << q.u << ".";
  for (const auto& step : result.trace) {
    if (step.kind != TraceKind::Visit) continue;
    if (step.node == q.u) {
      out << " Node " << q.u << " starts with distance 0.";
    } else {
      out << " Node " << step.node << " is settled with distance " << step.value.str()
          << " via node " << step.from << ".";
    }
  }
  if (answer.reachable) {
    out << " The shortest path is " << arrow_path(answer.path)
        << " with a total weight of " << answer.total.str() << ".";
  } else {
    out << " Node " << q.v << " is never reached.";
  }
  return out.str();
}

std::string narrate_topo(const TaskInstance&, const SolverResult& result) {
  const auto& answer = std::get<TopoAnswer>(result.answer);
  std::ostringstream out;
  bool first = true;
  for (const auto& step : result.trace) {
    if (step.kind != TraceKind::RemoveZeroIndegree) continue;
    if (first) {
      out << "Node " << step.node << " has no incoming edges, so we remove it first.";
      first = false;
    } else {
      out << " Then node " << step.node
          << " has no remaining incoming edges, so we remove it next.";
    }
  }
  if (answer.acyclic) {
    out << " The removal order visits every node.";
  } else {
    out << " The remaining nodes all keep incoming edges, so no valid order exists.";
  }
  return out.str();
}

std::string narrate_max_flow(const TaskInstance& instance, const SolverResult& result) {
  const auto& q = std::get<FlowQuery>(instance.query);
  std::ostringstream out;
  bool any = false;
  Weight running{};
  for (const auto& step : result.trace) {
    if (step.kind != TraceKind::Augment) continue;
    running += step.value;
    out << (any ? " " : "") << "We can send " << step.value.str()
        << (step.value == Weight::from_int(1) ? " unit" : " units")
        << " of flow along the path " << arrow_path(step.path)
        << ", raising the total flow to " << running.str() << ".";
    any = true;
  }
  if (!any) {
    out << "No path from node " << q.source << " to node " << q.sink
        << " has remaining capacity.";
  } else {
    out << " After that, no augmenting path with remaining capacity is left.";
  }
  return out.str();
}

std::string narrate_matching(const TaskInstance&, const SolverResult& result) {
  std::ostringstream out;
  bool first = true;
  for (const auto& step : result.trace) {
    if (step.kind == TraceKind::Augment) {
      if (step.path.size() == 2) {
        out << (first ? "" : " ") << "We match node " << step.path[0] << " with node "
            << step.path[1] << ".";
      } else {
        out << (first ? "" : " ") << "For node " << step.node
            << ", we find the alternating path " << arrow_path(step.path)
            << " and rematch along it.";
      }
      first = false;
    } else if (step.kind == TraceKind::Exhausted && step.node >= 0) {
      out << (first ? "" : " ") << "Node " << step.node << " cannot be matched.";
      first = false;
    }
  }
  out << (first ? "" : " ") << "No further alternating path can enlarge the matching.";
  return out.str();
}

std::string narrate_hamilton(const TaskInstance&, const SolverResult& result) {
  const auto& answer = std::get<HamiltonAnswer>(result.answer);
  std::ostringstream out;
  if (!answer.found) {
    out << "Every extension order runs out of unvisited neighbors, so no Hamilton "
        << "path exists.";
    return out.str();
  }
  int backtracks = 0;
  for (const auto& step : result.trace) {
    if (step.kind == TraceKind::Found) backtracks = step.count;
  }
  out << "We start from node " << answer.path.front() << ".";
  for (std::size_t i = 0; i + 1 < answer.path.size(); ++i) {
    out << " From node " << answer.path[i] << " we extend the path to node "
        << answer.path[i + 1] << ".";
  }
  out << " All nodes are now visited";
  if (backtracks > 0) {
    out << " (the search backtracked " << backtracks
        << (backtracks == 1 ? " time" : " times") << ")";
  }
  out << ".";
  return out.str();
}

std::string narrate_gnn(const TaskInstance& instance, const SolverResult& result) {
  const auto& q = std::get<GnnQuery>(instance.query);
  std::ostringstream out;
  if (q.layers == 0) {
    out << "With 0 layers of message passing, every embedding stays at its "
        << "initial value.";
    return out.str();
  }
  bool first = true;
  for (const auto& step : result.trace) {
    if (step.kind != TraceKind::LayerUpdate) continue;
    out << (first ? "" : " ") << "In layer " << step.count << ", node " << step.node;
    if (step.neighbors.empty()) {
      out << " has no neighbors, so its embedding becomes [0, 0].";
    } else {
      out << " sums the embeddings of its "
          << (step.neighbors.size() == 1 ? "neighbor " : "neighbors ")
          << join_and(step.neighbors) << ", giving " << vec_str(step.vec) << ".";
    }
    first = false;
  }
  return out.str();
}

}  // namespace

std::string to_string(Style style) {
  switch (style) {
    case Style::PA: return "PA";
    case Style::AHP: return "AHP";
    case Style::ASP: return "ASP";
  }
  return "unknown";
}

std::optional<Style> style_from_string(const std::string& name) {
  if (name == "PA") return Style::PA;
  if (name == "AHP") return Style::AHP;
  if (name == "ASP") return Style::ASP;
  return std::nullopt;
}

std::string answer_sentence(const TaskInstance& instance, const SolverResult& result,
                            Style style) {
  std::ostringstream out;
  switch (instance.task) {
    case Task::Connectivity: {
      const auto& answer = std::get<ConnectivityAnswer>(result.answer);
      const auto& q = std::get<PairQuery>(instance.query);
      if (style == Style::PA) {
        return answer.connected ? "The answer is yes." : "The answer is no.";
      }
      // Reference wording, reproduced verbatim (grammar slip included).
      if (answer.connected) {
        out << "Yes, there a path between node " << q.u << " and node " << q.v << ".";
      } else {
        out << "No, there is no path between node " << q.u << " and node " << q.v << ".";
      }
      return out.str();
    }
    case Task::Cycle: {
      const auto& answer = std::get<CycleAnswer>(result.answer);
      if (style == Style::PA) {
        return answer.has_cycle ? "The answer is yes." : "The answer is no.";
      }
      return answer.has_cycle ? "Yes, there is a cycle in this graph."
                              : "No, there is no cycle in this graph.";
    }
    case Task::ShortestPath: {
      const auto& answer = std::get<ShortestPathAnswer>(result.answer);
      const auto& q = std::get<PairQuery>(instance.query);
      if (!answer.reachable) {
        out << "There is no path between node " << q.u << " and node " << q.v << ".";
        return out.str();
      }
      out << "The shortest path from node " << q.u << " to node " << q.v << " is "
          << arrow_path(answer.path) << " with a total weight of " << answer.total.str()
          << ".";
      return out.str();
    }
    case Task::TopoSort: {
      const auto& answer = std::get<TopoAnswer>(result.answer);
      if (!answer.acyclic) return "The graph contains a cycle, so it has no topological sorting.";
      out << "A valid topological sorting is: " << arrow_path(answer.order) << ".";
      return out.str();
    }
    case Task::MaxFlow: {
      const auto& answer = std::get<MaxFlowAnswer>(result.answer);
      const auto& q = std::get<FlowQuery>(instance.query);
      out << "The maximum flow from node " << q.source << " to node " << q.sink << " is "
          << answer.value.str() << ".";
      return out.str();
    }
    case Task::Matching: {
      const auto& answer = std::get<MatchingAnswer>(result.answer);
      out << "A maximum matching is: " << pairs_str(answer.pairs) << ". It contains "
          << answer.pairs.size() << (answer.pairs.size() == 1 ? " edge." : " edges.");
      return out.str();
    }
    case Task::Hamilton: {
      const auto& answer = std::get<HamiltonAnswer>(result.answer);
      if (!answer.found) return "This graph has no Hamilton path.";
      out << "A Hamilton path is: " << arrow_path(answer.path) << ".";
      return out.str();
    }
    case Task::Gnn: {
      const auto& answer = std::get<GnnAnswer>(result.answer);
      out << "The final embeddings are:";
      for (std::size_t i = 0; i < answer.embeddings.size(); ++i) {
        out << (i ? ", " : " ") << "node " << i << ": " << vec_str(answer.embeddings[i]);
      }
      out << ".";
      return out.str();
    }
  }
  return "";
}

AnnotatedExample render_pa(const TaskInstance& instance, const SolverResult& result) {
  AnnotatedExample ex = base_example(instance, Style::PA);
  ex.answer = answer_sentence(instance, result, Style::PA);
  return ex;
}

AnnotatedExample render_ahp(const TaskInstance& instance, const SolverResult& result) {
  AnnotatedExample ex = base_example(instance, Style::AHP);
  switch (instance.task) {
    case Task::Connectivity: ex.reasoning_path = narrate_connectivity(instance, result); break;
    case Task::Cycle: ex.reasoning_path = narrate_cycle(instance, result); break;
    case Task::ShortestPath: ex.reasoning_path = narrate_shortest_path(instance, result); break;
    case Task::TopoSort: ex.reasoning_path = narrate_topo(instance, result); break;
    case Task::MaxFlow: ex.reasoning_path = narrate_max_flow(instance, result); break;
    case Task::Matching: ex.reasoning_path = narrate_matching(instance, result); break;
    case Task::Hamilton: ex.reasoning_path = narrate_hamilton(instance, result); break;
    case Task::Gnn: ex.reasoning_path = narrate_gnn(instance, result); break;
  }
  ex.answer = answer_sentence(instance, result, Style::AHP);
  return ex;
}

}  // namespace gundam

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gundam/instance.hpp"

namespace gundam {

enum class TraceKind {
  Visit,
  Relax,
  Augment,
  RemoveZeroIndegree,
  Backtrack,
  LayerUpdate,
  Found,
  Exhausted,
};

std::string to_string(TraceKind kind);

// One recorded step of a solver run. Fields are used as each step kind
// needs them; unused ones keep their defaults.
struct TraceStep {
  TraceKind kind = TraceKind::Visit;
  int node = -1;               // visited / settled / removed / extended-to node
  int from = -1;               // predecessor
  Weight value{};              // distance, bottleneck, total
  int count = 0;               // layer index, backtrack totals
  std::vector<int> path;       // witness path / cycle / augmenting path / order
  std::vector<int> neighbors;  // GNN update inputs
  EmbeddingVec vec{0, 0};      // GNN summed vector

  bool operator==(const TraceStep&) const = default;
};

struct ConnectivityAnswer {
  bool connected = false;
  std::vector<int> path;      // witness when connected
  std::vector<int> explored;  // BFS visit order (the component of u when not)
  bool operator==(const ConnectivityAnswer&) const = default;
};

struct CycleAnswer {
  bool has_cycle = false;
  std::vector<int> cycle;  // v0..vk with vk adjacent to v0
  bool operator==(const CycleAnswer&) const = default;
};

struct ShortestPathAnswer {
  bool reachable = false;
  std::vector<int> path;
  Weight total{};
  bool operator==(const ShortestPathAnswer&) const = default;
};

struct TopoAnswer {
  bool acyclic = false;
  std::vector<int> order;
  bool operator==(const TopoAnswer&) const = default;
};

struct EdgeFlow {
  int u = 0;
  int v = 0;
  Weight flow{};
  bool operator==(const EdgeFlow&) const = default;
};

struct MaxFlowAnswer {
  Weight value{};
  std::vector<EdgeFlow> flows;  // per original edge, same order as g.edges
  bool operator==(const MaxFlowAnswer&) const = default;
};

struct MatchingAnswer {
  std::vector<std::pair<int, int>> pairs;  // (left, right), sorted by left id
  bool operator==(const MatchingAnswer&) const = default;
};

struct HamiltonAnswer {
  bool found = false;
  std::vector<int> path;
  bool operator==(const HamiltonAnswer&) const = default;
};

struct GnnAnswer {
  std::vector<EmbeddingVec> embeddings;
  bool operator==(const GnnAnswer&) const = default;
};

using SolverAnswer =
    std::variant<ConnectivityAnswer, CycleAnswer, ShortestPathAnswer, TopoAnswer,
                 MaxFlowAnswer, MatchingAnswer, HamiltonAnswer, GnnAnswer>;

struct SolverResult {
  SolverAnswer answer;
  std::vector<TraceStep> trace;
};

// All solvers are pure and deterministic: neighbors are always taken in
// ascending id order and every tie is broken toward the lower id.

// BFS witness search.
SolverResult solve_connectivity(const Graph& g, int u, int v);

// DFS back-edge detection.
SolverResult solve_cycle(const Graph& g);

// Dijkstra; equal-distance predecessors resolve to the lower id. Reports
// reachable=false instead of failing when v cannot be reached.
SolverResult solve_shortest_path(const Graph& g, int u, int v);

// Kahn's algorithm with a min-id frontier; acyclic=false when no order exists.
SolverResult solve_topo(const Graph& g);

// Edmonds-Karp. Capacities must be positive; a disconnected pair yields 0.
SolverResult solve_max_flow(const Graph& g, int source, int sink);

// Kuhn's augmenting-path matching over the prefix bipartition [0, left_size).
// Throws NotBipartite when an edge does not cross the partition.
SolverResult solve_matching(const Graph& g, int left_size);

// Backtracking search, start nodes in (degree, id) ascending order. The trace
// keeps the successful path's extension steps plus at most backtrack_cap
// backtrack records.
SolverResult solve_hamilton(const Graph& g, int backtrack_cap = 50);

// L rounds of neighbor-sum message passing with exact integer arithmetic.
// Throws DimensionMismatch when initial.size() != g.n.
SolverResult simulate_gnn(const Graph& g, const std::vector<EmbeddingVec>& initial,
                          int layers);

// Dispatch on the instance's task and query.
SolverResult solve_instance(const TaskInstance& instance);

// JSON text of a solver result, for debugging.
std::string solver_result_to_json(const SolverResult& result);

}  // namespace gundam

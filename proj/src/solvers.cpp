#include "gundam/solvers.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>
#include <set>

#include "gundam/errors.hpp"
#include "json.hpp"

namespace gundam {

std::string to_string(TraceKind kind) {
  switch (kind) {
    case TraceKind::Visit: return "visit";
    case TraceKind::Relax: return "relax";
    case TraceKind::Augment: return "augment";
    case TraceKind::RemoveZeroIndegree: return "remove_zero_indegree";
    case TraceKind::Backtrack: return "backtrack";
    case TraceKind::LayerUpdate: return "layer_update";
    case TraceKind::Found: return "found";
    case TraceKind::Exhausted: return "exhausted";
  }
  return "unknown";
}

SolverResult solve_connectivity(const Graph& g, int u, int v) {
  auto adj = g.adjacency();
  std::vector<int> parent(static_cast<std::size_t>(g.n), -1);
  std::vector<bool> seen(static_cast<std::size_t>(g.n), false);
  std::vector<TraceStep> trace;
  std::vector<int> order;

  std::deque<int> queue = {u};
  seen[static_cast<std::size_t>(u)] = true;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    order.push_back(x);
    trace.push_back({.kind = TraceKind::Visit, .node = x, .from = parent[static_cast<std::size_t>(x)]});
    if (x == v) break;
    for (int y : adj[static_cast<std::size_t>(x)]) {
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        parent[static_cast<std::size_t>(y)] = x;
        queue.push_back(y);
      }
    }
  }

  ConnectivityAnswer answer;
  answer.explored = order;
  if (seen[static_cast<std::size_t>(v)]) {
    // v may still be in the queue; it is reachable either way.
    std::vector<int> path;
    for (int x = v; x != -1; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    answer.connected = true;
    answer.path = path;
    trace.push_back({.kind = TraceKind::Found, .path = path});
  } else {
    trace.push_back({.kind = TraceKind::Exhausted, .node = v, .path = order});
  }
  return {answer, std::move(trace)};
}

SolverResult solve_cycle(const Graph& g) {
  auto adj = g.adjacency();
  std::vector<int> state(static_cast<std::size_t>(g.n), 0);  // 0 new, 1 done
  std::vector<int> parent(static_cast<std::size_t>(g.n), -1);
  std::vector<TraceStep> trace;

  // Iterative DFS keeping the current stack so the cycle can be read off.
  for (int root = 0; root < g.n; ++root) {
    if (state[static_cast<std::size_t>(root)]) continue;
    std::vector<std::pair<int, std::size_t>> stack = {{root, 0}};
    state[static_cast<std::size_t>(root)] = 1;
    trace.push_back({.kind = TraceKind::Visit, .node = root, .from = -1});
    std::vector<int> on_path = {root};
    std::vector<bool> in_path(static_cast<std::size_t>(g.n), false);
    in_path[static_cast<std::size_t>(root)] = true;

    while (!stack.empty()) {
      auto& [x, idx] = stack.back();
      const auto& nb = adj[static_cast<std::size_t>(x)];
      if (idx >= nb.size()) {
        in_path[static_cast<std::size_t>(x)] = false;
        on_path.pop_back();
        stack.pop_back();
        continue;
      }
      int y = nb[idx++];
      if (y == parent[static_cast<std::size_t>(x)]) continue;
      if (in_path[static_cast<std::size_t>(y)]) {
        // Back edge x-y closes a cycle: y .. x along the current path.
        std::vector<int> cycle;
        auto it = std::find(on_path.begin(), on_path.end(), y);
        cycle.assign(it, on_path.end());
        trace.push_back({.kind = TraceKind::Found, .path = cycle});
        return {CycleAnswer{true, cycle}, std::move(trace)};
      }
      if (!state[static_cast<std::size_t>(y)]) {
        state[static_cast<std::size_t>(y)] = 1;
        parent[static_cast<std::size_t>(y)] = x;
        trace.push_back({.kind = TraceKind::Visit, .node = y, .from = x});
        stack.push_back({y, 0});
        on_path.push_back(y);
        in_path[static_cast<std::size_t>(y)] = true;
      }
    }
  }
  trace.push_back({.kind = TraceKind::Exhausted});
  return {CycleAnswer{false, {}}, std::move(trace)};
}

SolverResult solve_shortest_path(const Graph& g, int u, int v) {
  auto adj = g.adjacency();
  const Weight inf{std::numeric_limits<std::int64_t>::max()};
  std::vector<Weight> dist(static_cast<std::size_t>(g.n), inf);
  std::vector<int> pred(static_cast<std::size_t>(g.n), -1);
  std::vector<bool> settled(static_cast<std::size_t>(g.n), false);
  std::vector<TraceStep> trace;

  using Entry = std::pair<Weight, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dist[static_cast<std::size_t>(u)] = Weight{};
  heap.push({Weight{}, u});

  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (settled[static_cast<std::size_t>(x)]) continue;
    settled[static_cast<std::size_t>(x)] = true;
    trace.push_back({.kind = TraceKind::Visit, .node = x, .from = pred[static_cast<std::size_t>(x)], .value = d});
    if (x == v) break;
    for (int y : adj[static_cast<std::size_t>(x)]) {
      if (settled[static_cast<std::size_t>(y)]) continue;
      Weight nd = d + *g.edge_weight(x, y);
      if (nd < dist[static_cast<std::size_t>(y)]) {
        dist[static_cast<std::size_t>(y)] = nd;
        pred[static_cast<std::size_t>(y)] = x;
        heap.push({nd, y});
        trace.push_back({.kind = TraceKind::Relax, .node = y, .from = x, .value = nd});
      } else if (nd == dist[static_cast<std::size_t>(y)] && x < pred[static_cast<std::size_t>(y)]) {
        pred[static_cast<std::size_t>(y)] = x;  // tie toward the lower predecessor id
      }
    }
  }

  ShortestPathAnswer answer;
  if (!settled[static_cast<std::size_t>(v)]) {
    trace.push_back({.kind = TraceKind::Exhausted, .node = v});
    return {answer, std::move(trace)};
  }
  std::vector<int> path;
  for (int x = v; x != -1; x = pred[static_cast<std::size_t>(x)]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  answer.reachable = true;
  answer.path = path;
  answer.total = dist[static_cast<std::size_t>(v)];
  trace.push_back({.kind = TraceKind::Found, .value = answer.total, .path = path});
  return {answer, std::move(trace)};
}

SolverResult solve_topo(const Graph& g) {
  std::vector<int> indegree(static_cast<std::size_t>(g.n), 0);
  auto adj = g.adjacency();
  for (const auto& e : g.edges) ++indegree[static_cast<std::size_t>(e.v)];

  std::set<int> frontier;  // min-id first
  for (int i = 0; i < g.n; ++i) {
    if (indegree[static_cast<std::size_t>(i)] == 0) frontier.insert(i);
  }
  std::vector<TraceStep> trace;
  std::vector<int> order;
  while (!frontier.empty()) {
    int x = *frontier.begin();
    frontier.erase(frontier.begin());
    order.push_back(x);
    trace.push_back({.kind = TraceKind::RemoveZeroIndegree, .node = x});
    for (int y : adj[static_cast<std::size_t>(x)]) {
      if (--indegree[static_cast<std::size_t>(y)] == 0) frontier.insert(y);
    }
  }
  if (static_cast<int>(order.size()) != g.n) {
    trace.push_back({.kind = TraceKind::Exhausted, .path = order});
    return {TopoAnswer{false, {}}, std::move(trace)};
  }
  trace.push_back({.kind = TraceKind::Found, .path = order});
  return {TopoAnswer{true, order}, std::move(trace)};
}

SolverResult solve_max_flow(const Graph& g, int source, int sink) {
  // Residual arcs in pairs: arc i and i^1 are each other's reverses.
  struct Arc {
    int head;
    Weight cap;
    Weight flow{};
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(static_cast<std::size_t>(g.n));
  for (const auto& e : g.edges) {
    out[static_cast<std::size_t>(e.u)].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({e.v, e.w});
    out[static_cast<std::size_t>(e.v)].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({e.u, Weight{}});
  }
  auto residual = [&](int a) { return arcs[static_cast<std::size_t>(a)].cap - arcs[static_cast<std::size_t>(a)].flow; };

  std::vector<TraceStep> trace;
  Weight total{};
  while (true) {
    // BFS for the shortest augmenting path, heads scanned in arc order
    // (ascending head id within each tail, since edges are canonical).
    std::vector<int> via(static_cast<std::size_t>(g.n), -1);
    std::vector<bool> seen(static_cast<std::size_t>(g.n), false);
    std::deque<int> queue = {source};
    seen[static_cast<std::size_t>(source)] = true;
    while (!queue.empty() && !seen[static_cast<std::size_t>(sink)]) {
      int x = queue.front();
      queue.pop_front();
      for (int a : out[static_cast<std::size_t>(x)]) {
        int y = arcs[static_cast<std::size_t>(a)].head;
        if (!seen[static_cast<std::size_t>(y)] && residual(a) > Weight{}) {
          seen[static_cast<std::size_t>(y)] = true;
          via[static_cast<std::size_t>(y)] = a;
          queue.push_back(y);
        }
      }
    }
    if (!seen[static_cast<std::size_t>(sink)]) break;

    std::vector<int> rev_arcs;
    Weight bottleneck{std::numeric_limits<std::int64_t>::max()};
    for (int x = sink; x != source;) {
      int a = via[static_cast<std::size_t>(x)];
      rev_arcs.push_back(a);
      bottleneck = min(bottleneck, residual(a));
      x = arcs[static_cast<std::size_t>(a ^ 1)].head;
    }
    std::vector<int> path = {source};
    for (auto it = rev_arcs.rbegin(); it != rev_arcs.rend(); ++it) {
      arcs[static_cast<std::size_t>(*it)].flow += bottleneck;
      arcs[static_cast<std::size_t>(*it ^ 1)].flow =
          arcs[static_cast<std::size_t>(*it ^ 1)].flow - bottleneck;
      path.push_back(arcs[static_cast<std::size_t>(*it)].head);
    }
    total += bottleneck;
    trace.push_back({.kind = TraceKind::Augment, .value = bottleneck, .path = path});
  }
  trace.push_back({.kind = TraceKind::Exhausted});

  MaxFlowAnswer answer;
  answer.value = total;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    Weight f = arcs[2 * i].flow;
    if (f < Weight{}) f = Weight{};  // cancelled by reverse flow
    answer.flows.push_back({g.edges[i].u, g.edges[i].v, f});
  }
  trace.push_back({.kind = TraceKind::Found, .value = total});
  return {answer, std::move(trace)};
}

SolverResult solve_matching(const Graph& g, int left_size) {
  if (left_size < 0 || left_size > g.n) throw NotBipartite("left partition size out of range");
  for (const auto& e : g.edges) {
    bool lu = e.u < left_size, lv = e.v < left_size;
    if (lu == lv) {
      throw NotBipartite("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                         ") does not cross the partition");
    }
  }
  auto adj = g.adjacency();
  std::vector<int> match_of(static_cast<std::size_t>(g.n), -1);
  std::vector<TraceStep> trace;

  // Kuhn's algorithm; path comes back as l0, r0, l1, r1, ... alternating
  // new and rematched pairs.
  std::vector<bool> visited;
  auto try_augment = [&](auto&& self, int l, std::vector<int>& path) -> bool {
    for (int r : adj[static_cast<std::size_t>(l)]) {
      if (visited[static_cast<std::size_t>(r)]) continue;
      visited[static_cast<std::size_t>(r)] = true;
      if (match_of[static_cast<std::size_t>(r)] == -1) {
        match_of[static_cast<std::size_t>(r)] = l;
        match_of[static_cast<std::size_t>(l)] = r;
        path.insert(path.begin(), {l, r});
        return true;
      }
      int l2 = match_of[static_cast<std::size_t>(r)];
      if (self(self, l2, path)) {
        match_of[static_cast<std::size_t>(r)] = l;
        match_of[static_cast<std::size_t>(l)] = r;
        path.insert(path.begin(), {l, r});
        return true;
      }
    }
    return false;
  };

  for (int l = 0; l < left_size; ++l) {
    visited.assign(static_cast<std::size_t>(g.n), false);
    std::vector<int> path;
    if (try_augment(try_augment, l, path)) {
      trace.push_back({.kind = TraceKind::Augment, .node = l, .path = path});
    } else {
      trace.push_back({.kind = TraceKind::Exhausted, .node = l});
    }
  }

  MatchingAnswer answer;
  for (int l = 0; l < left_size; ++l) {
    if (match_of[static_cast<std::size_t>(l)] != -1) {
      answer.pairs.push_back({l, match_of[static_cast<std::size_t>(l)]});
    }
  }
  std::vector<int> flat;
  for (auto [a, b] : answer.pairs) {
    flat.push_back(a);
    flat.push_back(b);
  }
  trace.push_back({.kind = TraceKind::Found, .path = flat});
  return {answer, std::move(trace)};
}

SolverResult solve_hamilton(const Graph& g, int backtrack_cap) {
  auto adj = g.adjacency();
  auto deg = g.degrees();
  std::vector<int> starts(static_cast<std::size_t>(g.n));
  for (int i = 0; i < g.n; ++i) starts[static_cast<std::size_t>(i)] = i;
  std::sort(starts.begin(), starts.end(), [&](int a, int b) {
    return std::pair{deg[static_cast<std::size_t>(a)], a} <
           std::pair{deg[static_cast<std::size_t>(b)], b};
  });

  std::vector<TraceStep> backtracks;
  int backtrack_count = 0;
  std::vector<int> path;
  std::vector<bool> used(static_cast<std::size_t>(g.n), false);

  auto extend = [&](auto&& self, int x) -> bool {
    if (static_cast<int>(path.size()) == g.n) return true;
    for (int y : adj[static_cast<std::size_t>(x)]) {
      if (used[static_cast<std::size_t>(y)]) continue;
      used[static_cast<std::size_t>(y)] = true;
      path.push_back(y);
      if (self(self, y)) return true;
      used[static_cast<std::size_t>(y)] = false;
      path.pop_back();
    }
    ++backtrack_count;
    if (static_cast<int>(backtracks.size()) < backtrack_cap) {
      backtracks.push_back({.kind = TraceKind::Backtrack, .node = x});
    }
    return false;
  };

  for (int s : starts) {
    used.assign(static_cast<std::size_t>(g.n), false);
    path = {s};
    used[static_cast<std::size_t>(s)] = true;
    if (extend(extend, s)) {
      std::vector<TraceStep> trace;
      for (std::size_t i = 0; i < path.size(); ++i) {
        trace.push_back({.kind = TraceKind::Visit,
                         .node = path[i],
                         .from = i ? path[i - 1] : -1});
      }
      trace.insert(trace.end(), backtracks.begin(), backtracks.end());
      trace.push_back({.kind = TraceKind::Found, .count = backtrack_count, .path = path});
      return {HamiltonAnswer{true, path}, std::move(trace)};
    }
  }
  std::vector<TraceStep> trace = backtracks;
  trace.push_back({.kind = TraceKind::Exhausted, .count = backtrack_count});
  return {HamiltonAnswer{false, {}}, std::move(trace)};
}

SolverResult simulate_gnn(const Graph& g, const std::vector<EmbeddingVec>& initial,
                          int layers) {
  if (static_cast<int>(initial.size()) != g.n) {
    throw DimensionMismatch("initial embedding table has " +
                            std::to_string(initial.size()) + " rows for " +
                            std::to_string(g.n) + " nodes");
  }
  auto adj = g.adjacency();
  std::vector<TraceStep> trace;
  std::vector<EmbeddingVec> x = initial;
  for (int layer = 1; layer <= layers; ++layer) {
    std::vector<EmbeddingVec> next(static_cast<std::size_t>(g.n), EmbeddingVec{0, 0});
    for (int i = 0; i < g.n; ++i) {
      EmbeddingVec sum{0, 0};
      for (int j : adj[static_cast<std::size_t>(i)]) {
        sum[0] += x[static_cast<std::size_t>(j)][0];
        sum[1] += x[static_cast<std::size_t>(j)][1];
      }
      next[static_cast<std::size_t>(i)] = sum;
      trace.push_back({.kind = TraceKind::LayerUpdate,
                       .node = i,
                       .count = layer,
                       .neighbors = adj[static_cast<std::size_t>(i)],
                       .vec = sum});
    }
    x = std::move(next);
  }
  trace.push_back({.kind = TraceKind::Found, .count = layers});
  return {GnnAnswer{x}, std::move(trace)};
}

SolverResult solve_instance(const TaskInstance& instance) {
  const Graph& g = instance.graph;
  switch (instance.task) {
    case Task::Connectivity: {
      const auto& q = std::get<PairQuery>(instance.query);
      return solve_connectivity(g, q.u, q.v);
    }
    case Task::Cycle:
      return solve_cycle(g);
    case Task::TopoSort:
      return solve_topo(g);
    case Task::ShortestPath: {
      const auto& q = std::get<PairQuery>(instance.query);
      return solve_shortest_path(g, q.u, q.v);
    }
    case Task::MaxFlow: {
      const auto& q = std::get<FlowQuery>(instance.query);
      return solve_max_flow(g, q.source, q.sink);
    }
    case Task::Matching: {
      const auto& q = std::get<MatchingQuery>(instance.query);
      return solve_matching(g, q.left_size);
    }
    case Task::Hamilton:
      return solve_hamilton(g);
    case Task::Gnn: {
      const auto& q = std::get<GnnQuery>(instance.query);
      return simulate_gnn(g, q.initial, q.layers);
    }
  }
  throw std::logic_error("unknown task");
}

std::string solver_result_to_json(const SolverResult& result) {
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const auto& s : result.trace) {
    nlohmann::ordered_json j = {{"kind", to_string(s.kind)}};
    if (s.node >= 0) j["node"] = s.node;
    if (s.from >= 0) j["from"] = s.from;
    if (s.value.tenths != 0) j["value"] = s.value.str();
    if (s.count != 0) j["count"] = s.count;
    if (!s.path.empty()) j["path"] = s.path;
    if (!s.neighbors.empty()) j["neighbors"] = s.neighbors;
    if (s.kind == TraceKind::LayerUpdate) j["vec"] = {s.vec[0], s.vec[1]};
    steps.push_back(j);
  }
  return steps.dump();
}

}  // namespace gundam

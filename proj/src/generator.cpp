#include "gundam/generator.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gundam/errors.hpp"
#include "gundam/rng.hpp"

namespace gundam {
namespace {

Weight sample_weight(Rng& rng, const GenConfig& cfg) {
  if (cfg.decimal_weights) return Weight::from_tenths(rng.range(1, 9));
  return Weight::from_int(rng.range(cfg.weight_min, cfg.weight_max));
}

Weight sample_capacity(Rng& rng, const GenConfig& cfg) {
  return Weight::from_int(rng.range(cfg.capacity_min, cfg.capacity_max));
}

// Erdos-Renyi sample over unordered pairs.
std::vector<Edge> sample_undirected_edges(Rng& rng, int n, double p) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.chance(p)) edges.push_back({u, v});
    }
  }
  return edges;
}

std::vector<int> nodes_of_component(const std::vector<int>& labels, int root) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    if (labels[static_cast<std::size_t>(i)] == root) out.push_back(i);
  }
  return out;
}

bool is_cyclic_by_count(const Graph& g) {
  // An undirected graph is acyclic iff edge count == n - component count.
  auto labels = g.component_labels();
  std::set<int> roots(labels.begin(), labels.end());
  return static_cast<int>(g.edges.size()) > g.n - static_cast<int>(roots.size());
}

Graph spanning_forest(const Graph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.n));
  for (int i = 0; i < g.n; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  };
  std::vector<Edge> kept;
  for (const auto& e : g.edges) {
    int ru = find(e.u), rv = find(e.v);
    if (ru != rv) {
      parent[static_cast<std::size_t>(std::max(ru, rv))] = std::min(ru, rv);
      kept.push_back(e);
    }
  }
  return Graph::make(false, false, g.n, std::move(kept));
}

TaskInstance make_connectivity(Difficulty difficulty, std::uint64_t seed,
                               const GenConfig& cfg, int n, Rng& rng) {
  double p = cfg.edge_prob(Task::Connectivity, difficulty);
  bool want_connected = rng.coin();
  Graph g = Graph::make(false, false, n, sample_undirected_edges(rng, n, p));

  if (want_connected) {
    auto labels = g.component_labels();
    std::map<int, int> sizes;
    for (int l : labels) ++sizes[l];
    std::vector<int> usable;  // nodes inside components of size >= 2
    for (int i = 0; i < n; ++i) {
      if (sizes[labels[static_cast<std::size_t>(i)]] >= 2) usable.push_back(i);
    }
    if (usable.empty()) {
      // All nodes isolated; plant one edge so a positive pair exists.
      auto edges = g.edges;
      edges.push_back({0, 1});
      g = Graph::make(false, false, n, std::move(edges));
      labels = g.component_labels();
      usable = {0, 1};
    }
    int u = rng.pick(usable);
    auto comp = nodes_of_component(labels, labels[static_cast<std::size_t>(u)]);
    comp.erase(std::remove(comp.begin(), comp.end(), u), comp.end());
    int v = rng.pick(comp);
    return {Task::Connectivity, difficulty, std::move(g), PairQuery{u, v}, seed};
  }

  auto labels = g.component_labels();
  if (std::set<int>(labels.begin(), labels.end()).size() < 2) {
    // Connected graph: cut a random proper subset off to create a second
    // component, deterministically from the instance stream.
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    rng.shuffle(order);
    int cut = rng.range(1, n - 1);
    std::set<int> side(order.begin(), order.begin() + cut);
    std::vector<Edge> kept;
    for (const auto& e : g.edges) {
      if (side.count(e.u) == side.count(e.v)) kept.push_back(e);
    }
    g = Graph::make(false, false, n, std::move(kept));
    labels = g.component_labels();
  }
  int u = rng.range(0, n - 1);
  std::vector<int> others;
  for (int i = 0; i < n; ++i) {
    if (labels[static_cast<std::size_t>(i)] != labels[static_cast<std::size_t>(u)]) {
      others.push_back(i);
    }
  }
  int v = rng.pick(others);
  return {Task::Connectivity, difficulty, std::move(g), PairQuery{u, v}, seed};
}

TaskInstance make_cycle(Difficulty difficulty, std::uint64_t seed,
                        const GenConfig& cfg, int n, Rng& rng) {
  double p = cfg.edge_prob(Task::Cycle, difficulty);
  bool want_cycle = rng.coin();
  Graph g = Graph::make(false, false, n, sample_undirected_edges(rng, n, p));

  if (!want_cycle) {
    if (is_cyclic_by_count(g)) g = spanning_forest(g);
    return {Task::Cycle, difficulty, std::move(g), std::monostate{}, seed};
  }
  if (is_cyclic_by_count(g)) {
    return {Task::Cycle, difficulty, std::move(g), std::monostate{}, seed};
  }
  // Acyclic; close one cycle. Any tree component with >= 3 nodes has a node
  // of degree >= 2 whose neighbors are non-adjacent.
  auto adj = g.adjacency();
  std::vector<int> centers;
  for (int i = 0; i < n; ++i) {
    if (adj[static_cast<std::size_t>(i)].size() >= 2) centers.push_back(i);
  }
  auto edges = g.edges;
  if (!centers.empty()) {
    int c = rng.pick(centers);
    const auto& nb = adj[static_cast<std::size_t>(c)];
    int a = nb[static_cast<std::size_t>(rng.below(nb.size()))];
    int b = a;
    while (b == a) b = nb[static_cast<std::size_t>(rng.below(nb.size()))];
    edges.push_back({std::min(a, b), std::max(a, b)});
  } else {
    // Components are single nodes or single edges; build a triangle.
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    rng.shuffle(order);
    int a = order[0], b = order[1], c = order[2];
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, c}, std::pair{a, c}}) {
      if (!g.has_edge(x, y)) edges.push_back({std::min(x, y), std::max(x, y)});
    }
  }
  g = Graph::make(false, false, n, std::move(edges));
  return {Task::Cycle, difficulty, std::move(g), std::monostate{}, seed};
}

TaskInstance make_topo(Difficulty difficulty, std::uint64_t seed,
                       const GenConfig& cfg, int n, Rng& rng) {
  double p = cfg.edge_prob(Task::TopoSort, difficulty);
  // Edges are drawn consistent with a hidden random order, so the graph is
  // acyclic by construction.
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  rng.shuffle(order);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.chance(p)) {
        edges.push_back({order[static_cast<std::size_t>(i)],
                         order[static_cast<std::size_t>(j)]});
      }
    }
  }
  Graph g = Graph::make(true, false, n, std::move(edges));
  return {Task::TopoSort, difficulty, std::move(g), std::monostate{}, seed};
}

TaskInstance make_shortest_path(Difficulty difficulty, std::uint64_t seed,
                                const GenConfig& cfg, int n, Rng& rng) {
  double p = cfg.edge_prob(Task::ShortestPath, difficulty);
  std::vector<Edge> edges = sample_undirected_edges(rng, n, p);
  for (auto& e : edges) e.w = sample_weight(rng, cfg);
  Graph g = Graph::make(false, true, n, std::move(edges));

  auto labels = g.component_labels();
  std::map<int, int> sizes;
  for (int l : labels) ++sizes[l];
  std::vector<int> usable;
  for (int i = 0; i < n; ++i) {
    if (sizes[labels[static_cast<std::size_t>(i)]] >= 2) usable.push_back(i);
  }
  if (usable.empty()) {
    auto es = g.edges;
    es.push_back({0, 1, sample_weight(rng, cfg)});
    g = Graph::make(false, true, n, std::move(es));
    labels = g.component_labels();
    usable = {0, 1};
  }
  int u = rng.pick(usable);
  auto comp = nodes_of_component(labels, labels[static_cast<std::size_t>(u)]);
  comp.erase(std::remove(comp.begin(), comp.end(), u), comp.end());
  int v = rng.pick(comp);
  return {Task::ShortestPath, difficulty, std::move(g), PairQuery{u, v}, seed};
}

TaskInstance make_max_flow(Difficulty difficulty, std::uint64_t seed,
                           const GenConfig& cfg, int n, Rng& rng) {
  double p = cfg.edge_prob(Task::MaxFlow, difficulty);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && rng.chance(p)) edges.push_back({u, v, sample_capacity(rng, cfg)});
    }
  }
  Graph g = Graph::make(true, true, n, std::move(edges));

  // Reachability over directed edges, so the max flow is positive.
  auto reachable_from = [&](int s) {
    auto adj = g.adjacency();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack = {s};
    seen[static_cast<std::size_t>(s)] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[static_cast<std::size_t>(x)]) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          stack.push_back(y);
        }
      }
    }
    return seen;
  };

  int source = rng.range(0, n - 1);
  auto seen = reachable_from(source);
  std::vector<int> sinks;
  for (int i = 0; i < n; ++i) {
    if (i != source && seen[static_cast<std::size_t>(i)]) sinks.push_back(i);
  }
  for (int attempt = 0; sinks.empty() && attempt < n; ++attempt) {
    source = rng.range(0, n - 1);
    seen = reachable_from(source);
    for (int i = 0; i < n; ++i) {
      if (i != source && seen[static_cast<std::size_t>(i)]) sinks.push_back(i);
    }
  }
  if (sinks.empty()) {
    // No directed path anywhere (graph essentially empty): plant one edge.
    int sink = (source + 1) % n;
    auto es = g.edges;
    es.push_back({source, sink, sample_capacity(rng, cfg)});
    g = Graph::make(true, true, n, std::move(es));
    return {Task::MaxFlow, difficulty, std::move(g), FlowQuery{source, sink}, seed};
  }
  int sink = rng.pick(sinks);
  return {Task::MaxFlow, difficulty, std::move(g), FlowQuery{source, sink}, seed};
}

TaskInstance make_matching(Difficulty difficulty, std::uint64_t seed,
                           const GenConfig& cfg, int n, Rng& rng) {
  double p = cfg.edge_prob(Task::Matching, difficulty);
  int jitter = rng.range(-2, 2);
  int left = std::clamp(n / 2 + jitter, 2, n - 2);
  std::vector<Edge> edges;
  for (int u = 0; u < left; ++u) {
    for (int v = left; v < n; ++v) {
      if (rng.chance(p)) edges.push_back({u, v});
    }
  }
  if (edges.empty()) edges.push_back({rng.range(0, left - 1), rng.range(left, n - 1)});
  Graph g = Graph::make(false, false, n, std::move(edges));
  return {Task::Matching, difficulty, std::move(g), MatchingQuery{left}, seed};
}

TaskInstance make_hamilton(Difficulty difficulty, std::uint64_t seed,
                           const GenConfig& cfg, int n, Rng& rng) {
  double p = cfg.edge_prob(Task::Hamilton, difficulty);
  // Plant a Hamilton path, then sprinkle extra edges.
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  rng.shuffle(order);
  std::set<std::pair<int, int>> present;
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) {
    int a = order[static_cast<std::size_t>(i)], b = order[static_cast<std::size_t>(i + 1)];
    present.insert({std::min(a, b), std::max(a, b)});
    edges.push_back({a, b});
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!present.count({u, v}) && rng.chance(p)) edges.push_back({u, v});
    }
  }
  Graph g = Graph::make(false, false, n, std::move(edges));
  return {Task::Hamilton, difficulty, std::move(g), std::monostate{}, seed};
}

TaskInstance make_gnn(Difficulty difficulty, std::uint64_t seed,
                      const GenConfig& cfg, int n, Rng& rng) {
  double p = cfg.edge_prob(Task::Gnn, difficulty);
  Graph g = Graph::make(false, false, n, sample_undirected_edges(rng, n, p));
  GnnQuery q;
  q.layers = cfg.gnn_layers;
  q.initial.resize(static_cast<std::size_t>(n));
  for (auto& vec : q.initial) {
    vec[0] = rng.range(cfg.embedding_min, cfg.embedding_max);
    vec[1] = rng.range(cfg.embedding_min, cfg.embedding_max);
  }
  return {Task::Gnn, difficulty, std::move(g), std::move(q), seed};
}

}  // namespace

TaskInstance sample_instance(Task task, Difficulty difficulty, std::uint64_t seed,
                             const GenConfig& config) {
  const CellSpec* cell = cell_spec(task, difficulty);
  if (cell == nullptr) {
    throw InvalidCell("difficulty " + to_string(difficulty) +
                      " is not defined for task " + to_string(task));
  }
  Rng rng(mix_seed(seed, (static_cast<std::uint64_t>(task) << 8) |
                             static_cast<std::uint64_t>(difficulty)));
  int n = rng.range(cell->min_nodes, cell->max_nodes);
  switch (task) {
    case Task::Connectivity: return make_connectivity(difficulty, seed, config, n, rng);
    case Task::Cycle: return make_cycle(difficulty, seed, config, n, rng);
    case Task::TopoSort: return make_topo(difficulty, seed, config, n, rng);
    case Task::ShortestPath: return make_shortest_path(difficulty, seed, config, n, rng);
    case Task::MaxFlow: return make_max_flow(difficulty, seed, config, n, rng);
    case Task::Matching: return make_matching(difficulty, seed, config, n, rng);
    case Task::Hamilton: return make_hamilton(difficulty, seed, config, n, rng);
    case Task::Gnn: return make_gnn(difficulty, seed, config, n, rng);
  }
  throw InvalidCell("unknown task");
}

}  // namespace gundam

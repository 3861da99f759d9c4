#include "gundam/brute_force.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "gundam/errors.hpp"

namespace gundam {
namespace {

// Enumerates simple paths from u by DFS; returns true as soon as v is hit.
bool any_simple_path(const std::vector<std::vector<int>>& adj, std::vector<bool>& used,
                     int u, int v) {
  if (u == v) return true;
  used[static_cast<std::size_t>(u)] = true;
  for (int w : adj[static_cast<std::size_t>(u)]) {
    if (!used[static_cast<std::size_t>(w)] && any_simple_path(adj, used, w, v)) {
      used[static_cast<std::size_t>(u)] = false;
      return true;
    }
  }
  used[static_cast<std::size_t>(u)] = false;
  return false;
}

void min_path_weight(const Graph& g, const std::vector<std::vector<int>>& adj,
                     std::vector<bool>& used, int u, int v, Weight acc,
                     std::optional<Weight>& best) {
  if (u == v) {
    if (!best || acc < *best) best = acc;
    return;
  }
  used[static_cast<std::size_t>(u)] = true;
  for (int w : adj[static_cast<std::size_t>(u)]) {
    if (used[static_cast<std::size_t>(w)]) continue;
    min_path_weight(g, adj, used, w, v, acc + *g.edge_weight(u, w), best);
  }
  used[static_cast<std::size_t>(u)] = false;
}

bool order_respects_edges(const std::vector<int>& order, const Graph& g) {
  std::vector<int> pos(static_cast<std::size_t>(g.n));
  for (int i = 0; i < g.n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  for (const auto& e : g.edges) {
    if (pos[static_cast<std::size_t>(e.u)] >= pos[static_cast<std::size_t>(e.v)]) return false;
  }
  return true;
}

bool perm_is_hamilton_path(const std::vector<int>& order, const Graph& g) {
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    if (!g.has_edge(order[i], order[i + 1])) return false;
  }
  return true;
}

}  // namespace

int brute_force_node_bound(Task task) {
  switch (task) {
    case Task::TopoSort:
    case Task::Matching:
    case Task::Hamilton:
      return 8;
    default:
      return 10;
  }
}

OracleAnswer brute_force_oracle(const TaskInstance& instance) {
  const Graph& g = instance.graph;
  if (g.n > brute_force_node_bound(instance.task)) {
    throw TooLarge("brute-force oracle limited to n <= " +
                   std::to_string(brute_force_node_bound(instance.task)) +
                   " for task " + to_string(instance.task));
  }
  OracleAnswer out;
  switch (instance.task) {
    case Task::Connectivity: {
      const auto& q = std::get<PairQuery>(instance.query);
      auto adj = g.adjacency();
      std::vector<bool> used(static_cast<std::size_t>(g.n), false);
      out.truth = any_simple_path(adj, used, q.u, q.v);
      break;
    }
    case Task::Cycle: {
      auto labels = g.component_labels();
      std::set<int> roots(labels.begin(), labels.end());
      out.truth = static_cast<int>(g.edges.size()) > g.n - static_cast<int>(roots.size());
      break;
    }
    case Task::ShortestPath: {
      const auto& q = std::get<PairQuery>(instance.query);
      auto adj = g.adjacency();
      std::vector<bool> used(static_cast<std::size_t>(g.n), false);
      std::optional<Weight> best;
      min_path_weight(g, adj, used, q.u, q.v, Weight{}, best);
      out.truth = best.has_value();
      if (best) out.weight = *best;
      break;
    }
    case Task::TopoSort: {
      std::vector<int> order(static_cast<std::size_t>(g.n));
      std::iota(order.begin(), order.end(), 0);
      bool found = false;
      do {
        if (order_respects_edges(order, g)) {
          found = true;
          break;
        }
      } while (std::next_permutation(order.begin(), order.end()));
      out.truth = found;
      break;
    }
    case Task::MaxFlow: {
      // Max-flow equals the minimum capacity over all s-t cuts.
      const auto& q = std::get<FlowQuery>(instance.query);
      std::vector<int> others;
      for (int i = 0; i < g.n; ++i) {
        if (i != q.source && i != q.sink) others.push_back(i);
      }
      Weight best{std::numeric_limits<std::int64_t>::max()};
      const std::size_t count = std::size_t{1} << others.size();
      for (std::size_t mask = 0; mask < count; ++mask) {
        std::vector<bool> in_source_side(static_cast<std::size_t>(g.n), false);
        in_source_side[static_cast<std::size_t>(q.source)] = true;
        for (std::size_t i = 0; i < others.size(); ++i) {
          if (mask & (std::size_t{1} << i)) {
            in_source_side[static_cast<std::size_t>(others[i])] = true;
          }
        }
        Weight cut{};
        for (const auto& e : g.edges) {
          if (in_source_side[static_cast<std::size_t>(e.u)] &&
              !in_source_side[static_cast<std::size_t>(e.v)]) {
            cut += e.w;
          }
        }
        best = min(best, cut);
      }
      out.weight = best;
      break;
    }
    case Task::Matching: {
      const std::size_t count = std::size_t{1} << g.edges.size();
      int best = 0;
      for (std::size_t mask = 0; mask < count; ++mask) {
        std::vector<bool> node_used(static_cast<std::size_t>(g.n), false);
        bool ok = true;
        int sz = 0;
        for (std::size_t i = 0; ok && i < g.edges.size(); ++i) {
          if (!(mask & (std::size_t{1} << i))) continue;
          const auto& e = g.edges[i];
          if (node_used[static_cast<std::size_t>(e.u)] ||
              node_used[static_cast<std::size_t>(e.v)]) {
            ok = false;
          } else {
            node_used[static_cast<std::size_t>(e.u)] = true;
            node_used[static_cast<std::size_t>(e.v)] = true;
            ++sz;
          }
        }
        if (ok) best = std::max(best, sz);
      }
      out.size = best;
      break;
    }
    case Task::Hamilton: {
      std::vector<int> order(static_cast<std::size_t>(g.n));
      std::iota(order.begin(), order.end(), 0);
      bool found = false;
      do {
        if (perm_is_hamilton_path(order, g)) {
          found = true;
          break;
        }
      } while (std::next_permutation(order.begin(), order.end()));
      out.truth = found;
      break;
    }
    case Task::Gnn: {
      const auto& q = std::get<GnnQuery>(instance.query);
      if (static_cast<int>(q.initial.size()) != g.n) {
        throw DimensionMismatch("initial embedding table size != node count");
      }
      // X_{l+1} = A X_l with an explicit 0/1 adjacency matrix.
      std::vector<std::vector<std::int64_t>> a(
          static_cast<std::size_t>(g.n), std::vector<std::int64_t>(static_cast<std::size_t>(g.n), 0));
      for (const auto& e : g.edges) {
        a[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
        a[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
      }
      std::vector<EmbeddingVec> x = q.initial;
      for (int layer = 0; layer < q.layers; ++layer) {
        std::vector<EmbeddingVec> next(static_cast<std::size_t>(g.n), EmbeddingVec{0, 0});
        for (int i = 0; i < g.n; ++i) {
          for (int j = 0; j < g.n; ++j) {
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
              next[static_cast<std::size_t>(i)][0] += x[static_cast<std::size_t>(j)][0];
              next[static_cast<std::size_t>(i)][1] += x[static_cast<std::size_t>(j)][1];
            }
          }
        }
        x = std::move(next);
      }
      out.embeddings = std::move(x);
      break;
    }
  }
  return out;
}

}  // namespace gundam

#include "gundam/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gundam {

std::string Weight::str() const {
  std::int64_t t = tenths;
  std::string sign;
  if (t < 0) {
    sign = "-";
    t = -t;
  }
  if (t % 10 == 0) return sign + std::to_string(t / 10);
  return sign + std::to_string(t / 10) + "." + std::to_string(t % 10);
}

Weight min(Weight a, Weight b) { return a < b ? a : b; }

Graph Graph::make(bool directed, bool weighted, int n, std::vector<Edge> edges) {
  if (!directed) {
    for (auto& e : edges) {
      if (e.u > e.v) std::swap(e.u, e.v);
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair{a.u, a.v} < std::pair{b.u, b.v};
  });
  return Graph{directed, weighted, n, std::move(edges)};
}

bool Graph::has_edge(int u, int v) const {
  return edge_weight(u, v).has_value();
}

std::optional<Weight> Graph::edge_weight(int u, int v) const {
  for (const auto& e : edges) {
    if (e.u == u && e.v == v) return e.w;
    if (!directed && e.u == v && e.v == u) return e.w;
  }
  return std::nullopt;
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(std::max(n, 0)));
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) continue;
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    if (!directed) adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

std::vector<std::vector<int>> Graph::in_adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(std::max(n, 0)));
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) continue;
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    if (!directed) adj[static_cast<std::size_t>(e.u)].push_back(e.v);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(std::max(n, 0)), 0);
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) continue;
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  return deg;
}

std::vector<int> Graph::component_labels() const {
  std::vector<int> parent(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) continue;
    int ru = find(e.u), rv = find(e.v);
    if (ru != rv) parent[static_cast<std::size_t>(std::max(ru, rv))] = std::min(ru, rv);
  }
  std::vector<int> label(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) label[static_cast<std::size_t>(i)] = find(i);
  return label;
}

std::vector<Violation> validate(const Graph& g) {
  std::vector<Violation> out;
  std::set<std::pair<int, int>> seen;
  for (const auto& e : g.edges) {
    if (e.u < 0 || e.u >= g.n || e.v < 0 || e.v >= g.n) {
      out.push_back({Violation::Kind::NodeIdOutOfRange,
                     "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                         ") references a node outside 0.." + std::to_string(g.n - 1)});
    }
    if (e.u == e.v) {
      out.push_back({Violation::Kind::SelfLoop,
                     "self-loop at node " + std::to_string(e.u)});
    }
    std::pair<int, int> key =
        g.directed ? std::pair{e.u, e.v}
                   : std::pair{std::min(e.u, e.v), std::max(e.u, e.v)};
    if (!seen.insert(key).second) {
      out.push_back({Violation::Kind::DuplicateEdge,
                     "duplicate edge (" + std::to_string(e.u) + ", " +
                         std::to_string(e.v) + ")"});
    }
    if (g.weighted && e.w.tenths <= 0) {
      out.push_back({Violation::Kind::NonPositiveWeight,
                     "non-positive weight " + e.w.str() + " on edge (" +
                         std::to_string(e.u) + ", " + std::to_string(e.v) + ")"});
    }
  }
  return out;
}

}  // namespace gundam
